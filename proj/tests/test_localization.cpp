#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "framescope/errors.hpp"
#include "framescope/fixtures.hpp"
#include "framescope/localization.hpp"
#include "framescope/rng.hpp"
#include "test_support.hpp"

using namespace framescope;
using testsupport::max_diff;

namespace {

// Exact smallest enclosing disk by exhausting the candidate support sets:
// every pair's diameter disk and every triple's circumscribed disk.  Cubic,
// fine for test sizes, and independent of the library's recursion.
Disk brute_min_disk(const std::vector<Complex>& pts) {
    const double eps = 1e-12;
    Disk best{Complex(0.0, 0.0), std::numeric_limits<double>::infinity()};
    auto covers = [&](const Disk& d) {
        for (const Complex p : pts)
            if (std::abs(p - d.center) > d.radius + eps * (1.0 + d.radius))
                return false;
        return true;
    };
    if (pts.size() == 1) return {pts[0], 0.0};
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Disk d{0.5 * (pts[i] + pts[j]), 0.5 * std::abs(pts[i] - pts[j])};
            if (covers(d) && d.radius < best.radius) best = d;
        }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const Complex a = pts[i], b = pts[j], c = pts[k];
                const double det = 2.0 * ((b.real() - a.real()) * (c.imag() - a.imag()) -
                                          (b.imag() - a.imag()) * (c.real() - a.real()));
                if (std::abs(det) < 1e-14) continue;  // collinear
                const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
                const double ux = ((nb - na) * (c.imag() - a.imag()) -
                                   (nc - na) * (b.imag() - a.imag())) / det;
                const double uy = ((nc - na) * (b.real() - a.real()) -
                                   (nb - na) * (c.real() - a.real())) / det;
                const Disk d{Complex(ux, uy), std::abs(a - Complex(ux, uy))};
                if (covers(d) && d.radius < best.radius) best = d;
            }
    return best;
}

std::vector<Complex> random_points(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> pts;
    for (std::size_t i = 0; i < count; ++i)
        pts.emplace_back(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    return pts;
}

}  // namespace

TEST_CASE("minimal disk matches the exhaustive oracle") {
    for (std::uint64_t seed = 501; seed < 521; ++seed) {
        const auto pts = random_points(2 + seed % 9, seed);
        const Disk got = min_enclosing_disk(pts);
        const Disk want = brute_min_disk(pts);
        CHECK(got.radius == doctest::Approx(want.radius).epsilon(1e-10));
        CHECK(std::abs(got.center - want.center) <= 1e-9 * (1.0 + want.radius));
        for (const Complex p : pts)
            CHECK(std::abs(p - got.center) <= got.radius + 1e-10 * (1.0 + got.radius));
    }
}

TEST_CASE("minimal disk degenerate inputs") {
    const std::vector<Complex> one{Complex(3.0, -4.0)};
    const Disk d1 = min_enclosing_disk(one);
    CHECK(d1.center == Complex(3.0, -4.0));
    CHECK(d1.radius == 0.0);

    const std::vector<Complex> two{Complex(-1.0, 0.0), Complex(1.0, 0.0)};
    const Disk d2 = min_enclosing_disk(two);
    CHECK(std::abs(d2.center) <= 1e-15);
    CHECK(d2.radius == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(min_enclosing_disk(std::vector<Complex>{}), DomainError);
}

TEST_CASE("disk margins are signed distances to the circle") {
    const SpectralRegion disk = SpectralRegion::make_disk(Complex(1.0, 1.0), 2.0);
    CHECK(disk.kind() == SpectralRegion::Kind::disk);
    CHECK(disk.margin(Complex(1.0, 1.0)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(disk.margin(Complex(3.0, 1.0)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(disk.margin(Complex(4.0, 1.0)) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK_THROWS_AS(SpectralRegion::make_disk(Complex(0.0, 0.0), -1.0), DomainError);
    CHECK_THROWS_AS(disk.vertices(), DomainError);
}

TEST_CASE("hull margins agree with half-plane and distance oracles") {
    // Right triangle 0, 1, i.
    const SpectralRegion hull = SpectralRegion::make_hull(
        {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 1.0)});
    CHECK(hull.kind() == SpectralRegion::Kind::convex_hull);
    CHECK(hull.vertices().size() == 3);
    CHECK_THROWS_AS(hull.disk(), DomainError);

    // Interior point: margin is the least distance to the three edges.
    const Complex z(0.25, 0.25);
    const double to_legs = 0.25;
    const double to_hyp = (1.0 - 0.25 - 0.25) / std::sqrt(2.0);
    CHECK(hull.margin(z) ==
          doctest::Approx(std::min(to_legs, to_hyp)).epsilon(1e-12));

    // Outside across an edge and outside past a vertex.
    CHECK(hull.margin(Complex(0.5, -0.5)) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(hull.margin(Complex(2.0, 0.0)) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(hull.margin(Complex(1.0, 1.0)) ==
          doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("degenerate hulls have empty interior") {
    const SpectralRegion point = SpectralRegion::make_hull({Complex(2.0, 0.0)});
    CHECK(point.margin(Complex(2.0, 0.0)) == 0.0);
    CHECK(point.margin(Complex(2.0, 1.0)) == doctest::Approx(-1.0).epsilon(1e-15));

    const SpectralRegion segment = SpectralRegion::make_hull(
        {Complex(-1.0, 0.0), Complex(1.0, 0.0)});
    CHECK(segment.margin(Complex(0.0, 0.0)) == 0.0);
    CHECK(segment.margin(Complex(0.0, 0.5)) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(segment.margin(Complex(2.0, 0.0)) == doctest::Approx(-1.0).epsilon(1e-12));

    // Collinear symbol values collapse to a segment of two extreme vertices.
    const SpectralRegion collinear = region_convex_hull(Symbol(
        std::vector<Complex>{{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}}));
    CHECK(collinear.vertices().size() == 2);
    CHECK(collinear.margin(Complex(1.0, 0.25)) ==
          doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("hull construction rejects bad input") {
    CHECK_THROWS_AS(SpectralRegion::make_hull({}), DomainError);
}

TEST_CASE("symbol-disk localization scales the symbol disk by the gram norm") {
    Rng rng(530);
    auto [phi, psi] = dual_pair_system(4, 8, rng);
    Rng sym_rng = rng.split(9);
    const Symbol m = random_symbol_in_disk(8, Complex(0.5, -0.25), 1.5, sym_rng);

    const SpectralRegion region = region_symbol_disk(m, phi, psi);
    REQUIRE(region.kind() == SpectralRegion::Kind::disk);

    const double gram = operator_norm(cross_gram(phi, psi), 1e-12);
    std::vector<Complex> values = m.values();
    const Disk base = min_enclosing_disk(values);
    CHECK(region.disk().center == base.center);
    CHECK(region.disk().radius ==
          doctest::Approx(base.radius * gram).epsilon(1e-12));

    // The certified region really contains the spectrum.
    const ComplexMatrix t = multiplier_matrix(m, phi, psi);
    const ContainmentCertificate cert = certify(region, t, 1e-8);
    CHECK(cert.overall);
    for (double margin : cert.margins) CHECK(margin >= -1e-8);
}

TEST_CASE("symbol-disk localization accepts a caller disk and checks it") {
    Rng rng(531);
    auto [phi, psi] = dual_pair_system(3, 6, rng);
    Rng sym_rng = rng.split(9);
    const Symbol m = random_symbol_in_disk(6, Complex(0.0, 0.0), 1.0, sym_rng);

    const SpectralRegion region =
        region_symbol_disk(m, phi, psi, Disk{Complex(0.0, 0.0), 1.0});
    const double gram = operator_norm(cross_gram(phi, psi), 1e-12);
    CHECK(region.disk().radius == doctest::Approx(gram).epsilon(1e-12));

    try {
        region_symbol_disk(m, phi, psi, Disk{Complex(40.0, 0.0), 0.5});
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("symbol value") != std::string::npos);
        CHECK(msg.find("outside radius") != std::string::npos);
    }
}

TEST_CASE("symbol-disk localization insists on duality") {
    Rng rng(532);
    Rng phi_rng = rng.split(1);
    Rng psi_rng = rng.split(2);
    const FrameSystem phi = gaussian_system(3, 6, phi_rng);
    const FrameSystem psi = gaussian_system(3, 6, psi_rng);
    Rng sym_rng = rng.split(3);
    const Symbol m = random_symbol(6, 1.0, sym_rng);

    try {
        region_symbol_disk(m, phi, psi);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("dual") != std::string::npos);
    }
}

TEST_CASE("constant symbols give zero-radius regions and exact spectra") {
    Rng rng(533);
    auto [phi, psi] = dual_pair_system(4, 7, rng);
    const Complex c(0.75, -0.5);
    const Symbol m(std::vector<Complex>(7, c));

    const SpectralRegion region = region_symbol_disk(m, phi, psi);
    CHECK(std::abs(region.disk().center - c) <= 1e-14);
    CHECK(region.disk().radius <= 1e-12);

    // M_c = c * D C = c * I for a dual pair.
    const ComplexMatrix t = multiplier_matrix(m, phi, psi);
    const ContainmentCertificate cert = certify(region, t, 1e-8);
    CHECK(cert.overall);
    for (const Complex z : cert.eigenvalues) CHECK(std::abs(z - c) <= 1e-9);
}

TEST_CASE("real-symbol localization centers on the midrange") {
    Rng rng(534);
    auto [phi, psi] = dual_pair_system(3, 6, rng);
    const Symbol m(std::vector<Complex>{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0},
                                        {0.0, 0.0}, {0.5, 0.0}, {0.25, 0.0}});

    const SpectralRegion region = region_real_symbol(m, phi, psi);
    const double gram = operator_norm(cross_gram(phi, psi), 1e-12);
    CHECK(region.disk().center == Complex(0.5, 0.0));
    CHECK(region.disk().radius == doctest::Approx(0.5 * gram).epsilon(1e-12));

    const ContainmentCertificate cert =
        certify(region, multiplier_matrix(m, phi, psi), 1e-8);
    CHECK(cert.overall);

    const Symbol not_real(std::vector<Complex>(6, Complex(0.0, 1.0)));
    CHECK_THROWS_AS(region_real_symbol(not_real, phi, psi), DomainError);
}

TEST_CASE("canonical-dual localization is the hull of the symbol") {
    const SpectralRegion tri = region_convex_hull(
        Symbol(std::vector<Complex>{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {0.4, 0.3}}));
    REQUIRE(tri.kind() == SpectralRegion::Kind::convex_hull);
    CHECK(tri.vertices().size() == 3);  // the interior value drops out

    Rng rng(535);
    auto [phi, psi] = dual_pair_system(4, 9, rng);
    Rng sym_rng = rng.split(7);
    const Symbol m = random_real_symbol(9, 1.0, sym_rng);
    const SpectralRegion hull = region_convex_hull(m);
    const ContainmentCertificate cert =
        certify(hull, multiplier_matrix(m, phi, psi), 1e-8);
    CHECK(cert.overall);
}

TEST_CASE("certify reports one margin per eigenvalue") {
    ComplexMatrix t(3, 3);
    t(0, 0) = Complex(1.0, 0.0);
    t(1, 1) = Complex(0.0, 2.0);
    t(2, 2) = Complex(-1.0, 0.0);

    const SpectralRegion disk = SpectralRegion::make_disk(Complex(0.0, 0.0), 2.0);
    const ContainmentCertificate cert = certify(disk, t, 1e-10);
    REQUIRE(cert.eigenvalues.size() == 3);
    REQUIRE(cert.margins.size() == 3);
    CHECK(cert.overall);
    CHECK(cert.tol == 1e-10);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(cert.margins[i] ==
              doctest::Approx(2.0 - std::abs(cert.eigenvalues[i])).epsilon(1e-12));

    const SpectralRegion tight = SpectralRegion::make_disk(Complex(0.0, 0.0), 1.5);
    const ContainmentCertificate failing = certify(tight, t, 1e-10);
    CHECK_FALSE(failing.overall);

    // Within tolerance still passes: margin -tol/2 is accepted.
    const SpectralRegion barely =
        SpectralRegion::make_disk(Complex(0.0, 0.0), 2.0 - 5e-11);
    CHECK(certify(barely, t, 1e-10).overall);

    CHECK_THROWS_AS(certify(disk, t, -1.0), DomainError);
}

TEST_CASE("subtracting the symbol center shifts the multiplier spectrum") {
    Rng rng(536);
    auto [phi, psi] = dual_pair_system(4, 8, rng);
    Rng sym_rng = rng.split(5);
    const Complex mu(0.3, 0.7);
    const Symbol m = random_symbol_in_disk(8, mu, 0.8, sym_rng);

    std::vector<Complex> centered_values = m.values();
    for (Complex& v : centered_values) v -= mu;
    const Symbol centered(std::move(centered_values));

    // M_{m - mu} = M_m - mu I exactly when D C = I.
    const ComplexMatrix lhs = multiplier_matrix(centered, phi, psi);
    const ComplexMatrix rhs =
        shift_diagonal(multiplier_matrix(m, phi, psi), mu);
    CHECK(max_diff(lhs, rhs) <= 1e-10 * std::max(1.0, frobenius_norm(rhs)));
}

TEST_CASE("the hull region nests inside the gram-norm disk scale") {
    for (std::uint64_t seed = 540; seed < 546; ++seed) {
        Rng rng(seed);
        auto [phi, psi] = dual_pair_system(3 + seed % 3, 8, rng);
        const double gram = operator_norm(cross_gram(phi, psi), 1e-12);
        const FrameBounds bp = frame_bounds(phi);
        const FrameBounds bq = frame_bounds(psi);
        CHECK(gram <= (1.0 + 1e-9) * std::sqrt(bp.upper * bq.upper));
    }
}

TEST_CASE("default certificate tolerance tracks the radius") {
    CHECK(default_certificate_tol(0.0) == doctest::Approx(1e-8).epsilon(1e-12));
    CHECK(default_certificate_tol(9.0) == doctest::Approx(1e-7).epsilon(1e-12));
    CHECK(default_certificate_tol(9.0) > default_certificate_tol(1.0));
}
