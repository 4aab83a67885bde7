#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "framescope/errors.hpp"
#include "framescope/fixtures.hpp"
#include "framescope/io.hpp"
#include "framescope/report.hpp"
#include "framescope/rng.hpp"
#include "test_support.hpp"

using namespace framescope;
using testsupport::max_diff;

namespace {

// Fresh scratch directory per process; doctest runs cases in one process so
// a counter keeps file names unique.
std::filesystem::path scratch_file(const std::string& stem) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() / "framescope-io-tests";
    std::filesystem::create_directories(dir);
    return dir / (stem + "-" + std::to_string(counter++) + ".json");
}

}  // namespace

TEST_CASE("frame files round trip exactly") {
    Rng rng(701);
    FrameSystem original = gaussian_system(4, 7, rng);
    original.set_label("round-trip");

    const auto path = scratch_file("frame");
    save_frame(original, path);
    const FrameSystem loaded = load_frame(path);

    CHECK(loaded.dim() == 4);
    CHECK(loaded.count() == 7);
    CHECK(loaded.label() == "round-trip");
    CHECK(max_diff(synthesis_matrix(loaded), synthesis_matrix(original)) == 0.0);
}

TEST_CASE("symbol files round trip exactly") {
    Rng rng(702);
    const Symbol original = random_symbol(9, 2.0, rng);
    const auto path = scratch_file("symbol");
    save_symbol(original, path);
    const Symbol loaded = load_symbol(path);

    REQUIRE(loaded.size() == 9);
    for (std::size_t k = 0; k < 9; ++k) CHECK(loaded[k] == original[k]);
    CHECK(loaded.sup_modulus() == original.sup_modulus());
    CHECK(loaded.is_real() == original.is_real());
}

TEST_CASE("window files round trip exactly") {
    Rng rng(703);
    const CyclicWindow original = random_window(12, rng);
    const auto path = scratch_file("window");
    save_window(original, path);
    const CyclicWindow loaded = load_window(path);

    REQUIRE(loaded.size() == 12);
    for (std::size_t x = 0; x < 12; ++x) CHECK(loaded[x] == original[x]);
}

TEST_CASE("loaders name the failing field") {
    const auto p1 = scratch_file("bad");
    write_text_file(p1, "{ \"dim\": 2 }");
    try {
        load_frame(p1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("vectors") != std::string::npos);
    }

    const auto p2 = scratch_file("bad");
    write_text_file(p2, "{ \"label\": \"x\", \"dim\": 2, \"vectors\": [ [ [0, 0] ] ] }");
    try {
        load_frame(p2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        // The short row is named by index.
        CHECK(std::string(e.what()).find("0") != std::string::npos);
    }

    const auto p3 = scratch_file("bad");
    write_text_file(p3, "{ \"values\": [ [0, 0], [1] ] }");
    CHECK_THROWS_AS(load_symbol(p3), ParseError);

    const auto p4 = scratch_file("bad");
    write_text_file(p4, "{ \"N\": 3, \"samples\": [ [0, 0] ] }");
    try {
        load_window(p4);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("samples") != std::string::npos);
    }

    const auto p5 = scratch_file("bad");
    write_text_file(p5, "not json at all");
    CHECK_THROWS_AS(load_frame(p5), ParseError);

    CHECK_THROWS_AS(load_frame("/nonexistent/no-such-file.json"), ParseError);
}

TEST_CASE("non-finite payloads are rejected on load") {
    const auto path = scratch_file("nan");
    write_text_file(path,
                    "{ \"label\": \"x\", \"dim\": 1, \"vectors\": [ [ [1e999, 0] ] ] }");
    CHECK_THROWS_AS(load_frame(path), ParseError);
}

TEST_CASE("file hash is the 64-bit fnv-1a of the bytes") {
    const auto path = scratch_file("hash");
    write_text_file(path, "abc");
    // Published reference value for FNV-1a 64 of "abc".
    CHECK(file_hash(path) == "e71fa2190541574b");

    const auto other = scratch_file("hash");
    write_text_file(other, "abd");
    CHECK(file_hash(other) != file_hash(path));
    CHECK(file_hash(path).size() == 16);
}

TEST_CASE("reports survive a serialize-parse-serialize cycle byte for byte") {
    SpectralReport report;
    report.tool = "framescope";
    report.version = "1.0.0";
    report.phi = {"phi.json", "gaussian", 3, 5, "0123456789abcdef"};
    report.psi = {"psi.json", "gaussian", 3, 5, "fedcba9876543210"};
    report.symbol = {"m.json", 5, 1.25, false, "00ff00ff00ff00ff"};
    report.seed = 42;
    report.eigenvalues_multiplier = {Complex(1.0, 0.5), Complex(-0.25, 0.0)};
    report.eigenvalues_reduced = {Complex(1.0, 0.5), Complex(-0.25, 0.0),
                                  Complex(0.0, 0.0)};
    report.radius_eigen = 1.118033988749895;
    report.radius_eigen_reduced = 1.118033988749895;
    report.radius_gap = 0.0;
    report.radius_gelfand = {{1, 2.0}, {2, 1.5}, {4, 1.25}};
    report.gelfand_eigen_gap = 0.131966011250105;
    report.bounds.prop1 = 2.5;
    report.bounds.thm1 = 2.25;
    report.bounds.schur = 2.4;
    report.bounds.gram_norm = 1.8;
    report.bounds.sqrt_bb = 2.0;
    report.duality_defect = 3e-12;
    report.dual_pair = true;
    report.canonical_dual_pair = false;
    CertificateRecord cert;
    cert.name = "gram-disk";
    cert.certificate.region = SpectralRegion::make_disk(Complex(0.0, 0.0), 2.25);
    cert.certificate.eigenvalues = report.eigenvalues_multiplier;
    cert.certificate.margins = {1.131966011250105, 2.0};
    cert.certificate.overall = true;
    cert.certificate.tol = 1e-8;
    report.certificates.push_back(cert);
    report.total_ms = 12.5;

    const std::string once = serialize_report(report);
    const SpectralReport parsed = parse_report(once);
    const std::string twice = serialize_report(parsed);
    CHECK(once == twice);

    CHECK(parsed.tool == "framescope");
    CHECK(parsed.seed.has_value());
    CHECK(*parsed.seed == 42);
    CHECK(parsed.radius_eigen == report.radius_eigen);  // shortest round trip
    CHECK(parsed.bounds.schur.has_value());
    CHECK_FALSE(parsed.bounds.banded.has_value());
    REQUIRE(parsed.certificates.size() == 1);
    CHECK(parsed.certificates[0].name == "gram-disk");
    CHECK(parsed.certificates[0].certificate.region.disk().radius == 2.25);
    REQUIRE(parsed.radius_gelfand.size() == 3);
    CHECK(parsed.radius_gelfand[1].exponent == 2);
    CHECK(parsed.radius_gelfand[1].value == 1.5);
}

TEST_CASE("hull certificates round trip too") {
    SpectralReport report;
    report.tool = "framescope";
    report.version = "1.0.0";
    CertificateRecord cert;
    cert.name = "symbol-hull";
    cert.certificate.region = SpectralRegion::make_hull(
        {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 1.0)});
    cert.certificate.eigenvalues = {Complex(0.25, 0.25)};
    cert.certificate.margins = {0.25};
    cert.certificate.overall = true;
    cert.certificate.tol = 1e-8;
    report.certificates.push_back(cert);

    const std::string text = serialize_report(report);
    const SpectralReport parsed = parse_report(text);
    REQUIRE(parsed.certificates.size() == 1);
    const SpectralRegion& region = parsed.certificates[0].certificate.region;
    REQUIRE(region.kind() == SpectralRegion::Kind::convex_hull);
    CHECK(region.vertices().size() == 3);
    CHECK(serialize_report(parsed) == text);
}

TEST_CASE("strip timing removes only the timing block") {
    SpectralReport report;
    report.tool = "framescope";
    report.version = "1.0.0";
    report.total_ms = 77.7;

    const std::string with_timing = serialize_report(report);
    CHECK(with_timing.find("timing") != std::string::npos);
    const std::string stripped = strip_timing(with_timing);
    CHECK(stripped.find("timing") == std::string::npos);
    CHECK(stripped.find("framescope") != std::string::npos);

    // Two runs differing only in timing agree once stripped.
    SpectralReport other = report;
    other.total_ms = 1234.5;
    CHECK(strip_timing(serialize_report(other)) == stripped);

    CHECK_THROWS_AS(strip_timing("{ nope"), ParseError);
}

TEST_CASE("malformed report text is rejected") {
    CHECK_THROWS_AS(parse_report("[]"), ParseError);
    CHECK_THROWS_AS(parse_report("{ \"tool\": 7 }"), ParseError);
    CHECK_THROWS_AS(parse_report("{"), ParseError);
}

TEST_CASE("group reports serialize deterministically") {
    GroupReport report;
    report.tool = "framescope";
    report.version = "1.0.0";
    report.chi_path = "chi.json";
    report.chi_hash = "1111111111111111";
    report.eta_path = "eta.json";
    report.eta_hash = "2222222222222222";
    report.symbol_path = "m.json";
    report.symbol_hash = "3333333333333333";
    report.order = 8;
    report.bracket_values = {Complex(0.5, 0.0), Complex(0.0, -0.25)};
    report.normalization_constant = 8.0;
    report.gram_norm_bracket = 4.0;
    report.gram_norm_dense = 4.0;
    report.gram_norm_gap = 0.0;
    report.frame_lower = 0.5;
    report.frame_upper = 4.0;
    report.chi_is_frame = true;
    report.radius_bound = 6.0;
    report.radius_eigen = 3.5;
    report.bound_slack = 2.5;
    report.total_ms = 3.25;

    const std::string a = serialize_group_report(report);
    const std::string b = serialize_group_report(report);
    CHECK(a == b);
    CHECK(a.find("bracket") != std::string::npos);
    CHECK(strip_timing(a).find("timing") == std::string::npos);
}
