#include "framescope/localization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace framescope {

namespace {

constexpr double kDualityTol = 1e-8;

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double dist_point_segment(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z.real() - a.real()) * ab.real() +
              (z.imag() - a.imag()) * ab.imag()) /
             len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * ab));
}

}

SpectralRegion SpectralRegion::make_disk(Complex center, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius) ||
      !std::isfinite(center.real()) || !std::isfinite(center.imag())) {
    throw DomainError("SpectralRegion: disk needs a finite center and radius >= 0");
  }
  SpectralRegion r;
  r.kind_ = Kind::disk;
  r.disk_ = {center, radius};
  return r;
}

SpectralRegion SpectralRegion::make_hull(std::vector<Complex> vertices) {
  if (vertices.empty()) throw DomainError("SpectralRegion: hull needs vertices");
  SpectralRegion r;
  r.kind_ = Kind::convex_hull;
  r.vertices_ = std::move(vertices);
  return r;
}

const Disk& SpectralRegion::disk() const {
  if (kind_ != Kind::disk) throw DomainError("SpectralRegion: not a disk");
  return disk_;
}

const std::vector<Complex>& SpectralRegion::vertices() const {
  if (kind_ != Kind::convex_hull) throw DomainError("SpectralRegion: not a hull");
  return vertices_;
}

double SpectralRegion::margin(Complex z) const {
  if (kind_ == Kind::disk) {
    return disk_.radius - std::abs(z - disk_.center);
  }
  const std::size_t n = vertices_.size();
  if (n == 1) return -std::abs(z - vertices_[0]);
  if (n == 2) return -dist_point_segment(z, vertices_[0], vertices_[1]);

  bool inside = true;
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[(i + 1) % n];
    if (cross(a, b, z) < 0.0) inside = false;
    dmin = std::min(dmin, dist_point_segment(z, a, b));
  }
  return inside ? dmin : -dmin;
}

namespace {

// --- minimal enclosing disk ------------------------------------------------

bool in_disk(const Disk& d, Complex p) {
  return std::abs(p - d.center) <= d.radius + 1e-13 * (1.0 + d.radius);
}

Disk disk_two(Complex a, Complex b) {
  return {0.5 * (a + b), 0.5 * std::abs(a - b)};
}

Disk circumdisk(Complex a, Complex b, Complex c) {
  const double bx = b.real() - a.real(), by = b.imag() - a.imag();
  const double cx = c.real() - a.real(), cy = c.imag() - a.imag();
  const double d = 2.0 * (bx * cy - by * cx);
  const double span = std::max({std::abs(bx), std::abs(by), std::abs(cx),
                                std::abs(cy)});
  if (std::abs(d) <= 1e-14 * span * span) {
    // Collinear: the tightest pair disk that still covers the third point.
    Disk best{a, std::numeric_limits<double>::infinity()};
    for (const Disk& cand : {disk_two(a, b), disk_two(a, c), disk_two(b, c)}) {
      if (in_disk(cand, a) && in_disk(cand, b) && in_disk(cand, c) &&
          cand.radius < best.radius) {
        best = cand;
      }
    }
    return best;
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  const Complex center = a + Complex(ux, uy);
  const double radius = std::max({std::abs(center - a), std::abs(center - b),
                                  std::abs(center - c)});
  return {center, radius};
}

Disk disk_of_support(const std::array<Complex, 3>& support, int count) {
  switch (count) {
    case 1: return {support[0], 0.0};
    case 2: return disk_two(support[0], support[1]);
    case 3: return circumdisk(support[0], support[1], support[2]);
    default: return {Complex(0.0, 0.0), 0.0};
  }
}

// Welzl recursion over pts[0..end).  Points found outside the candidate disk
// move to the front, which keeps the deterministic variant near-linear.
Disk welzl(std::vector<Complex>& pts, std::size_t end,
           std::array<Complex, 3>& support, int nsup) {
  if (end == 0 || nsup == 3) return disk_of_support(support, nsup);
  Disk d = welzl(pts, end - 1, support, nsup);
  const Complex p = pts[end - 1];
  // The empty-support base disk is a placeholder, so the very first point
  // always enters the support rather than testing against it.
  if (in_disk(d, p) && !(nsup == 0 && end == 1)) return d;
  support[nsup] = p;
  d = welzl(pts, end - 1, support, nsup + 1);
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(end - 1),
              pts.begin() + static_cast<std::ptrdiff_t>(end));
  return d;
}

}

Disk min_enclosing_disk(std::span<const Complex> points) {
  if (points.empty()) {
    throw DomainError("min_enclosing_disk: point set is empty");
  }
  std::vector<Complex> pts(points.begin(), points.end());
  std::array<Complex, 3> support{};
  return welzl(pts, pts.size(), support, 0);
}

namespace {

void require_dual(const FrameSystem& phi, const FrameSystem& psi,
                  const char* what) {
  const DualityCheck check = is_dual_pair(phi, psi, kDualityTol);
  if (!check.dual) {
    throw DomainError(std::string(what) + ": systems are not a dual pair, defect " +
                      std::to_string(check.defect));
  }
}

}

SpectralRegion region_symbol_disk(const Symbol& m, const FrameSystem& phi,
                                  const FrameSystem& psi,
                                  std::optional<Disk> symbol_disk) {
  if (m.size() != phi.count()) {
    throw ShapeError("region_symbol_disk: symbol length differs from system size");
  }
  require_dual(phi, psi, "region_symbol_disk");

  Disk base;
  if (symbol_disk.has_value()) {
    base = *symbol_disk;
    for (std::size_t k = 0; k < m.size(); ++k) {
      const double dist = std::abs(m[k] - base.center);
      if (dist > base.radius + 1e-12 * (1.0 + base.radius)) {
        throw DomainError("region_symbol_disk: symbol value " +
                          std::to_string(k) + " lies at distance " +
                          std::to_string(dist) + " from the supplied center, "
                          "outside radius " + std::to_string(base.radius));
      }
    }
  } else {
    base = min_enclosing_disk(m.values());
  }

  const double gram = operator_norm(cross_gram(phi, psi));
  return SpectralRegion::make_disk(base.center, base.radius * gram);
}

SpectralRegion region_real_symbol(const Symbol& m, const FrameSystem& phi,
                                  const FrameSystem& psi) {
  if (!m.is_real()) {
    throw DomainError("region_real_symbol: symbol has non-real values");
  }
  if (m.size() != phi.count()) {
    throw ShapeError("region_real_symbol: symbol length differs from system size");
  }
  require_dual(phi, psi, "region_real_symbol");

  double lo = m[0].real(), hi = m[0].real();
  for (std::size_t k = 1; k < m.size(); ++k) {
    lo = std::min(lo, m[k].real());
    hi = std::max(hi, m[k].real());
  }
  const double gram = operator_norm(cross_gram(phi, psi));
  return SpectralRegion::make_disk(Complex(0.5 * (hi + lo), 0.0),
                                   0.5 * (hi - lo) * gram);
}

SpectralRegion region_convex_hull(const Symbol& m) {
  std::vector<Complex> pts = m.values();
  std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (pts.size() <= 2) return SpectralRegion::make_hull(std::move(pts));

  // Andrew monotone chain; strict turns only, so no three output vertices
  // are collinear.
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return SpectralRegion::make_hull(std::move(hull));
}

ContainmentCertificate certify(const SpectralRegion& region,
                               const ComplexMatrix& t, double tol) {
  return certify(region, eig_general(t), tol);
}

ContainmentCertificate certify(const SpectralRegion& region,
                               const EigenResult& eig, double tol) {
  if (!(tol >= 0.0)) throw DomainError("certify: tolerance must be >= 0");
  ContainmentCertificate cert;
  cert.region = region;
  cert.tol = tol;
  cert.eigenvalues = eig.eigenvalues;
  cert.margins.reserve(cert.eigenvalues.size());
  cert.overall = true;
  for (const Complex& lambda : cert.eigenvalues) {
    const double margin = region.margin(lambda);
    cert.margins.push_back(margin);
    if (!(margin >= -tol)) cert.overall = false;
  }
  return cert;
}

double default_certificate_tol(double spectral_radius) {
  return 1e-8 * (1.0 + spectral_radius);
}

}
