#pragma once

#include <optional>
#include <span>
#include <vector>

#include "framescope/multipliers.hpp"

namespace framescope {

struct Disk {
  Complex center;
  double radius = 0.0;
};

// Closed region of the plane a spectrum can be certified against: a disk or
// a convex hull.  Hull vertices are counterclockwise and strictly convex;
// one or two points degenerate to a point or a segment.
class SpectralRegion {
public:
  enum class Kind { disk, convex_hull };

  static SpectralRegion make_disk(Complex center, double radius);
  static SpectralRegion make_hull(std::vector<Complex> vertices);

  Kind kind() const { return kind_; }
  const Disk& disk() const;
  const std::vector<Complex>& vertices() const;

  // Signed distance to the boundary, positive inside.  Degenerate hulls
  // (point, segment) have empty interior, so their margin is the negated
  // distance to the set and tops out at zero.
  double margin(Complex z) const;

private:
  Kind kind_ = Kind::disk;
  Disk disk_;
  std::vector<Complex> vertices_;
};

struct ContainmentCertificate {
  SpectralRegion region;
  std::vector<Complex> eigenvalues;
  std::vector<double> margins;
  bool overall = false;  // all margins >= -tol
  double tol = 0.0;
};

// Smallest disk containing the points: Welzl's algorithm with move-to-front
// in deterministic input order, exact on its <= 3 support points.
Disk min_enclosing_disk(std::span<const Complex> points);

// Disk localization for a dual pair: symbol inside disk(mu, r) puts the
// multiplier spectrum inside disk(mu, r * ||G||).  When no disk is supplied
// the minimal enclosing disk of the symbol values is used.  The pair must
// verify as dual within 1e-8.
SpectralRegion region_symbol_disk(const Symbol& m, const FrameSystem& phi,
                                  const FrameSystem& psi,
                                  std::optional<Disk> symbol_disk = std::nullopt);

// Real-symbol specialization: center (sup+inf)/2, radius (sup-inf)/2 * ||G||.
SpectralRegion region_real_symbol(const Symbol& m, const FrameSystem& phi,
                                  const FrameSystem& psi);

// Closed convex hull of the symbol values; the localization region when the
// pair is a frame with its canonical dual.
SpectralRegion region_convex_hull(const Symbol& m);

// Eigenvalues of t against the region, one signed margin per eigenvalue.
ContainmentCertificate certify(const SpectralRegion& region,
                               const ComplexMatrix& t, double tol);

// Same certificate from an eigendecomposition already in hand.
ContainmentCertificate certify(const SpectralRegion& region,
                               const EigenResult& eig, double tol);

double default_certificate_tol(double spectral_radius);

}
