#include "framescope/frames.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace framescope {

FrameSystem::FrameSystem(std::size_t dim, std::vector<ComplexVector> vectors,
                         std::string label)
    : dim_(dim), vectors_(std::move(vectors)), label_(std::move(label)) {
  if (dim_ == 0) throw ShapeError("FrameSystem: ambient dimension must be positive");
  if (vectors_.empty()) throw ShapeError("FrameSystem: needs at least one vector");
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (vectors_[k].dim() != dim_) {
      throw ShapeError("FrameSystem: vector " + std::to_string(k) + " has dimension " +
                       std::to_string(vectors_[k].dim()) + ", expected " +
                       std::to_string(dim_));
    }
  }
}

ComplexMatrix analysis_matrix(const FrameSystem& phi) {
  ComplexMatrix c(phi.count(), phi.dim());
  for (std::size_t k = 0; k < phi.count(); ++k)
    for (std::size_t j = 0; j < phi.dim(); ++j)
      c(k, j) = std::conj(phi.vector(k)[j]);
  return c;
}

ComplexMatrix synthesis_matrix(const FrameSystem& phi) {
  ComplexMatrix d(phi.dim(), phi.count());
  for (std::size_t k = 0; k < phi.count(); ++k)
    for (std::size_t j = 0; j < phi.dim(); ++j)
      d(j, k) = phi.vector(k)[j];
  return d;
}

ComplexMatrix frame_operator(const FrameSystem& phi) {
  return matmul(synthesis_matrix(phi), analysis_matrix(phi));
}

ComplexMatrix cross_gram(const FrameSystem& phi, const FrameSystem& psi) {
  if (phi.dim() != psi.dim()) {
    throw ShapeError("cross_gram: ambient dimensions " + std::to_string(phi.dim()) +
                     " and " + std::to_string(psi.dim()) + " differ");
  }
  return matmul(analysis_matrix(psi), synthesis_matrix(phi));
}

FrameBounds frame_bounds(const FrameSystem& phi) {
  const HermitianEigenResult decomp = eig_hermitian(frame_operator(phi));
  FrameBounds b;
  b.lower = std::max(0.0, decomp.eigenvalues.front());
  b.upper = std::max(0.0, decomp.eigenvalues.back());
  return b;
}

DualityCheck is_dual_pair(const FrameSystem& phi, const FrameSystem& psi,
                          double tol) {
  if (phi.dim() != psi.dim() || phi.count() != psi.count()) {
    throw ShapeError("is_dual_pair: systems must share dimension and count");
  }
  if (!(tol > 0.0)) throw DomainError("is_dual_pair: tolerance must be positive");
  const ComplexMatrix composite =
      matmul(synthesis_matrix(phi), analysis_matrix(psi));
  const ComplexMatrix defect_matrix =
      subtract(composite, ComplexMatrix::identity(phi.dim()));
  DualityCheck check;
  check.defect = operator_norm(defect_matrix);
  check.dual = check.defect <= tol;
  return check;
}

namespace {

constexpr double kRankTol = 1e-12;  // lower/upper ratio below this is rank-deficient

// Columns of S^{-1} D or S^{-1/2} D, repackaged as a system.
FrameSystem from_columns(const ComplexMatrix& cols, std::size_t dim,
                         std::size_t count, std::string label) {
  std::vector<ComplexVector> vectors;
  vectors.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    ComplexVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = cols(j, k);
    vectors.push_back(std::move(v));
  }
  return FrameSystem(dim, std::move(vectors), std::move(label));
}

void require_frame(const FrameBounds& b, const char* what) {
  if (b.upper <= 0.0 || b.lower <= kRankTol * b.upper) {
    throw DomainError(std::string(what) + ": system is not a frame, lower bound " +
                      std::to_string(b.lower) + " against upper bound " +
                      std::to_string(b.upper));
  }
}

}

FrameSystem canonical_dual(const FrameSystem& phi) {
  const ComplexMatrix s = frame_operator(phi);
  require_frame(frame_bounds(phi), "canonical_dual");
  const ComplexMatrix dual_cols = solve_hpd(s, synthesis_matrix(phi));
  std::string label = phi.label().empty() ? std::string("canonical-dual")
                                          : phi.label() + ":canonical-dual";
  return from_columns(dual_cols, phi.dim(), phi.count(), std::move(label));
}

FrameSystem canonical_tight(const FrameSystem& phi) {
  const ComplexMatrix s = frame_operator(phi);
  require_frame(frame_bounds(phi), "canonical_tight");
  const ComplexMatrix root = hermitian_power(s, -0.5);
  const ComplexMatrix tight_cols = matmul(root, synthesis_matrix(phi));
  std::string label = phi.label().empty() ? std::string("canonical-tight")
                                          : phi.label() + ":canonical-tight";
  return from_columns(tight_cols, phi.dim(), phi.count(), std::move(label));
}

}
