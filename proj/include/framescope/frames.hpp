#pragma once

#include <string>
#include <vector>

#include "framescope/eigen.hpp"
#include "framescope/linalg.hpp"

namespace framescope {

// Finite vector system in C^d.  No spanning requirement: n may be smaller
// than d and zero vectors are legal, so every system is Bessel and frame
// properties are decided by frame_bounds, not by construction.
class FrameSystem {
public:
  FrameSystem(std::size_t dim, std::vector<ComplexVector> vectors,
              std::string label = "");

  std::size_t dim() const { return dim_; }
  std::size_t count() const { return vectors_.size(); }
  const ComplexVector& vector(std::size_t k) const { return vectors_[k]; }
  const std::vector<ComplexVector>& vectors() const { return vectors_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

private:
  std::size_t dim_;
  std::vector<ComplexVector> vectors_;
  std::string label_;
};

// Optimal constants: extreme eigenvalues of the frame operator.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct DualityCheck {
  bool dual = false;
  double defect = 0.0;  // operator norm of synthesis(phi)*analysis(psi) - I
};

// n x d matrix sending f to the coefficient sequence (<f, phi_k>)_k.
ComplexMatrix analysis_matrix(const FrameSystem& phi);

// d x n adjoint of the analysis matrix; columns are the frame vectors.
ComplexMatrix synthesis_matrix(const FrameSystem& phi);

// synthesis * analysis, Hermitian positive semidefinite d x d.
ComplexMatrix frame_operator(const FrameSystem& phi);

// Entry (k, m) = <phi_m, psi_k>; shape psi.count x phi.count.
ComplexMatrix cross_gram(const FrameSystem& phi, const FrameSystem& psi);

FrameBounds frame_bounds(const FrameSystem& phi);

DualityCheck is_dual_pair(const FrameSystem& phi, const FrameSystem& psi,
                          double tol);

// { S^{-1} phi_k }.  Requires a genuine frame: lower bound above 1e-12 of the
// upper, otherwise the inversion is meaningless and a DomainError reports the
// offending lower bound.
FrameSystem canonical_dual(const FrameSystem& phi);

// { S^{-1/2} phi_k }, a Parseval frame spanning the same space.
FrameSystem canonical_tight(const FrameSystem& phi);

}
