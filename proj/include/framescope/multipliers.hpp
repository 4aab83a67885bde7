#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "framescope/frames.hpp"

namespace framescope {

// Multiplier symbol: a finite complex sequence aligned with the vector count
// of the systems it acts on.
class Symbol {
public:
  explicit Symbol(std::vector<Complex> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  Complex operator[](std::size_t k) const { return values_[k]; }
  double sup_modulus() const { return sup_modulus_; }
  bool is_real() const { return is_real_; }

private:
  std::vector<Complex> values_;
  double sup_modulus_ = 0.0;
  bool is_real_ = true;
};

// Every upper bound the toolkit can certify for one multiplier, side by side.
// schur is present whenever requested; banded only when a bandwidth was
// supplied and verified.
struct BoundsLedger {
  double prop1 = 0.0;      // sup|m| * sqrt(B_phi * B_psi)
  double thm1 = 0.0;       // sup|m| * gram_norm
  std::optional<double> schur;
  std::optional<double> banded;
  double gram_norm = 0.0;  // operator norm of the cross Gram
  double sqrt_bb = 0.0;    // sqrt(B_phi * B_psi)
};

// One Gelfand sample: value = ||T^N||^(1/N).
struct GelfandEstimate {
  std::uint64_t exponent = 1;
  double value = 0.0;
};

// d x d operator f -> sum_k m_k <f, psi_k> phi_k.
ComplexMatrix multiplier_matrix(const Symbol& m, const FrameSystem& phi,
                                const FrameSystem& psi);

// n x n reduced operator diag(m) * cross_gram(phi, psi); shares its nonzero
// spectrum with the multiplier.
ComplexMatrix reduced_matrix(const Symbol& m, const FrameSystem& phi,
                             const FrameSystem& psi);

double spectral_radius_eigen(const ComplexMatrix& t);

// Same quantity from an eigendecomposition already in hand.
double spectral_radius_eigen(const EigenResult& eig);

// Norm growth ||T^N||^(1/N) along the requested exponents.  Powers use
// binary decomposition over cached squarings, renormalized after every
// product with the accumulated log-scale carried separately, so no
// intermediate ever overflows.
std::vector<GelfandEstimate> spectral_radius_gelfand(
    const ComplexMatrix& t, std::span<const std::uint64_t> exponents);

// Default exponent schedule 1, 2, 4, ..., 256.
std::vector<std::uint64_t> gelfand_default_exponents();

double bound_prop1(const Symbol& m, const FrameSystem& phi,
                   const FrameSystem& psi);
double bound_thm1(const Symbol& m, const FrameSystem& phi,
                  const FrameSystem& psi);

// sqrt(Gamma1 * Gamma2) from the row and column sums of |cross Gram|.
double schur_bound(const FrameSystem& phi, const FrameSystem& psi);

// Band-limited Schur sum: sum over offsets |i| <= band of the largest
// |<phi_k, psi_{k+i}>|.  Verifies that entries outside the band vanish and
// names the first offending pair if not.  Out-of-range indices count as zero
// vectors.
double banded_bound(const FrameSystem& phi, const FrameSystem& psi,
                    std::size_t band);

BoundsLedger bounds_ledger(const Symbol& m, const FrameSystem& phi,
                           const FrameSystem& psi,
                           std::optional<std::size_t> band = std::nullopt);

}
