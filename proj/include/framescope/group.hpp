#pragma once

#include <vector>

#include "framescope/multipliers.hpp"

namespace framescope {

// Window on the cyclic group Z_N, N >= 1, finite samples.
class CyclicWindow {
public:
  explicit CyclicWindow(std::vector<Complex> samples);

  std::size_t size() const { return samples_.size(); }
  Complex operator[](std::size_t x) const { return samples_[x]; }
  const std::vector<Complex>& samples() const { return samples_; }

private:
  std::vector<Complex> samples_;
};

// values[xi] = dft(chi)[xi] * conj(dft(eta)[xi]) / N: the unique sequence
// whose character expansion sum_xi values[xi] e^{2 pi i g xi / N} reproduces
// the correlation <chi, T_g eta>.  The circulant cross Gram of the two
// translation systems has eigenvalue multiset {N * values[xi]}; that factor
// N is circulant_eigenvalue_scale, pinned by the tests rather than assumed.
struct BracketFunction {
  std::vector<Complex> values;
};

// All N cyclic shifts (T_g chi)(x) = chi((x - g) mod N) as a system in C^N.
FrameSystem translation_system(const CyclicWindow& window);

// Unnormalized analysis DFT: hat(x)(xi) = sum_x x(x) e^{-2 pi i x xi / N}.
CyclicWindow dft(const CyclicWindow& window);

// Synthesis normalization 1/N: inverse_dft(dft(w)) = w.
CyclicWindow inverse_dft(const CyclicWindow& window);

BracketFunction bracket(const CyclicWindow& chi, const CyclicWindow& eta);

double circulant_eigenvalue_scale(std::size_t n);

// max_xi |N * values[xi]|; coincides with the operator norm of the dense
// cross Gram of the translation systems.
double gram_norm_via_bracket(const CyclicWindow& chi, const CyclicWindow& eta);

// sup|m| times the bracket-side Gram norm: spectral radius bound for the
// multiplier built on the two translation systems.
double multiplier_radius_bound_group(const Symbol& m, const CyclicWindow& chi,
                                     const CyclicWindow& eta);

}
