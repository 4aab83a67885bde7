#include "framescope/fixtures.hpp"

#include <cmath>
#include <string>

namespace framescope {

FrameSystem gaussian_system(std::size_t dim, std::size_t count, Rng& rng,
                            std::string label) {
  std::vector<ComplexVector> vectors;
  vectors.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    ComplexVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = rng.standard_complex_normal();
    vectors.push_back(std::move(v));
  }
  return FrameSystem(dim, std::move(vectors), std::move(label));
}

FrameSystem parseval_system(std::size_t dim, std::size_t count, Rng& rng) {
  if (count < dim) {
    throw DomainError("parseval_system: needs count >= dim to span");
  }
  return canonical_tight(gaussian_system(dim, count, rng, "parseval-seed"));
}

FrameSystem riesz_basis(std::size_t dim, Rng& rng) {
  const double spread =
      0.25 / std::sqrt(static_cast<double>(dim));  // keeps ||perturbation|| < 1
  std::vector<ComplexVector> vectors;
  vectors.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    ComplexVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      v[j] = spread * rng.standard_complex_normal();
    }
    v[k] += 1.0;
    vectors.push_back(std::move(v));
  }
  return FrameSystem(dim, std::move(vectors), "riesz");
}

std::pair<FrameSystem, FrameSystem> dual_pair_system(std::size_t dim,
                                                     std::size_t count,
                                                     Rng& rng) {
  if (count < dim) {
    throw DomainError("dual_pair_system: needs count >= dim to span");
  }
  FrameSystem phi = gaussian_system(dim, count, rng, "gaussian-frame");
  FrameSystem psi = canonical_dual(phi);
  return {std::move(phi), std::move(psi)};
}

StrictnessFixture strictness_fixture(std::size_t even_dim) {
  if (even_dim == 0 || even_dim % 2 != 0) {
    throw DomainError("strictness_fixture: dimension must be even and positive");
  }
  std::vector<ComplexVector> basis;
  std::vector<ComplexVector> scaled;
  std::vector<Complex> symbol_values;
  basis.reserve(even_dim);
  scaled.reserve(even_dim);
  symbol_values.reserve(even_dim);
  for (std::size_t k = 0; k < even_dim; ++k) {
    ComplexVector e(even_dim);
    e[k] = 1.0;
    basis.push_back(e);
    const double weight = (k % 2 == 0) ? 0.5 : 2.0;
    ComplexVector w(even_dim);
    w[k] = weight;
    scaled.push_back(std::move(w));
    symbol_values.emplace_back((k % 2 == 0) ? 2.0 : 0.5, 0.0);
  }
  return {FrameSystem(even_dim, std::move(basis), "strictness-phi"),
          FrameSystem(even_dim, std::move(scaled), "strictness-psi"),
          Symbol(std::move(symbol_values))};
}

Symbol random_symbol(std::size_t count, double max_modulus, Rng& rng) {
  std::vector<Complex> values(count);
  for (auto& v : values) {
    const double r = max_modulus * rng.uniform01();
    const double a = rng.uniform(0.0, 6.283185307179586);
    v = Complex(r * std::cos(a), r * std::sin(a));
  }
  return Symbol(std::move(values));
}

Symbol random_symbol_in_disk(std::size_t count, Complex center, double radius,
                             Rng& rng) {
  std::vector<Complex> values(count);
  for (auto& v : values) {
    const double r = radius * std::sqrt(rng.uniform01());
    const double a = rng.uniform(0.0, 6.283185307179586);
    v = center + Complex(r * std::cos(a), r * std::sin(a));
  }
  return Symbol(std::move(values));
}

Symbol random_real_symbol(std::size_t count, double half_range, Rng& rng) {
  std::vector<Complex> values(count);
  for (auto& v : values) v = Complex(rng.uniform(-half_range, half_range), 0.0);
  return Symbol(std::move(values));
}

CyclicWindow random_window(std::size_t order, Rng& rng) {
  std::vector<Complex> samples(order);
  for (auto& s : samples) s = rng.standard_complex_normal();
  return CyclicWindow(std::move(samples));
}

}
