#include "framescope/group.hpp"

#include <cmath>
#include <string>

namespace framescope {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

}

CyclicWindow::CyclicWindow(std::vector<Complex> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw ShapeError("CyclicWindow: group order must be positive");
  }
  for (std::size_t x = 0; x < samples_.size(); ++x) {
    if (!std::isfinite(samples_[x].real()) || !std::isfinite(samples_[x].imag())) {
      throw DomainError("CyclicWindow: non-finite sample at index " +
                        std::to_string(x));
    }
  }
}

FrameSystem translation_system(const CyclicWindow& window) {
  const std::size_t n = window.size();
  std::vector<ComplexVector> shifts;
  shifts.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    ComplexVector v(n);
    for (std::size_t x = 0; x < n; ++x) {
      v[x] = window[(x + n - g) % n];
    }
    shifts.push_back(std::move(v));
  }
  return FrameSystem(n, std::move(shifts), "translations");
}

CyclicWindow dft(const CyclicWindow& window) {
  const std::size_t n = window.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (std::size_t xi = 0; xi < n; ++xi) {
    Complex s = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      const double angle = -kTwoPi * static_cast<double>(x * xi % n) /
                           static_cast<double>(n);
      s += window[x] * Complex(std::cos(angle), std::sin(angle));
    }
    out[xi] = s;
  }
  return CyclicWindow(std::move(out));
}

CyclicWindow inverse_dft(const CyclicWindow& window) {
  const std::size_t n = window.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t x = 0; x < n; ++x) {
    Complex s = 0.0;
    for (std::size_t xi = 0; xi < n; ++xi) {
      const double angle = kTwoPi * static_cast<double>(x * xi % n) /
                           static_cast<double>(n);
      s += window[xi] * Complex(std::cos(angle), std::sin(angle));
    }
    out[x] = inv * s;
  }
  return CyclicWindow(std::move(out));
}

BracketFunction bracket(const CyclicWindow& chi, const CyclicWindow& eta) {
  if (chi.size() != eta.size()) {
    throw ShapeError("bracket: group orders " + std::to_string(chi.size()) +
                     " and " + std::to_string(eta.size()) + " differ");
  }
  const std::size_t n = chi.size();
  const CyclicWindow chi_hat = dft(chi);
  const CyclicWindow eta_hat = dft(eta);
  BracketFunction b;
  b.values.resize(n);
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t xi = 0; xi < n; ++xi) {
    b.values[xi] = inv * chi_hat[xi] * std::conj(eta_hat[xi]);
  }
  return b;
}

double circulant_eigenvalue_scale(std::size_t n) {
  return static_cast<double>(n);
}

double gram_norm_via_bracket(const CyclicWindow& chi, const CyclicWindow& eta) {
  const BracketFunction b = bracket(chi, eta);
  double best = 0.0;
  for (const Complex& v : b.values) best = std::max(best, std::abs(v));
  return circulant_eigenvalue_scale(chi.size()) * best;
}

double multiplier_radius_bound_group(const Symbol& m, const CyclicWindow& chi,
                                     const CyclicWindow& eta) {
  if (m.size() != chi.size()) {
    throw ShapeError("multiplier_radius_bound_group: symbol length " +
                     std::to_string(m.size()) + " against group order " +
                     std::to_string(chi.size()));
  }
  return m.sup_modulus() * gram_norm_via_bracket(chi, eta);
}

}
