#include "framescope/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace framescope {

Symbol::Symbol(std::vector<Complex> values) : values_(std::move(values)) {
  if (values_.empty()) throw ShapeError("Symbol: needs at least one value");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const Complex v = values_[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("Symbol: non-finite value at index " + std::to_string(k));
    }
    sup_modulus_ = std::max(sup_modulus_, std::abs(v));
    if (v.imag() != 0.0) is_real_ = false;
  }
}

namespace {

void check_aligned(const Symbol& m, const FrameSystem& phi,
                   const FrameSystem& psi, const char* what) {
  if (phi.dim() != psi.dim()) {
    throw ShapeError(std::string(what) + ": ambient dimensions " +
                     std::to_string(phi.dim()) + " and " +
                     std::to_string(psi.dim()) + " differ");
  }
  if (m.size() != phi.count() || m.size() != psi.count()) {
    throw ShapeError(std::string(what) + ": symbol length " +
                     std::to_string(m.size()) + " against systems of " +
                     std::to_string(phi.count()) + " and " +
                     std::to_string(psi.count()) + " vectors");
  }
}

}

ComplexMatrix multiplier_matrix(const Symbol& m, const FrameSystem& phi,
                                const FrameSystem& psi) {
  check_aligned(m, phi, psi, "multiplier_matrix");
  // D_phi with columns scaled by the symbol, then the analysis of psi.
  ComplexMatrix weighted = synthesis_matrix(phi);
  for (std::size_t k = 0; k < phi.count(); ++k)
    for (std::size_t j = 0; j < phi.dim(); ++j) weighted(j, k) *= m[k];
  return matmul(weighted, analysis_matrix(psi));
}

ComplexMatrix reduced_matrix(const Symbol& m, const FrameSystem& phi,
                             const FrameSystem& psi) {
  check_aligned(m, phi, psi, "reduced_matrix");
  ComplexMatrix g = cross_gram(phi, psi);
  for (std::size_t k = 0; k < g.rows(); ++k)
    for (std::size_t j = 0; j < g.cols(); ++j) g(k, j) *= m[k];
  return g;
}

double spectral_radius_eigen(const ComplexMatrix& t) {
  return spectral_radius_eigen(eig_general(t));
}

double spectral_radius_eigen(const EigenResult& eig) {
  double r = 0.0;
  for (const Complex& lambda : eig.eigenvalues)
    r = std::max(r, std::abs(lambda));
  return r;
}

std::vector<std::uint64_t> gelfand_default_exponents() {
  return {1, 2, 4, 8, 16, 32, 64, 128, 256};
}

namespace {

// Power kept as unit-Frobenius matrix plus a log scale; zero flags a product
// that collapsed to the zero matrix (exact value 0 from there on).
struct ScaledPower {
  ComplexMatrix unit;
  double log_scale = 0.0;
  bool zero = false;
};

ScaledPower normalize(ComplexMatrix m, double carried_log) {
  ScaledPower p;
  const double f = frobenius_norm(m);
  if (f == 0.0) {
    p.zero = true;
    p.unit = std::move(m);
    return p;
  }
  p.unit = scale(Complex(1.0 / f, 0.0), m);
  p.log_scale = carried_log + std::log(f);
  return p;
}

}

std::vector<GelfandEstimate> spectral_radius_gelfand(
    const ComplexMatrix& t, std::span<const std::uint64_t> exponents) {
  if (!t.is_square()) throw ShapeError("spectral_radius_gelfand: matrix must be square");
  if (exponents.empty()) {
    throw DomainError("spectral_radius_gelfand: exponent list is empty");
  }
  std::uint64_t max_exp = 0;
  for (std::uint64_t e : exponents) {
    if (e == 0) throw DomainError("spectral_radius_gelfand: exponents must be >= 1");
    max_exp = std::max(max_exp, e);
  }

  std::vector<ScaledPower> squarings;  // squarings[j] ~ T^(2^j)
  squarings.push_back(normalize(t, 0.0));
  for (std::uint64_t reach = 1; reach < max_exp; reach <<= 1) {
    const ScaledPower& prev = squarings.back();
    if (prev.zero) {
      squarings.push_back(prev);
      continue;
    }
    squarings.push_back(
        normalize(matmul(prev.unit, prev.unit), 2.0 * prev.log_scale));
  }

  std::vector<GelfandEstimate> table;
  table.reserve(exponents.size());
  for (std::uint64_t e : exponents) {
    ScaledPower acc;
    bool first = true;
    std::uint64_t bits = e;
    for (std::size_t j = 0; bits != 0; ++j, bits >>= 1) {
      if (!(bits & 1)) continue;
      const ScaledPower& factor = squarings[j];
      if (factor.zero) {
        acc.zero = true;
        first = false;
        break;
      }
      if (first) {
        acc = factor;
        first = false;
      } else {
        acc = normalize(matmul(acc.unit, factor.unit),
                        acc.log_scale + factor.log_scale);
        if (acc.zero) break;
      }
    }

    GelfandEstimate row;
    row.exponent = e;
    if (acc.zero) {
      row.value = 0.0;
    } else {
      const double unit_norm = operator_norm(acc.unit);
      if (unit_norm == 0.0) {
        row.value = 0.0;
      } else {
        row.value = std::exp((acc.log_scale + std::log(unit_norm)) /
                             static_cast<double>(e));
      }
    }
    if (!std::isfinite(row.value)) {
      throw ScaleError("spectral_radius_gelfand: ||T^" + std::to_string(e) +
                       "||^(1/" + std::to_string(e) +
                       ") left the double range; rescale the operator first");
    }
    table.push_back(row);
  }
  return table;
}

double bound_prop1(const Symbol& m, const FrameSystem& phi,
                   const FrameSystem& psi) {
  check_aligned(m, phi, psi, "bound_prop1");
  const FrameBounds bp = frame_bounds(phi);
  const FrameBounds bq = frame_bounds(psi);
  return m.sup_modulus() * std::sqrt(bp.upper * bq.upper);
}

double bound_thm1(const Symbol& m, const FrameSystem& phi,
                  const FrameSystem& psi) {
  check_aligned(m, phi, psi, "bound_thm1");
  return m.sup_modulus() * operator_norm(cross_gram(phi, psi));
}

double schur_bound(const FrameSystem& phi, const FrameSystem& psi) {
  const ComplexMatrix g = cross_gram(phi, psi);
  double gamma1 = 0.0;  // largest row sum: fix psi_k, sum over phi
  for (std::size_t k = 0; k < g.rows(); ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < g.cols(); ++j) s += std::abs(g(k, j));
    gamma1 = std::max(gamma1, s);
  }
  double gamma2 = 0.0;  // largest column sum: fix phi_m, sum over psi
  for (std::size_t j = 0; j < g.cols(); ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < g.rows(); ++k) s += std::abs(g(k, j));
    gamma2 = std::max(gamma2, s);
  }
  return std::sqrt(gamma1 * gamma2);
}

double banded_bound(const FrameSystem& phi, const FrameSystem& psi,
                    std::size_t band) {
  const ComplexMatrix g = cross_gram(phi, psi);
  const std::size_t n = g.cols();   // index over phi
  const std::size_t rows = g.rows();

  double scale_ref = max_abs_entry(g);
  const double tol = 1e-12 * std::max(1.0, scale_ref);
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dist = (k > j) ? k - j : j - k;
      if (dist > band && std::abs(g(k, j)) > tol) {
        throw DomainError("banded_bound: entry <phi_" + std::to_string(j) +
                          ", psi_" + std::to_string(k) + "> = " +
                          std::to_string(std::abs(g(k, j))) +
                          " outside bandwidth " + std::to_string(band));
      }
    }
  }

  // Offsets run over i in [-band, band]; indices past either end are zero
  // vectors and simply drop out.
  double total = 0.0;
  const long b = static_cast<long>(band);
  for (long offset = -b; offset <= b; ++offset) {
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const long k = static_cast<long>(j) + offset;
      if (k < 0 || k >= static_cast<long>(rows)) continue;
      best = std::max(best, std::abs(g(static_cast<std::size_t>(k), j)));
    }
    total += best;
  }
  return total;
}

BoundsLedger bounds_ledger(const Symbol& m, const FrameSystem& phi,
                           const FrameSystem& psi,
                           std::optional<std::size_t> band) {
  check_aligned(m, phi, psi, "bounds_ledger");
  BoundsLedger ledger;
  const FrameBounds bp = frame_bounds(phi);
  const FrameBounds bq = frame_bounds(psi);
  ledger.sqrt_bb = std::sqrt(bp.upper * bq.upper);
  ledger.gram_norm = operator_norm(cross_gram(phi, psi));
  ledger.prop1 = m.sup_modulus() * ledger.sqrt_bb;
  ledger.thm1 = m.sup_modulus() * ledger.gram_norm;
  ledger.schur = schur_bound(phi, psi);
  if (band.has_value()) ledger.banded = banded_bound(phi, psi, *band);
  return ledger;
}

}
