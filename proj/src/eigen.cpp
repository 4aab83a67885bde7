#include "framescope/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace framescope {

namespace {

constexpr double kDeflation = 1e-14;       // relative subdiagonal threshold
constexpr double kJacobiStop = 1e-14;      // off-diagonal mass target
constexpr double kHermitianDefect = 1e-12; // admissible asymmetry
constexpr int kJacobiSweepCap = 30;
constexpr int kQrIterFactor = 40;          // cap = 40*n shifted QR steps

// ---------------------------------------------------------------------------
// Hessenberg reduction (Householder), eigenvalue-preserving similarity.
// ---------------------------------------------------------------------------

std::vector<Complex> hessenberg(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Complex> h(a.data(), a.data() + n * n);
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return h[i * n + j];
  };
  if (n < 3) return h;

  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(at(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;

    const Complex alpha = at(k + 1, k);
    const double aabs = std::abs(alpha);
    const Complex phase = (aabs == 0.0) ? Complex(1.0, 0.0) : alpha / aabs;

    // v = x + phase*|x| e_1 avoids cancellation in the leading entry.
    double vnorm2 = xnorm2 + 2.0 * aabs * xnorm + xnorm * xnorm;
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    const std::size_t m = n - k - 1;
    for (std::size_t i = 0; i < m; ++i) v[i] = at(k + 1 + i, k);
    v[0] += phase * xnorm;

    // Left application to rows k+1..n-1, columns k..n-1.
    for (std::size_t j = k; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += std::conj(v[i]) * at(k + 1 + i, j);
      s *= beta;
      for (std::size_t i = 0; i < m; ++i) at(k + 1 + i, j) -= s * v[i];
    }
    // Right application to columns k+1..n-1, all rows.
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += at(i, k + 1 + j) * v[j];
      s *= beta;
      for (std::size_t j = 0; j < m; ++j) at(i, k + 1 + j) -= s * std::conj(v[j]);
    }
    // The column now holds -phase*|x| e_1 exactly.
    at(k + 1, k) = -phase * xnorm;
    for (std::size_t i = k + 2; i < n; ++i) at(i, k) = 0.0;
  }
  return h;
}

// Unitary plane rotation [c, s; -conj(s), c] with real c sending (a,b) to
// (r, 0).
struct Givens {
  double c = 1.0;
  Complex s = 0.0;
};

Givens make_givens(Complex a, Complex b) {
  const double bb = std::abs(b);
  if (bb == 0.0) return {1.0, Complex(0.0, 0.0)};
  const double aa = std::abs(a);
  if (aa == 0.0) return {0.0, std::conj(b) / bb};
  const double r = std::hypot(aa, bb);
  return {aa / r, (a / aa) * (std::conj(b) / r)};
}

std::pair<Complex, Complex> eig_2x2(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_tr = 0.5 * (a + d);
  const Complex half_diff = 0.5 * (a - d);
  const Complex disc = std::sqrt(half_diff * half_diff + b * c);
  Complex l1 = half_tr + disc;
  Complex l2 = half_tr - disc;
  if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
  // Recover the small root from the determinant to dodge cancellation.
  if (l1 != Complex(0.0, 0.0)) l2 = (a * d - b * c) / l1;
  return {l1, l2};
}

// One explicit single-shift QR step on the active block [lo, hi]; structure
// outside the block never feeds back into its eigenvalues, so coupling
// columns stay untouched.
void qr_step(std::vector<Complex>& h, std::size_t n, std::size_t lo,
             std::size_t hi, Complex mu, std::vector<Givens>& rots) {
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return h[i * n + j];
  };
  for (std::size_t k = lo; k <= hi; ++k) at(k, k) -= mu;
  rots.clear();
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens g = make_givens(at(k, k), at(k + 1, k));
    rots.push_back(g);
    const Complex cs = g.c, sc = g.s;
    for (std::size_t j = k; j <= hi; ++j) {
      const Complex t1 = at(k, j), t2 = at(k + 1, j);
      at(k, j) = cs * t1 + sc * t2;
      at(k + 1, j) = -std::conj(sc) * t1 + cs * t2;
    }
  }
  for (std::size_t k = lo; k < hi; ++k) {
    const Givens g = rots[k - lo];
    const Complex cs = g.c, sc = g.s;
    const std::size_t top = std::min(k + 1, hi);
    for (std::size_t i = lo; i <= top; ++i) {
      const Complex t1 = at(i, k), t2 = at(i, k + 1);
      at(i, k) = cs * t1 + std::conj(sc) * t2;
      at(i, k + 1) = -sc * t1 + cs * t2;
    }
  }
  for (std::size_t k = lo; k <= hi; ++k) at(k, k) += mu;
}

std::vector<Complex> hessenberg_eigenvalues(std::vector<Complex> h,
                                            std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return h[i * n + j];
  };
  std::vector<Complex> evals(n);
  std::vector<Givens> rots;
  rots.reserve(n);

  std::size_t remaining = n;
  std::size_t hi = n - 1;
  int stalled = 0;
  long total = 0;
  const long cap = kQrIterFactor * static_cast<long>(n);

  while (true) {
    // Split at any negligible subdiagonal inside [0, hi].
    std::size_t lo = hi;
    while (lo > 0) {
      const double bound =
          kDeflation * (std::abs(at(lo - 1, lo - 1)) + std::abs(at(lo, lo)));
      if (std::abs(at(lo, lo - 1)) <= bound) {
        at(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo == hi) {
      evals[hi] = at(hi, hi);
      --remaining;
      stalled = 0;
      if (hi == 0) break;
      --hi;
      continue;
    }
    if (lo + 1 == hi) {
      const auto [l1, l2] =
          eig_2x2(at(lo, lo), at(lo, hi), at(hi, lo), at(hi, hi));
      evals[hi] = l1;
      evals[lo] = l2;
      remaining -= 2;
      stalled = 0;
      if (lo == 0) break;
      hi = lo - 1;
      continue;
    }

    if (total++ >= cap) {
      std::vector<Complex> partial;
      for (std::size_t i = hi + 1; i < n; ++i) partial.push_back(evals[i]);
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        best = std::max(best, std::abs(at(i, i)));
      throw ConvergenceError(
          "eig_general: QR iteration cap " + std::to_string(cap) +
              " reached with " + std::to_string(remaining) +
              " eigenvalues outstanding",
          best, std::move(partial));
    }

    Complex mu;
    ++stalled;
    if (stalled % 12 == 0) {
      // Deterministic exceptional shift; breaks the symmetric cycling that
      // exact Wilkinson shifts can enter on circulant-like blocks.
      const double off = std::abs(at(hi, hi - 1));
      mu = at(hi, hi) + Complex(0.75 * off, 0.4375 * off);
    } else {
      const auto [l1, l2] = eig_2x2(at(hi - 1, hi - 1), at(hi - 1, hi),
                                    at(hi, hi - 1), at(hi, hi));
      mu = (std::abs(l1 - at(hi, hi)) < std::abs(l2 - at(hi, hi))) ? l1 : l2;
    }
    qr_step(h, n, lo, hi, mu, rots);
  }
  return evals;
}

// LINPACK-style one-solve estimate of the smallest singular value of
// (h0 - lambda*I).  Partial pivoting on a Hessenberg matrix only ever swaps
// adjacent rows, so elimination stays O(n^2).  Singular values are invariant
// under the unitary similarity that produced h0, so this is an estimate for
// the original matrix as well.
double smin_estimate_hessenberg(const std::vector<Complex>& h0, std::size_t n,
                                Complex lambda) {
  std::vector<Complex> m(h0);
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return m[i * n + j];
  };
  for (std::size_t i = 0; i < n; ++i) at(i, i) -= lambda;

  // Deterministic pseudo-random unit right-hand side.
  std::vector<Complex> x(n);
  double bnorm2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 0.7548776662466927 * static_cast<double>(i + 1);
    x[i] = Complex(std::cos(6.283185307179586 * t),
                   std::sin(4.442882938158366 * t));
    bnorm2 += std::norm(x[i]);
  }
  const double bnorm = std::sqrt(bnorm2);
  for (auto& e : x) e /= bnorm;

  constexpr double kTinyPivot = 1e-290;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (std::abs(at(k + 1, k)) > std::abs(at(k, k))) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(k + 1, j));
      std::swap(x[k], x[k + 1]);
    }
    Complex piv = at(k, k);
    if (std::abs(piv) < kTinyPivot) {
      piv = kTinyPivot;
      at(k, k) = piv;
    }
    const Complex mult = at(k + 1, k) / piv;
    if (mult != Complex(0.0, 0.0)) {
      for (std::size_t j = k + 1; j < n; ++j) at(k + 1, j) -= mult * at(k, j);
      x[k + 1] -= mult * x[k];
    }
  }
  if (std::abs(at(n - 1, n - 1)) < kTinyPivot) at(n - 1, n - 1) = kTinyPivot;

  for (std::size_t ii = n; ii-- > 0;) {
    Complex s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= at(ii, j) * x[j];
    x[ii] = s / at(ii, ii);
  }
  double xnorm2 = 0.0;
  for (const auto& e : x) xnorm2 += std::norm(e);
  const double xnorm = std::sqrt(xnorm2);
  if (!std::isfinite(xnorm) || xnorm == 0.0) return 0.0;
  return 1.0 / xnorm;
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw ShapeError(std::string(what) + ": matrix must be square, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

}

EigenResult eig_general(const ComplexMatrix& a) {
  require_square(a, "eig_general");
  const std::size_t n = a.rows();
  EigenResult result;
  if (n == 1) {
    result.eigenvalues = {a(0, 0)};
    result.residual = 0.0;
    return result;
  }

  const std::vector<Complex> h0 = hessenberg(a);
  result.eigenvalues = hessenberg_eigenvalues(h0, n);

  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            [](const Complex& x, const Complex& y) {
              const double ax = std::abs(x), ay = std::abs(y);
              if (ax != ay) return ax > ay;
              return std::arg(x) < std::arg(y);
            });

  const double scale = frobenius_norm(a);
  if (scale > 0.0) {
    double worst = 0.0;
    for (const Complex& lambda : result.eigenvalues) {
      worst = std::max(worst, smin_estimate_hessenberg(h0, n, lambda));
    }
    result.residual = worst / scale;
  }
  return result;
}

namespace {

struct JacobiOutcome {
  std::vector<std::size_t> order;  // ascending diagonal permutation
  std::vector<Complex> work;       // converged matrix, row-major
  std::vector<Complex> vt;         // eigenvector rows (V transposed), may be empty
  double off = 0.0;
  double scale = 0.0;
};

// Cyclic Jacobi on the symmetrized copy of a.  Rotations touch rows p and q
// contiguously; the mirrored column entries are written back afterwards so
// the full Hermitian matrix stays consistent.
JacobiOutcome jacobi_eigen(const ComplexMatrix& a, bool want_vectors,
                           const char* what) {
  require_square(a, what);
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);

  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      defect = std::max(defect, std::abs(a(i, j) - std::conj(a(j, i))));
  if (defect > kHermitianDefect * scale) {
    throw DomainError(std::string(what) + ": Hermitian defect " +
                      std::to_string(defect) + " exceeds tolerance " +
                      std::to_string(kHermitianDefect * scale));
  }

  JacobiOutcome out;
  out.scale = scale;
  out.work.resize(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> Complex& {
    return out.work[i * n + j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    at(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      at(i, j) = v;
      at(j, i) = std::conj(v);
    }
  }

  if (want_vectors) {
    out.vt.assign(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) out.vt[i * n + i] = 1.0;
  }

  const double stop = kJacobiStop * scale;
  auto off_mass = [&]() {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * std::norm(at(i, j));
    return std::sqrt(sum);
  };

  double off = off_mass();
  const double skip = (n > 0) ? stop / (2.0 * static_cast<double>(n)) : 0.0;
  int sweep = 0;
  while (off > stop) {
    if (sweep++ >= kJacobiSweepCap) {
      double best = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        best = std::max(best, std::abs(at(i, i)));
      throw ConvergenceError(std::string(what) + ": sweep cap " +
                                 std::to_string(kJacobiSweepCap) +
                                 " reached, off-diagonal mass " +
                                 std::to_string(off),
                             best);
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = at(p, q);
        const double gabs = std::abs(g);
        if (gabs <= skip) continue;
        const double alpha = at(p, p).real();
        const double beta = at(q, q).real();
        const Complex epos = g / gabs;          // e^{i phi}
        const Complex eneg = std::conj(epos);
        const double tau = (beta - alpha) / (2.0 * gabs);
        const double sign = (tau >= 0.0) ? 1.0 : -1.0;
        const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Complex* rp = out.work.data() + p * n;
        Complex* rq = out.work.data() + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex kp = rp[k], kq = rq[k];
          rp[k] = c * kp - s * (epos * kq);
          rq[k] = s * (eneg * kp) + c * kq;
          at(k, p) = std::conj(rp[k]);
          at(k, q) = std::conj(rq[k]);
        }
        at(p, p) = c * c * alpha + s * s * beta - 2.0 * c * s * gabs;
        at(q, q) = s * s * alpha + c * c * beta + 2.0 * c * s * gabs;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        if (want_vectors) {
          Complex* vp = out.vt.data() + p * n;
          Complex* vq = out.vt.data() + q * n;
          for (std::size_t k = 0; k < n; ++k) {
            const Complex a1 = vp[k], a2 = vq[k];
            vp[k] = c * a1 - s * (eneg * a2);
            vq[k] = s * (epos * a1) + c * a2;
          }
        }
      }
    }
    off = off_mass();
  }
  out.off = off;

  out.order.resize(n);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(),
            [&](std::size_t i, std::size_t j) {
              return at(i, i).real() < at(j, j).real();
            });
  return out;
}

}

HermitianEigenResult eig_hermitian(const ComplexMatrix& a) {
  JacobiOutcome out = jacobi_eigen(a, true, "eig_hermitian");
  const std::size_t n = a.rows();

  HermitianEigenResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = out.order[j];
    result.eigenvalues[j] = out.work[src * n + src].real();
    for (std::size_t i = 0; i < n; ++i) {
      result.eigenvectors(i, j) = out.vt[src * n + i];
    }
  }
  result.residual = (out.scale > 0.0) ? out.off / out.scale : 0.0;
  return result;
}

ComplexMatrix hermitian_power(const ComplexMatrix& a, double p) {
  require_square(a, "hermitian_power");
  const HermitianEigenResult decomp = eig_hermitian(a);
  const std::size_t n = a.rows();
  const double lmax = decomp.eigenvalues.back();
  const double lmin = decomp.eigenvalues.front();
  if (lmax <= 0.0 || lmin <= 1e-12 * lmax) {
    throw DomainError(
        "hermitian_power: matrix is not positive definite at working "
        "precision, smallest eigenvalue " +
        std::to_string(lmin));
  }
  ComplexMatrix scaled(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double f = std::pow(decomp.eigenvalues[j], p);
    for (std::size_t i = 0; i < n; ++i) {
      scaled(i, j) = f * decomp.eigenvectors(i, j);
    }
  }
  ComplexMatrix result = matmul(scaled, adjoint(decomp.eigenvectors));
  // Symmetrize away the roundoff skew so downstream Hermitian checks see a
  // clean operand.
  for (std::size_t i = 0; i < n; ++i) {
    result(i, i) = Complex(result(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (result(i, j) + std::conj(result(j, i)));
      result(i, j) = v;
      result(j, i) = std::conj(v);
    }
  }
  return result;
}

ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "solve_hpd");
  if (a.rows() != b.rows()) {
    throw ShapeError("solve_hpd: system is " + std::to_string(a.rows()) +
                     "-dimensional but right-hand side has " +
                     std::to_string(b.rows()) + " rows");
  }
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > kHermitianDefect * scale) {
        throw DomainError("solve_hpd: matrix is not Hermitian at entry (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
      }

  // L L^* factorization, lower triangle.
  std::vector<Complex> l(n * n, Complex(0.0, 0.0));
  auto lat = [&](std::size_t i, std::size_t j) -> Complex& {
    return l[i * n + j];
  };
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(lat(j, k));
    if (!(d > 0.0)) {
      throw DomainError("solve_hpd: Cholesky pivot " + std::to_string(d) +
                        " at step " + std::to_string(j) +
                        "; matrix is not positive definite");
    }
    const double root = std::sqrt(d);
    lat(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k)
        s -= lat(i, k) * std::conj(lat(j, k));
      lat(i, j) = s / root;
    }
  }

  ComplexMatrix x = b;
  const std::size_t m = b.cols();
  for (std::size_t col = 0; col < m; ++col) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = x(i, col);
      for (std::size_t k = 0; k < i; ++k) s -= lat(i, k) * x(k, col);
      x(i, col) = s / lat(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = x(ii, col);
      for (std::size_t k = ii + 1; k < n; ++k)
        s -= std::conj(lat(k, ii)) * x(k, col);
      x(ii, col) = s / lat(ii, ii);
    }
  }
  return x;
}

double operator_norm(const ComplexMatrix& a, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("operator_norm: tolerance must be positive");
  }
  if (max_abs_entry(a) == 0.0) return 0.0;
  const ComplexMatrix gram = matmul(adjoint(a), a);
  try {
    // Eigenvalues suffice here; skipping the eigenvector accumulation keeps
    // norms of large Gram matrices affordable.
    const JacobiOutcome out = jacobi_eigen(gram, false, "operator_norm");
    const std::size_t n = gram.rows();
    const std::size_t top = out.order.back();
    return std::sqrt(std::max(0.0, out.work[top * n + top].real()));
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string("operator_norm: ") + e.what(),
                           std::sqrt(std::max(0.0, e.best_estimate())));
  }
}

}
