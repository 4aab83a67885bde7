// Shared helpers for the test suite.  Oracles here are written from the
// textbook definitions on purpose, independent of the library internals
// they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "framescope/linalg.hpp"
#include "framescope/rng.hpp"

namespace testsupport {

using framescope::Complex;
using framescope::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                                   const framescope::Rng& rng) {
    framescope::Rng local = rng;
    ComplexMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = local.standard_complex_normal();
    return a;
}

inline ComplexMatrix random_hermitian(std::size_t n, const framescope::Rng& rng) {
    const ComplexMatrix b = random_matrix(n, n, rng);
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(b(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (b(i, j) + std::conj(b(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

// Plain accumulation matmul, no skips, no reordering.
inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
    return c;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double diff_from_identity(const ComplexMatrix& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex want = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            worst = std::max(worst, std::abs(a(i, j) - want));
        }
    return worst;
}

// Greedy modulus-agnostic multiset matching; good enough for well-separated
// test spectra.  Returns the worst pairing distance, or +inf on size mismatch.
inline double match_spectra(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const Complex& z : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_index = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(z - b[j]);
            if (d < best) {
                best = d;
                best_index = j;
            }
        }
        used[best_index] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

// Determinant by Gaussian elimination with partial pivoting.
inline Complex det_lu(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Complex> m(a.data(), a.data() + n * n);
    auto at = [&](std::size_t i, std::size_t j) -> Complex& { return m[i * n + j]; };
    Complex det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(at(i, k)) > std::abs(at(pivot, k))) pivot = i;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            det = -det;
        }
        if (at(k, k) == Complex(0.0, 0.0)) return 0.0;
        det *= at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex f = at(i, k) / at(k, k);
            for (std::size_t j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

// Largest singular value via power iteration on A*A, run to a fixed-point
// residual of 1e-12 relative.
inline double power_norm(const ComplexMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<Complex> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = Complex(std::cos(1.0 + 2.0 * static_cast<double>(i)),
                       std::sin(0.5 + 3.0 * static_cast<double>(i)));
    }
    double lambda = 0.0;
    for (int iter = 0; iter < 20000; ++iter) {
        // y = A x, z = A* y
        std::vector<Complex> y(a.rows(), Complex(0.0, 0.0));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
        std::vector<Complex> z(n, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < a.rows(); ++i)
                z[j] += std::conj(a(i, j)) * y[i];
        double znorm = 0.0;
        for (const Complex& e : z) znorm += std::norm(e);
        znorm = std::sqrt(znorm);
        if (znorm == 0.0) return 0.0;
        double xnorm = 0.0;
        for (const Complex& e : x) xnorm += std::norm(e);
        const double next = znorm / xnorm;  // Rayleigh quotient for A*A
        for (std::size_t j = 0; j < n; ++j) x[j] = z[j] / znorm;
        if (iter > 4 && std::abs(next - lambda) <= 1e-12 * std::max(1.0, next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(lambda);
}

}  // namespace testsupport
