#include "framescope/linalg.hpp"

#include <cmath>
#include <string>

namespace framescope {

namespace {

void check_finite(const std::vector<Complex>& entries, const char* what) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag())) {
      throw DomainError(std::string(what) + ": non-finite entry at flat index " +
                        std::to_string(i));
    }
  }
}

}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw ShapeError("ComplexMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw ShapeError("ComplexMatrix: " + std::to_string(entries_.size()) +
                     " entries for a " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " matrix");
  }
  check_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!std::isfinite(diag[i].real()) || !std::isfinite(diag[i].imag())) {
      throw DomainError("diagonal: non-finite entry at index " +
                        std::to_string(i));
    }
    m(i, i) = diag[i];
  }
  return m;
}

ComplexVector::ComplexVector(std::size_t dim)
    : entries_(dim, Complex(0.0, 0.0)) {
  if (dim == 0) throw ShapeError("ComplexVector: dimension must be positive");
}

ComplexVector::ComplexVector(std::vector<Complex> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ShapeError("ComplexVector: dimension must be positive");
  }
  check_finite(entries_, "ComplexVector");
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + " differ");
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  ComplexMatrix c(m, n);
  const Complex* pa = a.data();
  const Complex* pb = b.data();
  Complex* pc = c.data();
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = pc + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const Complex aik = pa[i * k + l];
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = pb + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      r(j, i) = std::conj(a(i, j));
    }
  }
  return r;
}

namespace {

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shapes " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()) + " differ");
  }
}

}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "add");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b, "subtract");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

ComplexMatrix scale(Complex factor, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= factor;
  return r;
}

ComplexMatrix shift_diagonal(const ComplexMatrix& a, Complex mu) {
  if (!a.is_square()) throw ShapeError("shift_diagonal: matrix must be square");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) r(i, i) -= mu;
  return r;
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("trace: matrix must be square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

double max_abs_entry(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      best = std::max(best, std::abs(a(i, j)));
  return best;
}

Complex inner_product(const ComplexVector& f, const ComplexVector& g) {
  if (f.dim() != g.dim()) {
    throw ShapeError("inner_product: dimensions " + std::to_string(f.dim()) +
                     " and " + std::to_string(g.dim()) + " differ");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) s += f[i] * std::conj(g[i]);
  return s;
}

double vector_norm(const ComplexVector& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.dim(); ++i) sum += std::norm(f[i]);
  return std::sqrt(sum);
}

}
