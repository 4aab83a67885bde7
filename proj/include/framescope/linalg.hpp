#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "framescope/errors.hpp"

namespace framescope {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.  Constructors reject NaN/Inf entries;
// every routine in the library may assume finiteness.
class ComplexMatrix {
public:
  ComplexMatrix() = default;  // 0x0 placeholder, not usable as an operand

  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// Column vector in C^d, d >= 1, finite entries.
class ComplexVector {
public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim);
  explicit ComplexVector(std::vector<Complex> entries);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const { return entries_; }

private:
  std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex factor, const ComplexMatrix& a);

// a - mu*I, square operands only.
ComplexMatrix shift_diagonal(const ComplexMatrix& a, Complex mu);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs_entry(const ComplexMatrix& a);

// <f, g> = sum_j f_j * conj(g_j), linear in the first slot.
Complex inner_product(const ComplexVector& f, const ComplexVector& g);
double vector_norm(const ComplexVector& f);

}
