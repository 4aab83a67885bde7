#pragma once

#include <vector>

#include "framescope/linalg.hpp"

namespace framescope {

// Eigenvalues of a general square matrix, sorted by descending modulus and,
// among equal moduli, by ascending argument in (-pi, pi].  residual is the
// worst backward error over the returned values: a one-solve estimate of the
// smallest singular value of (a - lambda*I), taken on the Hessenberg form and
// divided by the Frobenius norm of a.
struct EigenResult {
  std::vector<Complex> eigenvalues;
  double residual = 0.0;
};

// Full spectral decomposition of a Hermitian matrix.  eigenvalues ascend;
// column k of eigenvectors pairs with eigenvalues[k]; residual is the
// off-diagonal mass left at termination relative to the Frobenius norm.
struct HermitianEigenResult {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  double residual = 0.0;
};

// Householder reduction to upper Hessenberg followed by shifted QR iteration.
// Deflation uses the fixed threshold 1e-14*(|h_kk| + |h_k+1,k+1|); the sweep
// cap is 40*n, past which a ConvergenceError carries the settled part of the
// spectrum.
EigenResult eig_general(const ComplexMatrix& a);

// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops below
// 1e-14 of the input norm (cap 30 sweeps).  Rejects inputs whose Hermitian
// defect exceeds 1e-12 relative to the norm.
HermitianEigenResult eig_hermitian(const ComplexMatrix& a);

// a^p through the spectral decomposition; requires positive definiteness
// (smallest eigenvalue above 1e-12 of the largest).  Covers p = -1 and the
// inverse square root p = -1/2 used for canonical objects.
ComplexMatrix hermitian_power(const ComplexMatrix& a, double p);

// Solve a*X = b with a Hermitian positive definite via Cholesky.
ComplexMatrix solve_hpd(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest singular value: Hermitian eigensolve of adjoint(a)*a, then sqrt.
double operator_norm(const ComplexMatrix& a, double tol = 1e-12);

}
