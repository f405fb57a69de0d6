#ifndef PICKSPACE_LINALG_HPP
#define PICKSPACE_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace pickspace {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

/// Smallest eigenvalue of a Hermitian matrix (dense solver).
double hermitian_min_eig(const MatrixXcd& m);

/// Largest eigenvalue of a Hermitian positive semidefinite matrix. Uses the
/// dense solver up to dense_threshold and seeded Lanczos with full
/// reorthogonalization above it.
double hermitian_max_eig(const MatrixXcd& m, int dense_threshold = 700);

/// Largest singular value. Computed through the Gram matrix on the smaller
/// side, so the result is accurate to ~1e-12 relative for the sizes used here.
double op_norm(const MatrixXcd& m);

}  // namespace pickspace

#endif
