#ifndef PICKSPACE_ORACLE_HPP
#define PICKSPACE_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pickspace/linalg.hpp"
#include "pickspace/polynomial.hpp"
#include "pickspace/spaces.hpp"

namespace pickspace {

struct QuadratureConfig {
    int n_samples = 100000;
    std::uint64_t seed = 1;
    int radial_nodes = 200;
    int batches = 32;
};

struct McEstimate {
    Complex estimate;
    double stderr_;  // batch-means standard error

    double z_score(Complex reference) const {
        return std::abs(estimate - reference) / stderr_;
    }
};

/// Monte-Carlo estimate of \int_{B_d} p conj(q) w dV with normalized volume.
/// The weight must be evaluable (one or standard).
McEstimate mc_inner_product(const RadialWeight& w, const Polynomial& p, const Polynomial& q,
                            const QuadratureConfig& cfg);

/// ||z^a||^2_{L^2_a(w dV)} through the exact sphere factor and deterministic
/// Gauss-Legendre quadrature of the radial integral.
double quad_monomial_norm(const RadialWeight& w, const MultiIndex& alpha, int radial_nodes = 200);

/// Monte-Carlo check of the combinatorial sphere factor itself: mean of
/// |zeta^a|^2 over uniform points of the unit sphere S^{2d-1}.
McEstimate mc_sphere_factor(const MultiIndex& alpha, int n_samples, std::uint64_t seed,
                            int batches = 32);

/// Gauss-Legendre nodes/weights on [0, 1].
std::vector<std::pair<double, double>> gauss_legendre(int n);

/// The multiplication matrix of multops::mult_matrix assembled along an
/// independent code path: expand phi * z^a as a polynomial product, then read
/// inner products off the monomial-norm diagonal.
MatrixXcd mult_matrix_raw(const SpaceSpec& src, const SpaceSpec& dst, const Polynomial& phi,
                          int D);

}  // namespace pickspace

#endif
