#ifndef PICKSPACE_MULTOPS_HPP
#define PICKSPACE_MULTOPS_HPP

#include <Eigen/SparseCore>
#include <vector>

#include "pickspace/kernels.hpp"
#include "pickspace/linalg.hpp"
#include "pickspace/polynomial.hpp"
#include "pickspace/spaces.hpp"

namespace pickspace {

using SparseMatrixXcd = Eigen::SparseMatrix<Complex>;

/// Orthonormal monomial basis e_a = z^a / ||z^a|| of the degree-<=D slice of a
/// space, in grlex order. Immutable after construction.
class TruncationBasis {
public:
    TruncationBasis(SpaceSpec space, int max_degree);

    const SpaceSpec& space() const { return space_; }
    int max_degree() const { return max_degree_; }
    int size() const { return static_cast<int>(indices_.size()); }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    const MultiIndex& index(int i) const { return indices_[static_cast<std::size_t>(i)]; }
    int position(const MultiIndex& alpha) const;  // -1 when absent
    double norm(int i) const { return norms_[static_cast<std::size_t>(i)]; }

    /// coefficients of p w.r.t. the orthonormal basis; requires deg p <= D
    VectorXcd coefficients(const Polynomial& p) const;

private:
    SpaceSpec space_;
    int max_degree_;
    std::vector<MultiIndex> indices_;
    std::vector<double> norms_;
    std::map<MultiIndex, int, GrlexLess> positions_;
};

/// A finite family of multipliers acting as a column or row operator.
class MultiplierTuple {
public:
    MultiplierTuple(int dim, std::vector<Polynomial> entries);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const Polynomial& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Polynomial>& entries() const { return entries_; }
    int max_degree() const;

private:
    int dim_;
    std::vector<Polynomial> entries_;
};

/// Matrix of f -> phi f from the degree-<=D orthonormal basis of src into the
/// degree-<=(D + deg phi) orthonormal basis of dst. The enlarged codomain
/// captures every product exactly; the matrix is a section of the full
/// operator, so its norm is a lower bound of the multiplier norm.
MatrixXcd mult_matrix(const SpaceSpec& src, const SpaceSpec& dst, const Polynomial& phi, int D);

/// Same matrix in sparse form with explicit bases (shared by the norm routines).
SparseMatrixXcd mult_matrix_sparse(const TruncationBasis& src, const TruncationBasis& dst,
                                   const Polynomial& phi);

/// Compression P_{D_dst} M_g P_{D_src} of multiplication by an analytic
/// function g given through a Taylor section: rows |b| <= D_dst, columns
/// |a| <= D_src, entries g_{b-a} ||z^b||_dst / ||z^a||_src. A valid norm
/// lower bound for M_g whenever the section is exact through degree D_dst.
MatrixXcd compressed_mult_matrix(const SpaceSpec& src, const SpaceSpec& dst,
                                 const Polynomial& taylor_section, int D_src, int D_dst);

// declared in linalg.hpp, re-exported here for discoverability
using pickspace::op_norm;

/// Norm of the stacked column operator h -> (phi_i h)_i on the degree-<=D
/// slice. Non-decreasing in D, converges upward to ||Phi^C||.
double column_norm(const SpaceSpec& src, const SpaceSpec& dst, const MultiplierTuple& phi, int D);

/// Norm of the concatenated row operator (h_i)_i -> sum phi_i h_i on the
/// degree-<=D slices. Non-decreasing in D, converges upward to ||Phi^R||.
double row_norm(const SpaceSpec& src, const SpaceSpec& dst, const MultiplierTuple& phi, int D);

/// max over the grid of sqrt(sum_i |phi_i(z)|^2); bounded by ||Phi^C||.
double pointwise_l2_sup(const MultiplierTuple& phi, const PointSet& grid);

/// max over the grid of sum_i |phi_i(z)|^2 * k_src(z,z) / k_dst(z,z).
/// At most 1 (+ tolerance) when the column is contractive.
double kernel_ratio_bound(const KernelSpec& k_src, const KernelSpec& k_dst,
                          const MultiplierTuple& phi, const PointSet& grid);

/// The row-bounded / column-unbounded family on H^2_d, d >= 2: one entry
/// sqrt(|a|!/a!) z^a / n per multi-index of degree n <= n_max. The
/// multiplicity weight preserves all Gram quantities of the full family
/// indexed by words over {1..d}.
MultiplierTuple counterexample_tuple(int d, int n_max);

/// sum_{n<=n_max} C(n+d-1, d-1) / n^2 = ||Phi^C 1||^2, a lower bound for
/// ||Phi^C||^2 that diverges with n_max.
double counterexample_column_sq_lower(int d, int n_max);

struct CounterexampleReport {
    double column_sq_lower;
    double row_upper_truncated;
};

/// column_sq_lower together with the truncated row norm at degree D; the row
/// value satisfies row^2 <= sum_{n<=n_max} 1/n^2 and stays bounded by
/// pi/sqrt(6) as n_max grows.
CounterexampleReport counterexample_report(int d, int n_max, int D);

/// sum ||f_k||^2 - ||sum z_k f_k||^2 in H^2_d; >= 0 since M_z is a
/// d-contraction.
double d_contraction_slack(const std::vector<Polynomial>& fs);

/// Worst ratio over the samples h of
/// sum_i ||(R^j phi_i) R^k h||^2_{B^{N-(j+k)}_{w_dst}} / ||h||^2_{B^N_{w_src}}.
/// Empirical constant of the Leibnitz-type estimate; diagnostic.
double leibnitz_check(const MultiplierTuple& phi, int N, int j, int k,
                      const std::vector<Polynomial>& samples, int dim,
                      const RadialWeight& w_src, const RadialWeight& w_dst);

/// max over the sampled tuples of row_norm / column_norm at truncation D.
double row_from_column_report(const SpaceSpec& src, const SpaceSpec& dst,
                              const std::vector<MultiplierTuple>& samples, int D);

}  // namespace pickspace

#endif
