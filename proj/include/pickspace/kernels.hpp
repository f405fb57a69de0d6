#ifndef PICKSPACE_KERNELS_HPP
#define PICKSPACE_KERNELS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pickspace/linalg.hpp"
#include "pickspace/polynomial.hpp"
#include "pickspace/spaces.hpp"

namespace pickspace {

using Point = std::vector<Complex>;

/// An evaluable reproducing kernel on the open unit ball of C^d.
///
///   drury_arveson  1 / (1 - <z,w>)
///   szego          1 / (1 - z conj(w)),                    d = 1
///   dirichlet      log(1/(1 - z conj(w))) / (z conj(w)),   d = 1
///   power          (1 - <z,w>)^{-beta},                    beta > 0
///   from_space     sum_{|a| <= D} z^a conj(w)^a / ||z^a||^2
class KernelSpec {
public:
    enum class Kind { DruryArveson, Szego, Dirichlet, Power, FromSpace };

    static KernelSpec drury_arveson(int d);
    static KernelSpec szego();
    static KernelSpec dirichlet();
    static KernelSpec power(int d, double beta);
    static KernelSpec from_space(const SpaceSpec& space, int truncation_degree);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double beta() const { return beta_; }
    std::string name() const;

    Complex eval(std::span<const Complex> z, std::span<const Complex> w) const;

private:
    KernelSpec(Kind k, int d, double beta) : kind_(k), dim_(d), beta_(beta) {}

    Kind kind_;
    int dim_;
    double beta_ = 0.0;
    // from_space data: basis indices and squared norms, shared so KernelSpec stays copyable
    std::shared_ptr<const std::vector<std::pair<MultiIndex, double>>> basis_;
};

Complex kernel_eval(const KernelSpec& k, std::span<const Complex> z, std::span<const Complex> w);

/// Finite set of pairwise distinct points in the open unit ball.
class PointSet {
public:
    PointSet(int dim, std::vector<Point> points,
             std::optional<std::uint64_t> seed = std::nullopt);

    /// Uniform w.r.t. volume in the ball of the given radius (default 0.95).
    static PointSet random(int dim, int count, std::uint64_t seed, double radius = 0.95);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

private:
    int dim_;
    std::vector<Point> points_;
    std::optional<std::uint64_t> seed_;
};

/// Square complex matrix checked to equal its conjugate transpose within
/// 1e-12 (relative to the largest entry).
class HermitianMatrix {
public:
    explicit HermitianMatrix(MatrixXcd m);

    int order() const { return static_cast<int>(mat_.rows()); }
    const MatrixXcd& mat() const { return mat_; }

private:
    MatrixXcd mat_;
};

/// G_ij = k(z_i, z_j).
HermitianMatrix gram(const KernelSpec& k, const PointSet& pts);

double min_eigenvalue(const HermitianMatrix& m);

/// Gram of u = 1 - 1/k~ where k~ is k normalized at z0:
/// k~(z,w) = k(z,w) k(z0,z0) / (k(z,z0) k(z0,w)).
/// A negative eigenvalue refutes the complete Pick property; psd on sampled
/// sets is evidence only.
HermitianMatrix complete_pick_gram(const KernelSpec& k, const PointSet& pts, const Point& z0);

HermitianMatrix schur_product(const HermitianMatrix& a, const HermitianMatrix& b);

/// M_ij = k_dst(z_i,z_j) - phi(z_i) conj(phi(z_j)) k_src(z_i,z_j);
/// psd iff phi is a contractive multiplier "as seen from" pts.
HermitianMatrix contractive_mult_gram(const KernelSpec& k_src, const KernelSpec& k_dst,
                                      const Polynomial& phi, const PointSet& pts);

struct DescentResult {
    double level_eig;
    double descended_eig;
};

/// Min eigenvalues of the contractive-multiplier Gram for the power-kernel
/// scale B^s_1 at level (s,t) and at (s-1,t-1). Requires s, t < (d+1)/2.
/// Contract (Schur-product descent): level psd implies descended psd.
DescentResult inclusion_descent_check(const Polynomial& phi, int d, double s, double t,
                                      const PointSet& pts);

struct RefutationResult {
    bool refuted = false;
    double min_eig = 0.0;
    std::optional<PointSet> witness;
    int points_used = 0;
};

/// Seeded search for a point set whose normalized-kernel u-Gram has an
/// eigenvalue below -threshold. Counts points drawn against budget_points.
/// Candidates mix uniform draws with root-of-unity circles on random complex
/// lines, which expose sign changes in the Taylor coefficients of u.
RefutationResult pick_refutation_search(const KernelSpec& k, const Point& z0,
                                        int budget_points, std::uint64_t seed,
                                        double threshold = 1e-6);

}  // namespace pickspace

#endif
