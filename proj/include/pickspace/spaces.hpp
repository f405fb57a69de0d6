#ifndef PICKSPACE_SPACES_HPP
#define PICKSPACE_SPACES_HPP

#include <map>
#include <utility>
#include <vector>

#include "pickspace/multiindex.hpp"
#include "pickspace/polynomial.hpp"
#include "pickspace/rational.hpp"
#include "pickspace/weights.hpp"

namespace pickspace {

/// A Hilbert space of analytic functions on the unit ball of C^d with
/// orthogonal monomials, given by its squared monomial norms.
///
/// WeightedBesov: the family B^s_w with
///     ||z^a||^2 = m(a)            for |a| = 0,
///     ||z^a||^2 = n^{2s} m(a)     for n = |a| >= 1,
/// where m(a) = sphere_factor(a) * 2d * moment(2n + 2d - 1) is the squared
/// norm in L^2_a(w dV) with volume normalized to V(B_d) = 1.
///
/// DruryArvesonExact: H^2_d with its native norms ||z^a||^2 = a!/|a|!.
/// B^{d/2}_1 carries an equivalent norm (bounded ratios, never equality);
/// the exact kind is what the quantitative H^2_d statements refer to.
///
/// s = 0 gives the weighted Bergman space; s = 1 in d = 1 the Dirichlet-type
/// space.
struct SpaceSpec {
    enum class Kind { WeightedBesov, DruryArvesonExact };

    Kind kind;
    int dim;
    double s;
    RadialWeight weight;

    static SpaceSpec bergman(int d) { return {Kind::WeightedBesov, d, 0.0, RadialWeight::one()}; }
    static SpaceSpec drury_arveson(int d) {
        return {Kind::DruryArvesonExact, d, d / 2.0, RadialWeight::one()};
    }
    /// the Besov realization B^{d/2}_1, equivalent to H^2_d
    static SpaceSpec besov_da(int d) { return {Kind::WeightedBesov, d, d / 2.0, RadialWeight::one()}; }
    static SpaceSpec hardy(int d) { return {Kind::WeightedBesov, d, 0.5, RadialWeight::one()}; }
    static SpaceSpec dirichlet() { return {Kind::WeightedBesov, 1, 1.0, RadialWeight::one()}; }
    static SpaceSpec besov(int d, double s, RadialWeight w) {
        return {Kind::WeightedBesov, d, s, std::move(w)};
    }
    /// the integer-order norm ||w||_L1 |f(0)|^2 + || R^N f ||^2_{L^2_a(w)};
    /// for radial weights this diagonal form coincides with the family norm
    /// at s = N, so it shares this representation
    static SpaceSpec besov_integer(int d, int N, RadialWeight w) {
        return {Kind::WeightedBesov, d, static_cast<double>(N), std::move(w)};
    }
};

/// \int_0^1 t^n (1-t)^a dt = Gamma(n+1) Gamma(a+1) / Gamma(n+a+2), a > -1.
double beta_moment(int n, double a);

/// Exact Drury-Arveson squared monomial norm a! / |a|! as a reduced fraction.
Rational monomial_norm_da(const MultiIndex& alpha);

/// Same value in double precision through log-Gamma; safe at high degree.
double monomial_norm_da_d(const MultiIndex& alpha);

/// Exact surface integral \int_{S^{2d-1}} |zeta^a|^2 dsigma
/// = (d-1)! a! / (d-1+|a|)!  (normalized surface measure).
double sphere_factor(const MultiIndex& alpha);

/// Squared monomial norm ||z^a||^2 in the given space.
double monomial_norm_sq(const SpaceSpec& space, const MultiIndex& alpha);

/// Squared monomial norm in L^2_a(w dV) only (no n^{2s} factor).
double bergman_monomial_norm_sq(int dim, const RadialWeight& w, const MultiIndex& alpha);

/// sqrt( sum |c_a|^2 ||z^a||^2 ).
double space_norm(const SpaceSpec& space, const Polynomial& p);

/// inner product <p, q> = sum_a p_a conj(q_a) ||z^a||^2 (linear in p)
Complex space_inner(const SpaceSpec& space, const Polynomial& p, const Polynomial& q);

/// (min, max) over 1 <= |a| <= Dmax of
/// ||z^a||^2_{B^s_{w_a}} / ||z^a||^2_{B^{s-a/2}_1}.
std::pair<double, double> besov_shift_ratio(double s, double a, int dim, int Dmax);

/// Precomputed table of squared monomial norms for |a| <= max_degree.
/// Immutable after construction, safe to share across threads.
class MonomialNormTable {
public:
    MonomialNormTable(SpaceSpec space, int max_degree);

    const SpaceSpec& space() const { return space_; }
    int max_degree() const { return max_degree_; }
    double norm_sq(const MultiIndex& alpha) const;
    double norm(const MultiIndex& alpha) const;

private:
    SpaceSpec space_;
    int max_degree_;
    std::map<MultiIndex, double, GrlexLess> values_;
};

}  // namespace pickspace

#endif
