#ifndef PICKSPACE_WEAKPROD_HPP
#define PICKSPACE_WEAKPROD_HPP

#include <utility>
#include <vector>

#include "pickspace/linalg.hpp"
#include "pickspace/multops.hpp"
#include "pickspace/polynomial.hpp"
#include "pickspace/spaces.hpp"

namespace pickspace {

/// A representation h = sum f_i g_i; certifies the weak-product norm upper
/// bound sum ||f_i|| ||g_i||.
struct Factorization {
    std::vector<std::pair<Polynomial, Polynomial>> pairs;

    Polynomial product() const;
    int dim() const;
};

/// sum ||f_i|| ||g_i||, an upper bound for || sum f_i g_i ||_{H (.) H}.
double wp_norm_upper(const SpaceSpec& space, const Factorization& f);

/// (f', g') = (f sqrt(||g||/||f||), g sqrt(||f||/||g||)): equal norms, same
/// product, same norm product.
std::pair<Polynomial, Polynomial> rescale_to_equal_norm(const Polynomial& f, const Polynomial& g,
                                                        const SpaceSpec& space);

struct SquareSplit {
    Polynomial a;  // (f+g)/2
    Polynomial b;  // (f-g)/2
};

/// fg = a^2 - b^2 with ||f|| ||g|| = ||a||^2 + ||b||^2 (parallelogram law).
/// Requires ||f|| = ||g|| within 1e-10 relative.
SquareSplit square_split(const Polynomial& f, const Polynomial& g, const SpaceSpec& space);

/// Candidate data for h = phi / (1 - psi)^2 with psi(0) = 0 and psi expected
/// to be a contractive multiplier; the r-sequence drives the cyclicity-style
/// fraction bounds.
struct SmirnovWitness {
    SmirnovWitness(Polynomial h_, Polynomial phi_, Polynomial psi_,
                   std::vector<double> rs_ = {0.5, 0.9, 0.99})
        : h(std::move(h_)), phi(std::move(phi_)), psi(std::move(psi_)), rs(std::move(rs_)) {}

    Polynomial h;
    Polynomial phi;
    Polynomial psi;
    std::vector<double> rs;
};

struct FractionBound {
    double r;
    double contraction_bound;  // mult-norm lower bound of (1-r) psi / (1 - r psi), <= 1 when ||psi||_M <= 1
    double cyclic_bound;       // mult-norm lower bound of (1 - psi) / (1 - r psi), <= 2 when ||psi||_M <= 1
};

struct SmirnovReport {
    double residual;         // || trunc_D( (1-psi)^2 h - phi ) ||
    double psi_mult_lower;   // truncated multiplier-norm lower bound of psi
    std::vector<FractionBound> fraction_bounds;
};

SmirnovReport smirnov_verify(const SpaceSpec& space, const SmirnovWitness& w, int D);

/// Symmetric bilinear form B(f,g) = <fg, b> on the orthonormal monomial basis:
/// B_ab = conj(b_{a+b}) ||z^{a+b}||^2 / (||z^a|| ||z^b||). Entries vanish for
/// |a| + |b| > deg b, so the matrix has finite rank.
class HankelForm {
public:
    HankelForm(SpaceSpec space, Polynomial symbol, int D);

    const SpaceSpec& space() const { return space_; }
    const Polynomial& symbol() const { return symbol_; }
    int max_degree() const { return basis_.max_degree(); }
    const TruncationBasis& basis() const { return basis_; }
    const MatrixXcd& mat() const { return mat_; }

    /// B(f, g) through the matrix; requires deg f, deg g <= D
    Complex apply(const Polynomial& f, const Polynomial& g) const;

private:
    SpaceSpec space_;
    Polynomial symbol_;
    TruncationBasis basis_;
    MatrixXcd mat_;
};

HankelForm hankel_build(const SpaceSpec& space, const Polynomial& b, int D);

/// max over |a|,|b| <= D_inner of |B(phi e_a, e_b) - B(e_a, phi e_b)|.
/// Exact intertwining: <= 1e-12 whenever D_inner + deg phi <= form degree.
double hankel_intertwine_check(const HankelForm& h, const Polynomial& phi, int D_inner);

/// Operator norm of the truncated form matrix, a lower bound for ||H_b||,
/// non-decreasing in D.
double hankel_norm_lower(const HankelForm& h);

/// wp_norm_upper(F) * hankel_norm_lower(b at D) - |<prod F, b>|; for a single
/// pair this is a finite-dimensional Cauchy-Schwarz slack, >= -1e-10.
double duality_check(const SpaceSpec& space, const Factorization& f, const Polynomial& b, int D);

}  // namespace pickspace

#endif
