#include "pickspace/weakprod.hpp"

#include <cmath>
#include <stdexcept>

namespace pickspace {

Polynomial Factorization::product() const {
    if (pairs.empty()) throw std::invalid_argument("Factorization: empty");
    Polynomial sum = Polynomial::zero(pairs.front().first.dim());
    for (const auto& [f, g] : pairs) sum = sum + poly_mul(f, g);
    return sum;
}

int Factorization::dim() const {
    if (pairs.empty()) throw std::invalid_argument("Factorization: empty");
    return pairs.front().first.dim();
}

double wp_norm_upper(const SpaceSpec& space, const Factorization& f) {
    double sum = 0.0;
    for (const auto& [p, q] : f.pairs) sum += space_norm(space, p) * space_norm(space, q);
    return sum;
}

std::pair<Polynomial, Polynomial> rescale_to_equal_norm(const Polynomial& f, const Polynomial& g,
                                                        const SpaceSpec& space) {
    const double nf = space_norm(space, f);
    const double ng = space_norm(space, g);
    if (nf == 0.0 || ng == 0.0)
        throw std::invalid_argument("rescale_to_equal_norm: zero polynomial");
    const double c = std::sqrt(ng / nf);
    return {f * Complex(c), g * Complex(1.0 / c)};
}

SquareSplit square_split(const Polynomial& f, const Polynomial& g, const SpaceSpec& space) {
    const double nf = space_norm(space, f);
    const double ng = space_norm(space, g);
    if (std::abs(nf - ng) > 1e-10 * std::max({nf, ng, 1.0}))
        throw std::invalid_argument("square_split: norms differ; rescale_to_equal_norm first");
    SquareSplit s{(f + g) * Complex(0.5), (f - g) * Complex(0.5)};
    return s;
}

SmirnovReport smirnov_verify(const SpaceSpec& space, const SmirnovWitness& w, int D) {
    const int dim = space.dim;
    if (w.h.dim() != dim || w.phi.dim() != dim || w.psi.dim() != dim)
        throw std::invalid_argument("smirnov_verify: dimension mismatch");
    if (w.psi.coeff(MultiIndex::zero(dim)) != Complex(0.0))
        throw std::invalid_argument("smirnov_verify: psi must vanish at the base point 0");

    SmirnovReport rep;
    const Polynomial one = Polynomial::one(dim);
    const Polynomial one_minus_psi = one - w.psi;
    rep.residual = space_norm(
        space, truncate(poly_mul(poly_mul(one_minus_psi, one_minus_psi), w.h) - w.phi, D));
    rep.psi_mult_lower = op_norm(mult_matrix(space, space, w.psi, D));

    for (double r : w.rs) {
        if (!(r >= 0.0 && r < 1.0))
            throw std::invalid_argument("smirnov_verify: r values must lie in [0,1)");
        // Taylor sections through degree D are exact because psi(0) = 0; the
        // compression P_D M_g P_D of the true multiplication operator only
        // needs those coefficients and its norm bounds ||M_g|| from below
        const Polynomial inv = invert_one_minus(w.psi, r, D);
        const Polynomial contraction = truncate(poly_mul(w.psi * Complex(1.0 - r), inv), D);
        const Polynomial cyclic = truncate(poly_mul(one_minus_psi, inv), D);
        FractionBound fb{};
        fb.r = r;
        fb.contraction_bound = op_norm(compressed_mult_matrix(space, space, contraction, D, D));
        fb.cyclic_bound = op_norm(compressed_mult_matrix(space, space, cyclic, D, D));
        rep.fraction_bounds.push_back(fb);
    }
    return rep;
}

HankelForm::HankelForm(SpaceSpec space, Polynomial symbol, int D)
    : space_(std::move(space)), symbol_(std::move(symbol)), basis_(space_, D) {
    if (symbol_.dim() != space_.dim) throw std::invalid_argument("HankelForm: dimension mismatch");
    const int n = basis_.size();
    mat_ = MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const MultiIndex sum = basis_.index(i).plus(basis_.index(j));
            if (sum.degree() > symbol_.degree()) continue;
            const Complex c = symbol_.coeff(sum);
            if (c == Complex(0.0)) continue;
            const Complex v = std::conj(c) * monomial_norm_sq(space_, sum) /
                              (basis_.norm(i) * basis_.norm(j));
            mat_(i, j) = v;
            mat_(j, i) = v;
        }
    }
}

Complex HankelForm::apply(const Polynomial& f, const Polynomial& g) const {
    const VectorXcd vf = basis_.coefficients(f);
    const VectorXcd vg = basis_.coefficients(g);
    return vf.transpose() * mat_ * vg;  // bilinear, no conjugation
}

HankelForm hankel_build(const SpaceSpec& space, const Polynomial& b, int D) {
    return HankelForm(space, b, D);
}

double hankel_intertwine_check(const HankelForm& h, const Polynomial& phi, int D_inner) {
    if (D_inner < 0) throw std::invalid_argument("hankel_intertwine_check: negative degree");
    if (D_inner + std::max(phi.degree(), 0) > h.max_degree())
        throw std::invalid_argument("hankel_intertwine_check: degree budget exceeded");
    const TruncationBasis inner(h.space(), D_inner);
    double worst = 0.0;
    for (int i = 0; i < inner.size(); ++i) {
        const Polynomial ei =
            Polynomial::monomial(inner.index(i), Complex(1.0 / inner.norm(i)));
        const Polynomial phi_ei = poly_mul(phi, ei);
        for (int j = 0; j <= i; ++j) {
            const Polynomial ej =
                Polynomial::monomial(inner.index(j), Complex(1.0 / inner.norm(j)));
            const Complex lhs = h.apply(phi_ei, ej);
            const Complex rhs = h.apply(ei, poly_mul(phi, ej));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

double hankel_norm_lower(const HankelForm& h) { return op_norm(h.mat()); }

double duality_check(const SpaceSpec& space, const Factorization& f, const Polynomial& b, int D) {
    for (const auto& [p, q] : f.pairs)
        if (2 * std::max(p.degree(), 0) > D || 2 * std::max(q.degree(), 0) > D)
            throw std::invalid_argument("duality_check: factor degree exceeds D/2 budget");
    const HankelForm h = hankel_build(space, b, D);
    const Complex pairing = space_inner(space, f.product(), b);
    return wp_norm_upper(space, f) * hankel_norm_lower(h) - std::abs(pairing);
}

}  // namespace pickspace
