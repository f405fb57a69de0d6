#include "pickspace/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace pickspace {

double beta_moment(int n, double a) {
    if (n < 0) throw std::invalid_argument("beta_moment: n must be >= 0");
    if (!(a > -1.0)) throw std::invalid_argument("beta_moment: requires a > -1");
    return std::exp(std::lgamma(n + 1.0) + std::lgamma(a + 1.0) - std::lgamma(n + a + 2.0));
}

Rational monomial_norm_da(const MultiIndex& alpha) {
    // a! / |a|!, with multiplications and divisions interleaved so the
    // running fraction stays reduced and within int64
    std::vector<std::int64_t> num;
    for (int i = 0; i < alpha.dim(); ++i)
        for (int k = 2; k <= alpha[i]; ++k) num.push_back(k);
    Rational r(1);
    std::size_t i = 0;
    for (int k = 2; k <= alpha.degree(); ++k) {
        if (i < num.size()) r = r * Rational(num[i++]);
        r = r / Rational(k);
    }
    while (i < num.size()) r = r * Rational(num[i++]);
    return r;
}

double monomial_norm_da_d(const MultiIndex& alpha) {
    // interleaved double product; exact for the small factorials and
    // accurate to a few ulp in general
    std::vector<double> num;
    for (int i = 0; i < alpha.dim(); ++i)
        for (int k = 2; k <= alpha[i]; ++k) num.push_back(k);
    double r = 1.0;
    std::size_t i = 0;
    for (int k = 2; k <= alpha.degree(); ++k) {
        if (i < num.size()) r *= num[i++];
        r /= k;
    }
    while (i < num.size()) r *= num[i++];
    return r;
}

double sphere_factor(const MultiIndex& alpha) {
    const int d = alpha.dim();
    const int n = alpha.degree();
    double log_v = std::lgamma(d) - std::lgamma(d + n);
    for (int i = 0; i < d; ++i) log_v += std::lgamma(alpha[i] + 1.0);
    return std::exp(log_v);
}

double bergman_monomial_norm_sq(int dim, const RadialWeight& w, const MultiIndex& alpha) {
    if (alpha.dim() != dim)
        throw std::invalid_argument("bergman_monomial_norm_sq: dimension mismatch");
    const int n = alpha.degree();
    return sphere_factor(alpha) * 2.0 * dim * w.moment(2 * n + 2 * dim - 1);
}

double monomial_norm_sq(const SpaceSpec& space, const MultiIndex& alpha) {
    if (alpha.dim() != space.dim)
        throw std::invalid_argument("monomial_norm_sq: dimension mismatch");
    if (space.kind == SpaceSpec::Kind::DruryArvesonExact) return monomial_norm_da_d(alpha);
    const int n = alpha.degree();
    const double m = bergman_monomial_norm_sq(space.dim, space.weight, alpha);
    if (n == 0) return m;
    return std::pow(static_cast<double>(n), 2.0 * space.s) * m;
}

double space_norm(const SpaceSpec& space, const Polynomial& p) {
    if (p.dim() != space.dim) throw std::invalid_argument("space_norm: dimension mismatch");
    double sum = 0.0;
    for (const auto& [alpha, c] : p.terms()) sum += std::norm(c) * monomial_norm_sq(space, alpha);
    return std::sqrt(sum);
}

Complex space_inner(const SpaceSpec& space, const Polynomial& p, const Polynomial& q) {
    if (p.dim() != space.dim || q.dim() != space.dim)
        throw std::invalid_argument("space_inner: dimension mismatch");
    Complex sum = 0.0;
    for (const auto& [alpha, c] : p.terms()) {
        const Complex qc = q.coeff(alpha);
        if (qc != Complex(0.0)) sum += c * std::conj(qc) * monomial_norm_sq(space, alpha);
    }
    return sum;
}

std::pair<double, double> besov_shift_ratio(double s, double a, int dim, int Dmax) {
    if (Dmax < 1) throw std::invalid_argument("besov_shift_ratio: Dmax must be >= 1");
    const SpaceSpec shifted = SpaceSpec::besov(dim, s, RadialWeight::standard(a));
    const SpaceSpec flat = SpaceSpec::besov(dim, s - a / 2.0, RadialWeight::one());
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int n = 1; n <= Dmax; ++n) {
        for (const auto& alpha : multi_indices_of_degree(dim, n)) {
            const double r = monomial_norm_sq(shifted, alpha) / monomial_norm_sq(flat, alpha);
            if (first) {
                lo = hi = r;
                first = false;
            } else {
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        }
    }
    return {lo, hi};
}

MonomialNormTable::MonomialNormTable(SpaceSpec space, int max_degree)
    : space_(std::move(space)), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("MonomialNormTable: negative degree bound");
    for (const auto& alpha : multi_indices_up_to(space_.dim, max_degree))
        values_.emplace(alpha, monomial_norm_sq(space_, alpha));
}

double MonomialNormTable::norm_sq(const MultiIndex& alpha) const {
    auto it = values_.find(alpha);
    if (it == values_.end())
        throw std::out_of_range("MonomialNormTable: index beyond cached degree " +
                                alpha.to_string());
    return it->second;
}

double MonomialNormTable::norm(const MultiIndex& alpha) const { return std::sqrt(norm_sq(alpha)); }

}  // namespace pickspace
