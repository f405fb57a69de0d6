#include "pickspace/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "pickspace/multops.hpp"
#include "pickspace/rng.hpp"

namespace pickspace {

namespace {

McEstimate batch_mean(const std::vector<Complex>& batch_sums, int per_batch) {
    const int nb = static_cast<int>(batch_sums.size());
    std::vector<Complex> means(batch_sums);
    Complex total = 0.0;
    for (auto& m : means) {
        m /= static_cast<double>(per_batch);
        total += m;
    }
    const Complex mean = total / static_cast<double>(nb);
    double var = 0.0;
    for (const auto& m : means) var += std::norm(m - mean);
    const double se = std::sqrt(var / (static_cast<double>(nb) * (nb - 1)));
    return {mean, se};
}

}  // namespace

McEstimate mc_inner_product(const RadialWeight& w, const Polynomial& p, const Polynomial& q,
                            const QuadratureConfig& cfg) {
    if (p.dim() != q.dim()) throw std::invalid_argument("mc_inner_product: dimension mismatch");
    if (!w.has_density())
        throw std::invalid_argument("mc_inner_product: weight has no evaluable density");
    if (cfg.n_samples < 1000)
        throw std::invalid_argument("mc_inner_product: need at least 1000 samples");
    const int d = p.dim();
    Rng rng(cfg.seed);
    const int nb = cfg.batches;
    const int per_batch = cfg.n_samples / nb;
    std::vector<Complex> sums(static_cast<std::size_t>(nb), Complex(0.0));
    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int b = 0; b < nb; ++b) {
        for (int s = 0; s < per_batch; ++s) {
            // uniform w.r.t. normalized volume in B_d
            double nrm = 0.0;
            for (auto& c : z) {
                c = rng.complex_normal();
                nrm += std::norm(c);
            }
            nrm = std::sqrt(nrm);
            const double r = std::pow(rng.uniform(), 1.0 / (2.0 * d));
            for (auto& c : z) c *= r / nrm;
            const Complex val = evaluate(p, std::span<const Complex>(z)) *
                                std::conj(evaluate(q, std::span<const Complex>(z))) *
                                w.density(r);
            sums[static_cast<std::size_t>(b)] += val;
        }
    }
    return batch_mean(sums, per_batch);
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    // nodes on [-1,1] by Newton iteration on P_n, then mapped to [0,1]
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < n; ++k) {
        double x = std::cos(pi * (k + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        out.emplace_back(0.5 * (x + 1.0), 0.5 * w);
    }
    return out;
}

double quad_monomial_norm(const RadialWeight& w, const MultiIndex& alpha, int radial_nodes) {
    if (!w.has_density())
        throw std::invalid_argument("quad_monomial_norm: weight has no evaluable density");
    const int d = alpha.dim();
    const int n = alpha.degree();
    const auto nodes = gauss_legendre(radial_nodes);
    double radial = 0.0;
    for (const auto& [r, wt] : nodes)
        radial += wt * std::pow(r, 2 * n + 2 * d - 1) * w.density(r);
    return sphere_factor(alpha) * 2.0 * d * radial;
}

McEstimate mc_sphere_factor(const MultiIndex& alpha, int n_samples, std::uint64_t seed,
                            int batches) {
    const int d = alpha.dim();
    Rng rng(seed);
    const int per_batch = n_samples / batches;
    std::vector<Complex> sums(static_cast<std::size_t>(batches), Complex(0.0));
    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int b = 0; b < batches; ++b) {
        for (int s = 0; s < per_batch; ++s) {
            double nrm = 0.0;
            for (auto& c : z) {
                c = rng.complex_normal();
                nrm += std::norm(c);
            }
            nrm = std::sqrt(nrm);
            double v = 1.0;
            for (int i = 0; i < d; ++i)
                v *= std::pow(std::norm(z[static_cast<std::size_t>(i)] / nrm), alpha[i]);
            sums[static_cast<std::size_t>(b)] += v;
        }
    }
    return batch_mean(sums, per_batch);
}

MatrixXcd mult_matrix_raw(const SpaceSpec& src, const SpaceSpec& dst, const Polynomial& phi,
                          int D) {
    if (src.dim != dst.dim || phi.dim() != src.dim)
        throw std::invalid_argument("mult_matrix_raw: dimension mismatch");
    if (D < 0) throw std::invalid_argument("mult_matrix_raw: negative degree bound");
    const TruncationBasis bsrc(src, D);
    const TruncationBasis bdst(dst, D + std::max(phi.degree(), 0));
    MatrixXcd m = MatrixXcd::Zero(bdst.size(), bsrc.size());
    for (int col = 0; col < bsrc.size(); ++col) {
        const Polynomial product = poly_mul(phi, Polynomial::monomial(bsrc.index(col)));
        for (int row = 0; row < bdst.size(); ++row) {
            // <phi z^a, z^b>_dst = c_{product}(b) ||z^b||^2_dst
            const Complex c = product.coeff(bdst.index(row));
            if (c == Complex(0.0)) continue;
            m(row, col) = c * monomial_norm_sq(dst, bdst.index(row)) /
                          (bsrc.norm(col) * bdst.norm(row));
        }
    }
    return m;
}

}  // namespace pickspace
