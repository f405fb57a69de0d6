#include "pickspace/multops.hpp"

#include <cmath>
#include <stdexcept>

namespace pickspace {

TruncationBasis::TruncationBasis(SpaceSpec space, int max_degree)
    : space_(std::move(space)), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("TruncationBasis: negative degree bound");
    indices_ = multi_indices_up_to(space_.dim, max_degree);
    norms_.reserve(indices_.size());
    int pos = 0;
    for (const auto& alpha : indices_) {
        norms_.push_back(std::sqrt(monomial_norm_sq(space_, alpha)));
        positions_.emplace(alpha, pos++);
    }
}

int TruncationBasis::position(const MultiIndex& alpha) const {
    auto it = positions_.find(alpha);
    return it == positions_.end() ? -1 : it->second;
}

VectorXcd TruncationBasis::coefficients(const Polynomial& p) const {
    if (p.dim() != space_.dim) throw std::invalid_argument("TruncationBasis::coefficients: dimension mismatch");
    if (p.degree() > max_degree_)
        throw std::invalid_argument("TruncationBasis::coefficients: degree exceeds the basis");
    VectorXcd v = VectorXcd::Zero(size());
    for (const auto& [alpha, c] : p.terms()) {
        const int pos = position(alpha);
        v(pos) = c * norms_[static_cast<std::size_t>(pos)];
    }
    return v;
}

MultiplierTuple::MultiplierTuple(int dim, std::vector<Polynomial> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) throw std::invalid_argument("MultiplierTuple: dimension must be >= 1");
    for (const auto& p : entries_)
        if (p.dim() != dim) throw std::invalid_argument("MultiplierTuple: entry dimension mismatch");
}

int MultiplierTuple::max_degree() const {
    int d = 0;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
}

SparseMatrixXcd mult_matrix_sparse(const TruncationBasis& src, const TruncationBasis& dst,
                                   const Polynomial& phi) {
    if (src.space().dim != dst.space().dim || phi.dim() != src.space().dim)
        throw std::invalid_argument("mult_matrix: dimension mismatch");
    if (dst.max_degree() < src.max_degree() + std::max(phi.degree(), 0))
        throw std::invalid_argument("mult_matrix: codomain basis too small for exact products");
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(phi.term_count() * static_cast<std::size_t>(src.size()));
    for (int col = 0; col < src.size(); ++col) {
        const MultiIndex& alpha = src.index(col);
        for (const auto& [gamma, c] : phi.terms()) {
            const MultiIndex beta = alpha.plus(gamma);
            const int row = dst.position(beta);
            // entry <phi z^a, z^b>_dst / (||z^a||_src ||z^b||_dst)
            trip.emplace_back(row, col,
                              c * dst.norm(row) / src.norm(col));
        }
    }
    SparseMatrixXcd m(dst.size(), src.size());
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

MatrixXcd mult_matrix(const SpaceSpec& src, const SpaceSpec& dst, const Polynomial& phi, int D) {
    if (D < 0) throw std::invalid_argument("mult_matrix: negative degree bound");
    const TruncationBasis bsrc(src, D);
    const TruncationBasis bdst(dst, D + std::max(phi.degree(), 0));
    return MatrixXcd(mult_matrix_sparse(bsrc, bdst, phi));
}

MatrixXcd compressed_mult_matrix(const SpaceSpec& src, const SpaceSpec& dst,
                                 const Polynomial& taylor_section, int D_src, int D_dst) {
    if (src.dim != dst.dim || taylor_section.dim() != src.dim)
        throw std::invalid_argument("compressed_mult_matrix: dimension mismatch");
    if (D_src < 0 || D_dst < 0)
        throw std::invalid_argument("compressed_mult_matrix: negative degree bound");
    const TruncationBasis bsrc(src, D_src);
    const TruncationBasis bdst(dst, D_dst);
    MatrixXcd m = MatrixXcd::Zero(bdst.size(), bsrc.size());
    for (int col = 0; col < bsrc.size(); ++col) {
        for (const auto& [gamma, c] : taylor_section.terms()) {
            const MultiIndex beta = bsrc.index(col).plus(gamma);
            const int row = bdst.position(beta);
            if (row < 0) continue;  // compressed away
            m(row, col) += c * bdst.norm(row) / bsrc.norm(col);
        }
    }
    return m;
}

double column_norm(const SpaceSpec& src, const SpaceSpec& dst, const MultiplierTuple& phi, int D) {
    if (phi.size() == 0) return 0.0;
    const TruncationBasis bsrc(src, D);
    const TruncationBasis bdst(dst, D + phi.max_degree());
    MatrixXcd g = MatrixXcd::Zero(bsrc.size(), bsrc.size());
    for (int i = 0; i < phi.size(); ++i) {
        const SparseMatrixXcd m = mult_matrix_sparse(bsrc, bdst, phi[i]);
        g += MatrixXcd(SparseMatrixXcd(m.adjoint() * m));
    }
    return std::sqrt(std::max(0.0, hermitian_max_eig(g)));
}

double row_norm(const SpaceSpec& src, const SpaceSpec& dst, const MultiplierTuple& phi, int D) {
    if (phi.size() == 0) return 0.0;
    const TruncationBasis bsrc(src, D);
    const TruncationBasis bdst(dst, D + phi.max_degree());
    MatrixXcd g = MatrixXcd::Zero(bdst.size(), bdst.size());
    for (int i = 0; i < phi.size(); ++i) {
        const SparseMatrixXcd m = mult_matrix_sparse(bsrc, bdst, phi[i]);
        g += MatrixXcd(SparseMatrixXcd(m * m.adjoint()));
    }
    return std::sqrt(std::max(0.0, hermitian_max_eig(g)));
}

double pointwise_l2_sup(const MultiplierTuple& phi, const PointSet& grid) {
    if (phi.dim() != grid.dim()) throw std::invalid_argument("pointwise_l2_sup: dimension mismatch");
    double best = 0.0;
    for (int p = 0; p < grid.size(); ++p) {
        double s = 0.0;
        for (int i = 0; i < phi.size(); ++i)
            s += std::norm(evaluate(phi[i], std::span<const Complex>(grid[p])));
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

double kernel_ratio_bound(const KernelSpec& k_src, const KernelSpec& k_dst,
                          const MultiplierTuple& phi, const PointSet& grid) {
    if (k_src.dim() != grid.dim() || k_dst.dim() != grid.dim() || phi.dim() != grid.dim())
        throw std::invalid_argument("kernel_ratio_bound: dimension mismatch");
    double best = 0.0;
    for (int p = 0; p < grid.size(); ++p) {
        double s = 0.0;
        for (int i = 0; i < phi.size(); ++i)
            s += std::norm(evaluate(phi[i], std::span<const Complex>(grid[p])));
        const double ksrc = std::real(k_src.eval(grid[p], grid[p]));
        const double kdst = std::real(k_dst.eval(grid[p], grid[p]));
        best = std::max(best, s * ksrc / kdst);
    }
    return best;
}

MultiplierTuple counterexample_tuple(int d, int n_max) {
    if (d < 2) throw std::invalid_argument("counterexample_tuple: requires d >= 2");
    if (n_max < 1) throw std::invalid_argument("counterexample_tuple: n_max must be >= 1");
    std::vector<Polynomial> entries;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& alpha : multi_indices_of_degree(d, n)) {
            // multiplicity |a|!/a! of words collapsing to z^a, as a sqrt weight
            double log_mult = std::lgamma(n + 1.0);
            for (int i = 0; i < d; ++i) log_mult -= std::lgamma(alpha[i] + 1.0);
            const double w = std::exp(0.5 * log_mult) / n;
            entries.push_back(Polynomial::monomial(alpha, w));
        }
    }
    return MultiplierTuple(d, std::move(entries));
}

double counterexample_column_sq_lower(int d, int n_max) {
    if (d < 2) throw std::invalid_argument("counterexample_column_sq_lower: requires d >= 2");
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n)
        sum += static_cast<double>(binomial(n + d - 1, d - 1)) / (static_cast<double>(n) * n);
    return sum;
}

CounterexampleReport counterexample_report(int d, int n_max, int D) {
    const auto tuple = counterexample_tuple(d, n_max);
    const SpaceSpec h2d = SpaceSpec::drury_arveson(d);
    CounterexampleReport rep{};
    rep.column_sq_lower = counterexample_column_sq_lower(d, n_max);
    rep.row_upper_truncated = row_norm(h2d, h2d, tuple, D);
    return rep;
}

double d_contraction_slack(const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw std::invalid_argument("d_contraction_slack: empty tuple");
    const int d = fs.front().dim();
    for (const auto& f : fs)
        if (f.dim() != d) throw std::invalid_argument("d_contraction_slack: dimension mismatch");
    if (static_cast<int>(fs.size()) != d)
        throw std::invalid_argument("d_contraction_slack: need exactly d polynomials");
    const SpaceSpec h2d = SpaceSpec::drury_arveson(d);
    Polynomial sum = Polynomial::zero(d);
    double sq = 0.0;
    for (int i = 0; i < d; ++i) {
        sum = sum + Polynomial::coordinate(d, i) * fs[static_cast<std::size_t>(i)];
        const double nf = space_norm(h2d, fs[static_cast<std::size_t>(i)]);
        sq += nf * nf;
    }
    const double ns = space_norm(h2d, sum);
    return sq - ns * ns;
}

double leibnitz_check(const MultiplierTuple& phi, int N, int j, int k,
                      const std::vector<Polynomial>& samples, int dim,
                      const RadialWeight& w_src, const RadialWeight& w_dst) {
    if (j < 0 || k < 0 || j + k > N)
        throw std::invalid_argument("leibnitz_check: need j, k >= 0 and j + k <= N");
    const SpaceSpec top = SpaceSpec::besov(dim, N, w_src);
    const SpaceSpec target = SpaceSpec::besov(dim, N - (j + k), w_dst);
    // in the Leibnitz terms R^0 acts as the identity (the order-zero term of
    // the product rule is phi * R^N h), unlike the standalone operator which
    // drops constants for every order
    const auto radial_power = [](const Polynomial& p, int t) {
        return t == 0 ? p : radial_derivative(p, t);
    };
    double worst = 0.0;
    for (const auto& h : samples) {
        const double hn = space_norm(top, h);
        if (hn == 0.0) continue;
        const Polynomial rkh = radial_power(h, k);
        double num = 0.0;
        for (int i = 0; i < phi.size(); ++i) {
            const Polynomial g = poly_mul(radial_power(phi[i], j), rkh);
            const double gn = space_norm(target, g);
            num += gn * gn;
        }
        worst = std::max(worst, num / (hn * hn));
    }
    return worst;
}

double row_from_column_report(const SpaceSpec& src, const SpaceSpec& dst,
                              const std::vector<MultiplierTuple>& samples, int D) {
    double worst = 0.0;
    for (const auto& tuple : samples) {
        const double col = column_norm(src, dst, tuple, D);
        if (col == 0.0) continue;
        worst = std::max(worst, row_norm(src, dst, tuple, D) / col);
    }
    return worst;
}

}  // namespace pickspace
