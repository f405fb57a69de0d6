#include "pickspace/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pickspace/rng.hpp"

namespace pickspace {

namespace {

Complex herm_inner(std::span<const Complex> z, std::span<const Complex> w) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

double sq_norm(std::span<const Complex> z) {
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    return s;
}

void require_in_ball(std::span<const Complex> z, const char* where) {
    if (!(sq_norm(z) < 1.0)) throw std::invalid_argument(std::string(where) + ": point outside the open unit ball");
}

// log(1/(1-x))/x with the removable singularity at 0; series branch keeps the
// evaluation stable for small |x|
Complex dirichlet_kernel_value(Complex x) {
    if (std::abs(x) < 1e-3) {
        Complex sum = 0.0;
        Complex p = 1.0;
        for (int k = 0; k < 10; ++k) {
            sum += p / static_cast<double>(k + 1);
            p *= x;
        }
        return sum;
    }
    return -std::log(1.0 - x) / x;
}

}  // namespace

KernelSpec KernelSpec::drury_arveson(int d) {
    if (d < 1) throw std::invalid_argument("KernelSpec::drury_arveson: d must be >= 1");
    return KernelSpec(Kind::DruryArveson, d, 1.0);
}

KernelSpec KernelSpec::szego() { return KernelSpec(Kind::Szego, 1, 1.0); }

KernelSpec KernelSpec::dirichlet() { return KernelSpec(Kind::Dirichlet, 1, 0.0); }

KernelSpec KernelSpec::power(int d, double beta) {
    if (d < 1) throw std::invalid_argument("KernelSpec::power: d must be >= 1");
    if (!(beta > 0.0)) throw std::invalid_argument("KernelSpec::power: beta must be > 0");
    return KernelSpec(Kind::Power, d, beta);
}

KernelSpec KernelSpec::from_space(const SpaceSpec& space, int truncation_degree) {
    if (truncation_degree < 0)
        throw std::invalid_argument("KernelSpec::from_space: negative truncation degree");
    KernelSpec k(Kind::FromSpace, space.dim, 0.0);
    auto basis = std::make_shared<std::vector<std::pair<MultiIndex, double>>>();
    for (const auto& alpha : multi_indices_up_to(space.dim, truncation_degree))
        basis->emplace_back(alpha, monomial_norm_sq(space, alpha));
    k.basis_ = std::move(basis);
    return k;
}

std::string KernelSpec::name() const {
    switch (kind_) {
        case Kind::DruryArveson: return "drury_arveson(d=" + std::to_string(dim_) + ")";
        case Kind::Szego: return "szego";
        case Kind::Dirichlet: return "dirichlet";
        case Kind::Power: return "power(d=" + std::to_string(dim_) + ",beta=" + std::to_string(beta_) + ")";
        case Kind::FromSpace: return "from_space(d=" + std::to_string(dim_) + ")";
    }
    return "?";
}

Complex KernelSpec::eval(std::span<const Complex> z, std::span<const Complex> w) const {
    if (static_cast<int>(z.size()) != dim_ || static_cast<int>(w.size()) != dim_)
        throw std::invalid_argument("KernelSpec::eval: point dimension mismatch");
    require_in_ball(z, "KernelSpec::eval");
    require_in_ball(w, "KernelSpec::eval");
    switch (kind_) {
        case Kind::DruryArveson:
        case Kind::Szego:
            return 1.0 / (1.0 - herm_inner(z, w));
        case Kind::Dirichlet:
            return dirichlet_kernel_value(herm_inner(z, w));
        case Kind::Power:
            return std::exp(-beta_ * std::log(1.0 - herm_inner(z, w)));
        case Kind::FromSpace: {
            Complex sum = 0.0;
            for (const auto& [alpha, msq] : *basis_) {
                Complex m = 1.0;
                for (int i = 0; i < dim_; ++i)
                    for (int e = 0; e < alpha[i]; ++e)
                        m *= z[static_cast<std::size_t>(i)] * std::conj(w[static_cast<std::size_t>(i)]);
                sum += m / msq;
            }
            return sum;
        }
    }
    throw std::logic_error("KernelSpec::eval: unknown kind");
}

Complex kernel_eval(const KernelSpec& k, std::span<const Complex> z, std::span<const Complex> w) {
    return k.eval(z, w);
}

PointSet::PointSet(int dim, std::vector<Point> points, std::optional<std::uint64_t> seed)
    : dim_(dim), points_(std::move(points)), seed_(seed) {
    if (dim < 1) throw std::invalid_argument("PointSet: dimension must be >= 1");
    for (const auto& p : points_) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("PointSet: point dimension mismatch");
        require_in_ball(p, "PointSet");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j]) throw std::invalid_argument("PointSet: points must be pairwise distinct");
}

PointSet PointSet::random(int dim, int count, std::uint64_t seed, double radius) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("PointSet::random: radius must lie in (0,1)");
    Rng rng(seed);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(pts.size()) < count) {
        Point p(static_cast<std::size_t>(dim));
        double nrm = 0.0;
        for (auto& c : p) {
            c = rng.complex_normal();
            nrm += std::norm(c);
        }
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        const double r = radius * std::pow(rng.uniform(), 1.0 / (2.0 * dim));
        for (auto& c : p) c *= r / nrm;
        if (std::find(pts.begin(), pts.end(), p) != pts.end()) continue;
        pts.push_back(std::move(p));
    }
    return PointSet(dim, std::move(pts), seed);
}

HermitianMatrix::HermitianMatrix(MatrixXcd m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("HermitianMatrix: matrix not square");
    const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
    const double defect = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale)
        throw std::invalid_argument("HermitianMatrix: matrix is not Hermitian within tolerance");
}

HermitianMatrix gram(const KernelSpec& k, const PointSet& pts) {
    if (k.dim() != pts.dim()) throw std::invalid_argument("gram: kernel/point dimension mismatch");
    const int n = pts.size();
    MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            g(i, j) = k.eval(pts[i], pts[j]);
            g(j, i) = std::conj(g(i, j));
        }
    }
    return HermitianMatrix(std::move(g));
}

double min_eigenvalue(const HermitianMatrix& m) { return hermitian_min_eig(m.mat()); }

HermitianMatrix complete_pick_gram(const KernelSpec& k, const PointSet& pts, const Point& z0) {
    if (static_cast<int>(z0.size()) != k.dim())
        throw std::invalid_argument("complete_pick_gram: z0 dimension mismatch");
    const Complex k00 = k.eval(z0, z0);
    const int n = pts.size();
    std::vector<Complex> kz0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        kz0[static_cast<std::size_t>(i)] = k.eval(pts[i], z0);
        if (std::abs(kz0[static_cast<std::size_t>(i)]) < 1e-14)
            throw std::invalid_argument("complete_pick_gram: kernel vanishes against the base point");
    }
    if (std::abs(k00) < 1e-14)
        throw std::invalid_argument("complete_pick_gram: kernel vanishes at the base point");
    MatrixXcd u(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const Complex knorm = k.eval(pts[i], pts[j]) * k00 /
                                  (kz0[static_cast<std::size_t>(i)] * std::conj(kz0[static_cast<std::size_t>(j)]));
            u(i, j) = 1.0 - 1.0 / knorm;
            u(j, i) = std::conj(u(i, j));
        }
    }
    return HermitianMatrix(std::move(u));
}

HermitianMatrix schur_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("schur_product: order mismatch");
    return HermitianMatrix(a.mat().cwiseProduct(b.mat()));
}

HermitianMatrix contractive_mult_gram(const KernelSpec& k_src, const KernelSpec& k_dst,
                                      const Polynomial& phi, const PointSet& pts) {
    if (k_src.dim() != pts.dim() || k_dst.dim() != pts.dim() || phi.dim() != pts.dim())
        throw std::invalid_argument("contractive_mult_gram: dimension mismatch");
    const int n = pts.size();
    std::vector<Complex> phival(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        phival[static_cast<std::size_t>(i)] = evaluate(phi, std::span<const Complex>(pts[i]));
    MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            m(i, j) = k_dst.eval(pts[i], pts[j]) -
                      phival[static_cast<std::size_t>(i)] * std::conj(phival[static_cast<std::size_t>(j)]) *
                          k_src.eval(pts[i], pts[j]);
            m(j, i) = std::conj(m(i, j));
        }
    }
    return HermitianMatrix(std::move(m));
}

DescentResult inclusion_descent_check(const Polynomial& phi, int d, double s, double t,
                                      const PointSet& pts) {
    if (!(s < (d + 1) / 2.0 && t < (d + 1) / 2.0))
        throw std::invalid_argument("inclusion_descent_check: requires s, t < (d+1)/2");
    const auto k_at = [d](double level) { return KernelSpec::power(d, d + 1 - 2 * level); };
    DescentResult r{};
    r.level_eig = min_eigenvalue(contractive_mult_gram(k_at(s), k_at(t), phi, pts));
    r.descended_eig = min_eigenvalue(contractive_mult_gram(k_at(s - 1), k_at(t - 1), phi, pts));
    return r;
}

RefutationResult pick_refutation_search(const KernelSpec& k, const Point& z0, int budget_points,
                                        std::uint64_t seed, double threshold) {
    Rng rng(seed);
    RefutationResult res;
    const int d = k.dim();
    while (res.points_used < budget_points) {
        const bool circle = rng.uniform() < 0.5;
        std::vector<Point> pts;
        if (circle) {
            // m-th roots of unity along a random complex direction
            const int m = rng.uniform_int(4, 12);
            Point dir(static_cast<std::size_t>(d));
            double nrm = 0.0;
            for (auto& c : dir) {
                c = rng.complex_normal();
                nrm += std::norm(c);
            }
            nrm = std::sqrt(nrm);
            const double r = rng.uniform(0.4, 0.9);
            for (auto& c : dir) c *= r / nrm;
            for (int j = 0; j < m; ++j) {
                const double th = 6.283185307179586 * j / m;
                Point p(dir);
                const Complex rot(std::cos(th), std::sin(th));
                for (auto& c : p) c *= rot;
                pts.push_back(std::move(p));
            }
        } else {
            const int m = rng.uniform_int(4, 12);
            const auto ps = PointSet::random(d, m, rng.next_u64(), 0.9);
            pts = ps.points();
        }
        res.points_used += static_cast<int>(pts.size());
        PointSet candidate(d, pts);
        const double eig = min_eigenvalue(complete_pick_gram(k, candidate, z0));
        if (eig < -threshold) {
            res.refuted = true;
            res.min_eig = eig;
            res.witness = std::move(candidate);
            return res;
        }
        res.min_eig = std::min(res.min_eig, eig);
    }
    return res;
}

}  // namespace pickspace
