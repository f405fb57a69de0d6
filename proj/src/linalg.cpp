#include "pickspace/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

#include "pickspace/rng.hpp"

namespace pickspace {

double hermitian_min_eig(const MatrixXcd& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_min_eig: matrix not square");
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

namespace {

double lanczos_max_eig(const MatrixXcd& m, int max_iter, double tol) {
    const Eigen::Index n = m.rows();
    Rng rng(0x9e3779b97f4a7c15ULL);
    VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = std::complex<double>(1.0 + 0.1 * rng.normal(), 0.1 * rng.normal());
    v.normalize();

    std::vector<VectorXcd> basis;
    std::vector<double> alpha, beta;
    basis.push_back(v);
    VectorXcd w;
    double lambda_prev = 0.0;

    for (int k = 0; k < max_iter && k < n; ++k) {
        w = m * basis.back();
        const double a = std::real(basis.back().dot(w));
        alpha.push_back(a);
        w -= a * basis.back();
        if (k > 0) w -= beta.back() * basis[basis.size() - 2];
        // full reorthogonalization, two passes
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
        const double b = w.norm();

        // Ritz value from the tridiagonal section
        const int kk = static_cast<int>(alpha.size());
        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(kk, kk);
        for (int i = 0; i < kk; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < kk) {
                t(i, i + 1) = beta[static_cast<std::size_t>(i)];
                t(i + 1, i) = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
        const double lambda = es.eigenvalues().maxCoeff();

        if (b < tol * std::max(1.0, std::abs(lambda))) return lambda;
        if (k > 8 && std::abs(lambda - lambda_prev) < tol * std::max(1.0, std::abs(lambda)))
            return lambda;
        lambda_prev = lambda;

        beta.push_back(b);
        basis.push_back(w / b);
    }
    return lambda_prev;
}

}  // namespace

double hermitian_max_eig(const MatrixXcd& m, int dense_threshold) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_max_eig: matrix not square");
    if (m.rows() == 0) return 0.0;
    if (m.rows() <= dense_threshold) {
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
        return es.eigenvalues().maxCoeff();
    }
    return lanczos_max_eig(m, 400, 1e-13);
}

double op_norm(const MatrixXcd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    MatrixXcd g;
    if (m.cols() <= m.rows())
        g = m.adjoint() * m;
    else
        g = m * m.adjoint();
    const double lam = hermitian_max_eig(g);
    return std::sqrt(std::max(0.0, lam));
}

}  // namespace pickspace
