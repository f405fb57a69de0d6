#include "pickspace/multiindex.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pickspace {

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
    if (exps_.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    degree_ = 0;
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
        degree_ += e;
    }
}

MultiIndex MultiIndex::zero(int dim) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0)); }

MultiIndex MultiIndex::unit(int dim, int coordinate) {
    if (coordinate < 0 || coordinate >= dim)
        throw std::invalid_argument("MultiIndex::unit: coordinate out of range");
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(coordinate)] = 1;
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::plus(const MultiIndex& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("MultiIndex::plus: dimension mismatch");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return MultiIndex(std::move(e));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& other) const {
    if (dim() != other.dim()) throw std::invalid_argument("MultiIndex::minus: dimension mismatch");
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= other.exps_[i];
        if (e[i] < 0) return std::nullopt;
    }
    return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) os << ',';
        os << exps_[i];
    }
    os << ')';
    return os.str();
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // same degree: lexicographically larger tuple comes first
    return a.exponents() > b.exponents();
}

namespace {
void emit_degree(int dim, int degree, std::vector<int>& work, int pos,
                 std::vector<MultiIndex>& out) {
    if (pos == dim - 1) {
        work[static_cast<std::size_t>(pos)] = degree;
        out.emplace_back(work);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        work[static_cast<std::size_t>(pos)] = e;
        emit_degree(dim, degree - e, work, pos + 1, out);
    }
}
}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int dim, int degree) {
    if (dim < 1) throw std::invalid_argument("multi_indices_of_degree: dim must be >= 1");
    if (degree < 0) return {};
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(binomial(degree + dim - 1, dim - 1)));
    std::vector<int> work(static_cast<std::size_t>(dim), 0);
    emit_degree(dim, degree, work, 0, out);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree) {
    std::vector<MultiIndex> out;
    if (max_degree < 0) return out;
    out.reserve(static_cast<std::size_t>(basis_size(dim, max_degree)));
    for (int n = 0; n <= max_degree; ++n) {
        auto level = multi_indices_of_degree(dim, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

long long basis_size(int dim, int max_degree) {
    if (max_degree < 0) return 0;
    return binomial(max_degree + dim, dim);
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace pickspace
