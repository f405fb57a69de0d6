#ifndef PICKSPACE_MULTIINDEX_HPP
#define PICKSPACE_MULTIINDEX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pickspace {

/// Exponent tuple of a monomial z^alpha on C^d. Immutable after construction.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> exponents);

    static MultiIndex zero(int dim);
    static MultiIndex unit(int dim, int coordinate);

    int dim() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exps_; }

    MultiIndex plus(const MultiIndex& other) const;
    /// componentwise difference, or nullopt if any entry would go negative
    std::optional<MultiIndex> minus(const MultiIndex& other) const;

    bool operator==(const MultiIndex& other) const { return exps_ == other.exps_; }
    bool operator!=(const MultiIndex& other) const { return !(*this == other); }

    std::string to_string() const;  // e.g. "(2,0,1)"

private:
    std::vector<int> exps_;
    int degree_;
};

/// Graded-lexicographic order: lower total degree first; within a degree,
/// lexicographically larger exponent tuple first (z1^2 before z1 z2 before z2^2).
struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of the given total degree, in grlex order.
std::vector<MultiIndex> multi_indices_of_degree(int dim, int degree);

/// All multi-indices with total degree <= max_degree, in grlex order.
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_degree);

/// Number of multi-indices with |alpha| <= D in dimension d: C(D + d, d).
long long basis_size(int dim, int max_degree);

long long binomial(int n, int k);

}  // namespace pickspace

#endif
