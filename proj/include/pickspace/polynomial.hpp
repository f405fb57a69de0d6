#ifndef PICKSPACE_POLYNOMIAL_HPP
#define PICKSPACE_POLYNOMIAL_HPP

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pickspace/multiindex.hpp"

namespace pickspace {

using Complex = std::complex<double>;

/// Sparse multivariate polynomial with complex coefficients, kept in canonical
/// form: no stored coefficient is exactly zero, terms iterate in grlex order.
/// Values are immutable from the caller's point of view; all operations return
/// new polynomials.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Complex, GrlexLess>;

    explicit Polynomial(int dim);

    static Polynomial zero(int dim) { return Polynomial(dim); }
    static Polynomial one(int dim);
    static Polynomial constant(int dim, Complex c);
    static Polynomial monomial(const MultiIndex& alpha, Complex c = 1.0);
    static Polynomial coordinate(int dim, int i);  // z_{i+1}, zero-based i

    int dim() const { return dim_; }
    /// max |alpha| over stored terms; -1 for the zero polynomial
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Complex coeff(const MultiIndex& alpha) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Complex c) const;
    Polynomial operator-() const { return *this * Complex(-1.0); }

    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    std::string to_string() const;  // human readable, grlex order

    /// builder used by parsers and constructors; drops the term if the
    /// accumulated coefficient becomes exactly zero
    void add_term(const MultiIndex& alpha, Complex c);

private:
    int dim_;
    TermMap terms_;
};

inline Polynomial operator*(Complex c, const Polynomial& p) { return p * c; }

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Sum of the terms of p of total degree exactly n.
Polynomial homogeneous_part(const Polynomial& p, int n);

/// R^t: scales the degree-n homogeneous part by n^t for n >= 1 and drops the
/// constant part (the sum defining R^t starts at n = 1, for every t).
Polynomial radial_derivative(const Polynomial& p, double t);

/// Terms of degree <= D.
Polynomial truncate(const Polynomial& p, int D);

Complex evaluate(const Polynomial& p, std::span<const Complex> z);

/// Taylor polynomial of 1/(1 - r*psi) through total degree D. Requires
/// psi(0) = 0, which makes the expansion exact degree by degree.
Polynomial invert_one_minus(const Polynomial& psi, double r, int D);

/// Integer power by repeated multiplication.
Polynomial poly_pow(const Polynomial& p, int k);

}  // namespace pickspace

#endif
