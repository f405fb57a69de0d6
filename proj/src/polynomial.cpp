#include "pickspace/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pickspace {

Polynomial::Polynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("Polynomial: dimension must be >= 1");
}

Polynomial Polynomial::one(int dim) { return constant(dim, 1.0); }

Polynomial Polynomial::constant(int dim, Complex c) {
    Polynomial p(dim);
    p.add_term(MultiIndex::zero(dim), c);
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, Complex c) {
    Polynomial p(alpha.dim());
    p.add_term(alpha, c);
    return p;
}

Polynomial Polynomial::coordinate(int dim, int i) {
    return monomial(MultiIndex::unit(dim, i));
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // grlex order puts the highest total degree last
    return terms_.rbegin()->first.degree();
}

Complex Polynomial::coeff(const MultiIndex& alpha) const {
    if (alpha.dim() != dim_) throw std::invalid_argument("Polynomial::coeff: dimension mismatch");
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, Complex c) {
    if (alpha.dim() != dim_) throw std::invalid_argument("Polynomial::add_term: dimension mismatch");
    if (c == Complex(0.0)) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return poly_add(*this, o); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return poly_add(*this, o * Complex(-1.0)); }

Polynomial Polynomial::operator*(const Polynomial& o) const { return poly_mul(*this, o); }

Polynomial Polynomial::operator*(Complex c) const {
    Polynomial r(dim_);
    if (c == Complex(0.0)) return r;
    for (const auto& [alpha, v] : terms_) r.terms_.emplace(alpha, v * c);
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.real();
        if (c.imag() >= 0) os << '+';
        os << c.imag() << "i)";
        for (int i = 0; i < dim_; ++i) {
            if (alpha[i] == 0) continue;
            os << " z" << (i + 1);
            if (alpha[i] > 1) os << '^' << alpha[i];
        }
    }
    return os.str();
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("poly_add: dimension mismatch");
    Polynomial r(p.dim());
    for (const auto& [alpha, c] : p.terms()) r.add_term(alpha, c);
    for (const auto& [alpha, c] : q.terms()) r.add_term(alpha, c);
    return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("poly_mul: dimension mismatch");
    Polynomial r(p.dim());
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) r.add_term(a.plus(b), ca * cb);
    return r;
}

Polynomial homogeneous_part(const Polynomial& p, int n) {
    Polynomial r(p.dim());
    for (const auto& [alpha, c] : p.terms())
        if (alpha.degree() == n) r.add_term(alpha, c);
    return r;
}

Polynomial radial_derivative(const Polynomial& p, double t) {
    Polynomial r(p.dim());
    for (const auto& [alpha, c] : p.terms()) {
        const int n = alpha.degree();
        if (n == 0) continue;
        r.add_term(alpha, c * std::pow(static_cast<double>(n), t));
    }
    return r;
}

Polynomial truncate(const Polynomial& p, int D) {
    Polynomial r(p.dim());
    for (const auto& [alpha, c] : p.terms()) {
        if (alpha.degree() > D) break;  // grlex order is graded
        r.add_term(alpha, c);
    }
    return r;
}

Complex evaluate(const Polynomial& p, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != p.dim())
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Complex sum = 0.0;
    for (const auto& [alpha, c] : p.terms()) {
        Complex m = c;
        for (int i = 0; i < p.dim(); ++i) {
            for (int e = 0; e < alpha[i]; ++e) m *= z[static_cast<std::size_t>(i)];
        }
        sum += m;
    }
    return sum;
}

Polynomial invert_one_minus(const Polynomial& psi, double r, int D) {
    if (psi.coeff(MultiIndex::zero(psi.dim())) != Complex(0.0))
        throw std::invalid_argument("invert_one_minus: psi must vanish at 0");
    if (D < 0) throw std::invalid_argument("invert_one_minus: negative degree bound");
    const Polynomial rpsi = psi * Complex(r);
    // Horner form of the geometric series: 1 + rpsi(1 + rpsi(...)). Since psi
    // has no constant term, D rounds suffice and truncation at D is exact.
    Polynomial acc = Polynomial::one(psi.dim());
    for (int k = 0; k < D; ++k) {
        acc = truncate(poly_mul(rpsi, acc), D) + Polynomial::one(psi.dim());
    }
    return acc;
}

Polynomial poly_pow(const Polynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
    Polynomial r = Polynomial::one(p.dim());
    for (int i = 0; i < k; ++i) r = poly_mul(r, p);
    return r;
}

}  // namespace pickspace
