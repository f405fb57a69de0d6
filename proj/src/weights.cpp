#include "pickspace/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace pickspace {

RadialWeight RadialWeight::one() { return RadialWeight(Kind::One, 0.0, {}); }

RadialWeight RadialWeight::standard(double a) {
    if (!(a > -1.0)) throw std::invalid_argument("RadialWeight::standard: requires a > -1");
    return RadialWeight(Kind::Standard, a, {});
}

RadialWeight RadialWeight::tabulated(std::vector<double> moments) {
    if (moments.empty()) throw std::invalid_argument("RadialWeight::tabulated: empty moment table");
    double prev = moments.front();
    for (double m : moments) {
        if (!(m > 0.0)) throw std::invalid_argument("RadialWeight::tabulated: moments must be positive");
        if (m > prev * (1.0 + 1e-12))
            throw std::invalid_argument("RadialWeight::tabulated: moments must be non-increasing");
        prev = m;
    }
    return RadialWeight(Kind::Tabulated, 0.0, std::move(moments));
}

double RadialWeight::moment(int k) const {
    if (k < 0) throw std::invalid_argument("RadialWeight::moment: negative index");
    switch (kind_) {
        case Kind::One:
            return 1.0 / (k + 1);
        case Kind::Standard: {
            // \int_0^1 r^k (1-r^2)^a dr = (1/2) B((k+1)/2, a+1)
            const double p = 0.5 * (k + 1);
            return 0.5 * std::exp(std::lgamma(p) + std::lgamma(a_ + 1.0) - std::lgamma(p + a_ + 1.0));
        }
        case Kind::Tabulated:
            if (k >= static_cast<int>(moments_.size()))
                throw std::out_of_range("RadialWeight::moment: tabulated weight has no moment " +
                                        std::to_string(k));
            return moments_[static_cast<std::size_t>(k)];
    }
    throw std::logic_error("RadialWeight::moment: unknown kind");
}

double RadialWeight::density(double r) const {
    switch (kind_) {
        case Kind::One:
            return 1.0;
        case Kind::Standard:
            return std::pow(1.0 - r * r, a_);
        case Kind::Tabulated:
            throw std::invalid_argument("RadialWeight::density: tabulated weight has no density");
    }
    throw std::logic_error("RadialWeight::density: unknown kind");
}

double RadialWeight::l1_norm(int dim) const { return 2.0 * dim * moment(2 * dim - 1); }

std::string RadialWeight::kind_name() const {
    switch (kind_) {
        case Kind::One: return "one";
        case Kind::Standard: return "standard";
        case Kind::Tabulated: return "tabulated";
    }
    return "?";
}

}  // namespace pickspace
