#ifndef PICKSPACE_WEIGHTS_HPP
#define PICKSPACE_WEIGHTS_HPP

#include <string>
#include <vector>

namespace pickspace {

/// Radial weight on the unit ball, described through its radial moments
/// moment(k) = \int_0^1 r^k w(r) dr. Three kinds:
///   one:        w = 1
///   standard:   w(r) = (1 - r^2)^a with a > -1
///   tabulated:  moments supplied directly (no density available)
class RadialWeight {
public:
    enum class Kind { One, Standard, Tabulated };

    static RadialWeight one();
    static RadialWeight standard(double a);
    static RadialWeight tabulated(std::vector<double> moments);

    Kind kind() const { return kind_; }
    double a() const { return a_; }

    /// \int_0^1 r^k w(r) dr, k >= 0. Positive and non-increasing in k.
    double moment(int k) const;

    bool has_density() const { return kind_ != Kind::Tabulated; }
    double density(double r) const;

    /// \int_{B_d} w dV with normalized volume, = 2d * moment(2d - 1).
    double l1_norm(int dim) const;

    std::string kind_name() const;

private:
    RadialWeight(Kind k, double a, std::vector<double> moments)
        : kind_(k), a_(a), moments_(std::move(moments)) {}

    Kind kind_;
    double a_ = 0.0;
    std::vector<double> moments_;
};

}  // namespace pickspace

#endif
