#include <doctest.h>

#include "pickspace/spaces.hpp"
#include "test_support.hpp"

using namespace pickspace;
using pickspace::testing::random_poly;

namespace {

// independent recursion oracle: ||z^{a+e_i}||^2 = ||z^a||^2 (a_i+1)/(n+1),
// seeded at ||1||^2 = 1, all in exact rationals
Rational da_norm_recursive(const MultiIndex& alpha) {
    std::vector<int> cur(static_cast<std::size_t>(alpha.dim()), 0);
    Rational r(1);
    int n = 0;
    for (int i = 0; i < alpha.dim(); ++i) {
        for (int k = 0; k < alpha[i]; ++k) {
            r = r * Rational(cur[static_cast<std::size_t>(i)] + 1, n + 1);
            ++cur[static_cast<std::size_t>(i)];
            ++n;
        }
    }
    return r;
}

}  // namespace

TEST_CASE("beta_moment") {
    CHECK(beta_moment(0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_moment(1, 1.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(beta_moment(3, 0.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK_THROWS_AS(beta_moment(1, -1.0), std::invalid_argument);
}

TEST_CASE("Drury-Arveson monomial norms, exact") {
    CHECK(monomial_norm_da(MultiIndex({0, 0})) == Rational(1));
    CHECK(monomial_norm_da(MultiIndex({1, 1})) == Rational(1, 2));
    CHECK(monomial_norm_da(MultiIndex({2, 1})) == Rational(1, 3));

    for (int d = 1; d <= 3; ++d)
        for (const auto& alpha : multi_indices_up_to(d, 8))
            CHECK(monomial_norm_da(alpha) == da_norm_recursive(alpha));
}

TEST_CASE("radial weight moments") {
    const auto one = RadialWeight::one();
    CHECK(one.moment(3) == doctest::Approx(0.25));
    const auto std1 = RadialWeight::standard(1.0);
    // \int_0^1 r^3 (1-r^2) dr = 1/4 - 1/6 = 1/12
    CHECK(std1.moment(3) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    SUBCASE("positive and non-increasing") {
        for (const auto& w : {one, std1, RadialWeight::standard(-0.5)}) {
            double prev = w.moment(0);
            for (int k = 1; k <= 30; ++k) {
                const double m = w.moment(k);
                CHECK(m > 0.0);
                CHECK(m <= prev * (1 + 1e-12));
                prev = m;
            }
        }
    }
    SUBCASE("tabulated validation") {
        CHECK_THROWS_AS(RadialWeight::tabulated({1.0, 2.0}), std::invalid_argument);
        CHECK_THROWS_AS(RadialWeight::tabulated({1.0, -0.5}), std::invalid_argument);
        const auto tab = RadialWeight::tabulated({1.0, 0.5, 0.25});
        CHECK(tab.moment(2) == 0.25);
        CHECK_THROWS_AS(tab.moment(3), std::out_of_range);
        CHECK_THROWS_AS(tab.density(0.5), std::invalid_argument);
    }
}

TEST_CASE("monomial norms in weighted Besov spaces") {
    SUBCASE("Bergman space normalization") {
        for (int d = 1; d <= 3; ++d)
            CHECK(monomial_norm_sq(SpaceSpec::bergman(d), MultiIndex::zero(d)) ==
                  doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("standard weight reduces to shifted Beta moments") {
        // m(a) = sphere_factor(a) * d * beta_moment(n + d - 1, a)
        const double a = 1.5;
        for (int d = 1; d <= 3; ++d)
            for (const auto& alpha : multi_indices_up_to(d, 4)) {
                const double got =
                    bergman_monomial_norm_sq(d, RadialWeight::standard(a), alpha);
                const double expect =
                    sphere_factor(alpha) * d * beta_moment(alpha.degree() + d - 1, a);
                CHECK(got == doctest::Approx(expect).epsilon(1e-12));
            }
    }
    SUBCASE("Besov realization of H^2_d: bounded ratio band, never equality") {
        const SpaceSpec b = SpaceSpec::besov_da(2);
        double lo = 1e300, hi = 0.0;
        for (int n = 0; n <= 40; ++n)
            for (const auto& alpha : multi_indices_of_degree(2, n)) {
                const double r = monomial_norm_sq(b, alpha) / monomial_norm_da_d(alpha);
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
        // frozen band: [1/3, 2 n^2/((n+1)(n+2)) at n = 40]
        CHECK(lo == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(hi == doctest::Approx(3200.0 / 1722.0).epsilon(1e-12));
        CHECK(hi / lo <= 10.0);
    }
    SUBCASE("exact kind differs from the Besov realization") {
        const MultiIndex a({1, 1});
        CHECK(monomial_norm_sq(SpaceSpec::drury_arveson(2), a) == doctest::Approx(0.5));
        CHECK(monomial_norm_sq(SpaceSpec::besov_da(2), a) == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("L^2_a part non-increasing along a fixed pattern") {
        for (const auto& w : {RadialWeight::one(), RadialWeight::standard(1.0)}) {
            for (std::vector<int> base : {std::vector<int>{1, 0}, {1, 1}, {2, 1}}) {
                double prev = 1e300;
                for (int k = 1; k <= 10; ++k) {
                    std::vector<int> e(base);
                    for (auto& x : e) x *= k;
                    const double m = bergman_monomial_norm_sq(2, w, MultiIndex(e));
                    CHECK(m > 0.0);
                    CHECK(m <= prev);
                    prev = m;
                }
            }
        }
    }
    SUBCASE("d = 1 Hardy comparison") {
        const SpaceSpec h = SpaceSpec::hardy(1);
        double lo = 1e300, hi = 0.0;
        for (int n = 0; n <= 40; ++n) {
            const double r = monomial_norm_sq(h, MultiIndex({n}));  // Hardy value is 1
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        CHECK(lo >= 0.5 - 1e-12);
        CHECK(hi <= 1.0 + 1e-12);
    }
    SUBCASE("integer-order mode at alpha = 0 carries the weight mass") {
        const auto w = RadialWeight::standard(2.0);
        const SpaceSpec bN = SpaceSpec::besov_integer(2, 3, w);
        CHECK(monomial_norm_sq(bN, MultiIndex::zero(2)) ==
              doctest::Approx(w.l1_norm(2)).epsilon(1e-12));
        const MultiIndex a({2, 1});
        CHECK(monomial_norm_sq(bN, a) ==
              doctest::Approx(std::pow(3.0, 6.0) * bergman_monomial_norm_sq(2, w, a))
                  .epsilon(1e-12));
    }
}

TEST_CASE("space_norm") {
    const SpaceSpec h2 = SpaceSpec::drury_arveson(2);
    CHECK(space_norm(h2, Polynomial::zero(2)) == 0.0);
    const Polynomial s = Polynomial::coordinate(2, 0) + Polynomial::coordinate(2, 1);
    CHECK(space_norm(h2, s) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(space_norm(h2, Polynomial::monomial(MultiIndex({1, 1}))) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK_THROWS_AS(space_norm(h2, Polynomial::one(3)), std::invalid_argument);

    SUBCASE("parallelogram law") {
        Rng rng(11);
        const SpaceSpec spaces[] = {h2, SpaceSpec::dirichlet(),
                                    SpaceSpec::besov(2, 1.0, RadialWeight::standard(1.0))};
        for (const auto& sp : spaces) {
            for (int t = 0; t < 30; ++t) {
                const Polynomial f = random_poly(sp.dim, 4, rng);
                const Polynomial g = random_poly(sp.dim, 4, rng);
                const double lhs = std::pow(space_norm(sp, f + g), 2) +
                                   std::pow(space_norm(sp, f - g), 2);
                const double rhs = 2 * std::pow(space_norm(sp, f), 2) +
                                   2 * std::pow(space_norm(sp, g), 2);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("besov_shift_ratio") {
    SUBCASE("a = 0 gives the identical space") {
        const auto [lo, hi] = besov_shift_ratio(1.0, 0.0, 2, 20);
        CHECK(lo == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("frozen bands for a = 1") {
        // ratio = n Gamma(n+d+1)/Gamma(n+d+2) = n/(n+d+1), increasing in n
        const auto [lo2, hi2] = besov_shift_ratio(1.0, 1.0, 2, 40);
        CHECK(lo2 == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(hi2 == doctest::Approx(40.0 / 43.0).epsilon(1e-10));
        CHECK(hi2 / lo2 <= 10.0);
        const auto [lo1, hi1] = besov_shift_ratio(0.5, 1.0, 1, 40);
        CHECK(lo1 == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        CHECK(hi1 == doctest::Approx(40.0 / 42.0).epsilon(1e-10));
        CHECK(hi1 / lo1 <= 10.0);
    }
    SUBCASE("ratio does not depend on s") {
        const auto [alo, ahi] = besov_shift_ratio(1.0, 1.0, 2, 15);
        const auto [blo, bhi] = besov_shift_ratio(0.5, 1.0, 2, 15);
        CHECK(alo == doctest::Approx(blo).epsilon(1e-12));
        CHECK(ahi == doctest::Approx(bhi).epsilon(1e-12));
    }
}

TEST_CASE("MonomialNormTable") {
    const SpaceSpec sp = SpaceSpec::besov(2, 1.0, RadialWeight::standard(0.5));
    const MonomialNormTable table(sp, 6);
    for (const auto& alpha : multi_indices_up_to(2, 6))
        CHECK(table.norm_sq(alpha) == monomial_norm_sq(sp, alpha));
    CHECK_THROWS_AS(table.norm_sq(MultiIndex({7, 0})), std::out_of_range);
}
