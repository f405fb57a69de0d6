#include <doctest.h>

#include "pickspace/multops.hpp"
#include "pickspace/oracle.hpp"
#include "test_support.hpp"

using namespace pickspace;
using pickspace::testing::random_poly;

TEST_CASE("gauss_legendre integrates polynomials exactly") {
    const auto nodes = gauss_legendre(8);
    double total_w = 0.0;
    for (const auto& [x, w] : nodes) total_w += w;
    CHECK(total_w == doctest::Approx(1.0).epsilon(1e-14));
    // exact through degree 2n - 1 = 15
    for (int k = 1; k <= 15; ++k) {
        double s = 0.0;
        for (const auto& [x, w] : nodes) s += w * std::pow(x, k);
        CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
    }
}

TEST_CASE("quadrature agrees with the closed-form monomial norms") {
    SUBCASE("smooth weights to 1e-6") {
        for (const auto& w : {RadialWeight::one(), RadialWeight::standard(1.0),
                              RadialWeight::standard(2.0)}) {
            for (int d = 1; d <= 3; ++d)
                for (const auto& alpha : multi_indices_up_to(d, 4)) {
                    const double q = quad_monomial_norm(w, alpha);
                    const double c = bergman_monomial_norm_sq(d, w, alpha);
                    CHECK(std::abs(q - c) <= 1e-6 * c);
                }
        }
    }
    SUBCASE("non-smooth standard exponent still inside the 0.5% gate") {
        const auto w = RadialWeight::standard(0.5);
        for (int d = 1; d <= 3; ++d)
            for (const auto& alpha : multi_indices_up_to(d, 4)) {
                const double q = quad_monomial_norm(w, alpha);
                const double c = bergman_monomial_norm_sq(d, w, alpha);
                CHECK(std::abs(q - c) <= 5e-3 * c);
            }
    }
    SUBCASE("trivial cases") {
        CHECK(quad_monomial_norm(RadialWeight::one(), MultiIndex({0, 0})) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(quad_monomial_norm(RadialWeight::one(), MultiIndex({1, 0})) ==
              doctest::Approx(bergman_monomial_norm_sq(2, RadialWeight::one(),
                                                       MultiIndex({1, 0})))
                  .epsilon(1e-10));
    }
    SUBCASE("tabulated weights have no quadrature path") {
        CHECK_THROWS_AS(quad_monomial_norm(RadialWeight::tabulated({1.0, 0.5}), MultiIndex({1})),
                        std::invalid_argument);
    }
}

TEST_CASE("Monte-Carlo inner products") {
    QuadratureConfig cfg;
    cfg.n_samples = 100000;
    cfg.seed = 2024;
    const Polynomial z1 = Polynomial::coordinate(2, 0);
    const Polynomial z2 = Polynomial::coordinate(2, 1);
    SUBCASE("normalized volume") {
        const auto e = mc_inner_product(RadialWeight::one(), Polynomial::one(2),
                                        Polynomial::one(2), cfg);
        CHECK(std::abs(e.estimate - Complex(1.0)) <= 1e-12);  // constant integrand
    }
    SUBCASE("orthogonality by symmetry") {
        const auto e = mc_inner_product(RadialWeight::one(), z1, z2, cfg);
        CHECK(e.z_score(0.0) <= 3.0);
        const auto e2 = mc_inner_product(RadialWeight::one(), z1, poly_mul(z1, z2), cfg);
        CHECK(e2.z_score(0.0) <= 3.0);
    }
    SUBCASE("norms against the closed form, one and standard weights") {
        for (const auto& w : {RadialWeight::one(), RadialWeight::standard(1.0)}) {
            const auto e = mc_inner_product(w, z1, z1, cfg);
            const double ref = bergman_monomial_norm_sq(2, w, MultiIndex({1, 0}));
            CHECK(e.z_score(ref) <= 3.0);
        }
    }
    SUBCASE("configuration validation") {
        QuadratureConfig bad;
        bad.n_samples = 100;
        CHECK_THROWS_AS(mc_inner_product(RadialWeight::one(), z1, z1, bad),
                        std::invalid_argument);
        CHECK_THROWS_AS(mc_inner_product(RadialWeight::tabulated({1.0, 0.5}), z1, z1, cfg),
                        std::invalid_argument);
    }
    SUBCASE("deterministic given the seed") {
        const auto a = mc_inner_product(RadialWeight::one(), z1, z1, cfg);
        const auto b = mc_inner_product(RadialWeight::one(), z1, z1, cfg);
        CHECK(a.estimate == b.estimate);
        CHECK(a.stderr_ == b.stderr_);
    }
}

TEST_CASE("sphere factor validated by Monte-Carlo on the sphere") {
    for (const auto& alpha : {MultiIndex({1, 0}), MultiIndex({1, 1}), MultiIndex({2, 1})}) {
        const auto e = mc_sphere_factor(alpha, 200000, 99);
        CHECK(e.z_score(sphere_factor(alpha)) <= 3.0);
    }
}

TEST_CASE("mult_matrix_raw cross-validates mult_matrix") {
    const SpaceSpec h2 = SpaceSpec::drury_arveson(2);
    SUBCASE("identity embedding") {
        const auto raw = mult_matrix_raw(h2, h2, Polynomial::one(2), 3);
        const auto fast = mult_matrix(h2, h2, Polynomial::one(2), 3);
        CHECK((raw - fast).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("coordinate multiplier") {
        const auto raw = mult_matrix_raw(h2, h2, Polynomial::coordinate(2, 0), 4);
        const auto fast = mult_matrix(h2, h2, Polynomial::coordinate(2, 0), 4);
        CHECK((raw - fast).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("random multipliers across spaces") {
        Rng rng(7);
        const SpaceSpec dst = SpaceSpec::besov(2, 1.0, RadialWeight::standard(1.0));
        for (int t = 0; t < 10; ++t) {
            const Polynomial phi = random_poly(2, 3, rng);
            const auto raw = mult_matrix_raw(h2, dst, phi, 6);
            const auto fast = mult_matrix(h2, dst, phi, 6);
            CHECK((raw - fast).cwiseAbs().maxCoeff() <= 1e-11);
        }
    }
}
