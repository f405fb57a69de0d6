#include <doctest.h>

#include "pickspace/weakprod.hpp"
#include "test_support.hpp"

using namespace pickspace;
using pickspace::testing::max_coeff_abs;
using pickspace::testing::random_poly;

namespace {
const SpaceSpec h2 = SpaceSpec::drury_arveson(2);
Polynomial z1() { return Polynomial::coordinate(2, 0); }
Polynomial z2() { return Polynomial::coordinate(2, 1); }
}  // namespace

TEST_CASE("wp_norm_upper") {
    Rng rng(1);
    const Polynomial h = random_poly(2, 3, rng);
    const Factorization single{{{Polynomial::one(2), h}}};
    CHECK(wp_norm_upper(h2, single) == doctest::Approx(space_norm(h2, h)).epsilon(1e-13));
    const Factorization square{{{h, h}}};
    CHECK(wp_norm_upper(h2, square) ==
          doctest::Approx(std::pow(space_norm(h2, h), 2)).epsilon(1e-13));
    SUBCASE("two certificates for z1 z2 exhibit the infimum structure") {
        const Factorization split{{{z1(), z2()}}};
        const Factorization direct{{{Polynomial::one(2), poly_mul(z1(), z2())}}};
        const double b1 = wp_norm_upper(h2, split);    // ||z1|| ||z2|| = 1
        const double b2 = wp_norm_upper(h2, direct);   // ||z1 z2|| = sqrt(1/2)
        CHECK(b1 == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(b2 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
        CHECK(std::min(b1, b2) == doctest::Approx(b2));
    }
}

TEST_CASE("rescale_to_equal_norm") {
    Rng rng(7);
    SUBCASE("already balanced input is unchanged") {
        const auto [f, g] = rescale_to_equal_norm(z1(), z2(), h2);
        CHECK(max_coeff_abs(f - z1()) < 1e-14);
        CHECK(max_coeff_abs(g - z2()) < 1e-14);
    }
    SUBCASE("constants") {
        const auto [f, g] =
            rescale_to_equal_norm(Polynomial::constant(2, 2.0), Polynomial::one(2), h2);
        CHECK(std::abs(f.coeff(MultiIndex::zero(2)) - std::sqrt(2.0)) < 1e-13);
        CHECK(std::abs(g.coeff(MultiIndex::zero(2)) - std::sqrt(2.0)) < 1e-13);
    }
    SUBCASE("product and norm product preserved") {
        for (int t = 0; t < 30; ++t) {
            const Polynomial f = random_poly(2, 3, rng);
            const Polynomial g = random_poly(2, 3, rng);
            const auto [fb, gb] = rescale_to_equal_norm(f, g, h2);
            CHECK(max_coeff_abs(poly_mul(fb, gb) - poly_mul(f, g)) <=
                  1e-12 * std::max(1.0, max_coeff_abs(poly_mul(f, g))));
            CHECK(space_norm(h2, fb) == doctest::Approx(space_norm(h2, gb)).epsilon(1e-12));
            CHECK(space_norm(h2, fb) * space_norm(h2, gb) ==
                  doctest::Approx(space_norm(h2, f) * space_norm(h2, g)).epsilon(1e-12));
        }
    }
    SUBCASE("zero input rejected") {
        CHECK_THROWS_AS(rescale_to_equal_norm(Polynomial::zero(2), z1(), h2),
                        std::invalid_argument);
    }
}

TEST_CASE("square_split") {
    SUBCASE("f = g") {
        const auto s = square_split(z1(), z1(), h2);
        CHECK(s.a == z1());
        CHECK(s.b.is_zero());
    }
    SUBCASE("f = -g") {
        const auto s = square_split(z1(), -z1(), h2);
        CHECK(s.a.is_zero());
        CHECK(s.b == z1());
    }
    SUBCASE("coordinates split with exact bookkeeping") {
        const auto s = square_split(z1(), z2(), h2);
        CHECK(max_coeff_abs(s.a - (z1() + z2()) * Complex(0.5)) < 1e-15);
        CHECK(max_coeff_abs(s.b - (z1() - z2()) * Complex(0.5)) < 1e-15);
        const double book = std::pow(space_norm(h2, s.a), 2) + std::pow(space_norm(h2, s.b), 2);
        CHECK(book == doctest::Approx(space_norm(h2, z1()) * space_norm(h2, z2())).epsilon(1e-12));
    }
    SUBCASE("unbalanced pair rejected") {
        CHECK_THROWS_AS(square_split(Polynomial::constant(2, 2.0), Polynomial::one(2), h2),
                        std::invalid_argument);
    }
    SUBCASE("identity and bookkeeping over random balanced pairs") {
        Rng rng(43);
        for (int t = 0; t < 100; ++t) {
            const Polynomial f = random_poly(2, 4, rng);
            const Polynomial g = random_poly(2, 4, rng);
            const auto [fb, gb] = rescale_to_equal_norm(f, g, h2);
            const auto s = square_split(fb, gb, h2);
            const Polynomial resid =
                poly_mul(s.a, s.a) - poly_mul(s.b, s.b) - poly_mul(fb, gb);
            CHECK(space_norm(h2, resid) <= 1e-12);
            const double book = std::abs(space_norm(h2, fb) * space_norm(h2, gb) -
                                         std::pow(space_norm(h2, s.a), 2) -
                                         std::pow(space_norm(h2, s.b), 2));
            CHECK(book <= 1e-10);
        }
    }
    SUBCASE("wp bound is preserved by splitting balanced pairs") {
        Rng rng(47);
        const Polynomial f0 = random_poly(2, 3, rng);
        const Polynomial g0 = random_poly(2, 3, rng);
        const auto [f, g] = rescale_to_equal_norm(f0, g0, h2);
        const Factorization before{{{f, g}}};
        const auto s = square_split(f, g, h2);
        const Factorization after{{{s.a, s.a}, {s.b, s.b}}};
        CHECK(wp_norm_upper(h2, after) == doctest::Approx(wp_norm_upper(h2, before)).epsilon(1e-12));
    }
}

TEST_CASE("smirnov_verify") {
    SUBCASE("trivial witness") {
        const SmirnovWitness w(Polynomial::one(2), Polynomial::one(2), Polynomial::zero(2));
        const auto rep = smirnov_verify(h2, w, 8);
        CHECK(rep.residual <= 1e-14);
        CHECK(rep.psi_mult_lower <= 1e-14);
        for (const auto& fb : rep.fraction_bounds) {
            CHECK(fb.contraction_bound <= 1.0 + 1e-9);
            CHECK(fb.cyclic_bound <= 1.0 + 1e-9);
        }
    }
    SUBCASE("exact polynomial witness h = z2, psi = z1/2") {
        const Polynomial psi = z1() * Complex(0.5);
        const Polynomial one = Polynomial::one(2);
        const Polynomial phi = poly_mul(poly_mul(one - psi, one - psi), z2());
        const SmirnovWitness w(z2(), phi, psi);
        const auto rep = smirnov_verify(h2, w, 15);
        CHECK(rep.residual <= 1e-12);
        CHECK(rep.psi_mult_lower == doctest::Approx(0.5).epsilon(1e-12));
        REQUIRE(rep.fraction_bounds.size() == 3);
        for (const auto& fb : rep.fraction_bounds) {
            CHECK(fb.contraction_bound <= 1.0 + 1e-9);
            CHECK(fb.cyclic_bound <= 2.0 + 1e-9);
        }
    }
    SUBCASE("psi with a constant term is rejected") {
        const SmirnovWitness w(z2(), z2(), Polynomial::constant(2, 0.1));
        CHECK_THROWS_AS(smirnov_verify(h2, w, 8), std::invalid_argument);
    }
    SUBCASE("a wrong witness shows a nonzero residual") {
        const SmirnovWitness w(z2(), z2(), z1() * Complex(0.5));
        const auto rep = smirnov_verify(h2, w, 10);
        CHECK(rep.residual > 1e-3);
    }
}

TEST_CASE("hankel_build") {
    SUBCASE("zero symbol") {
        const auto h = hankel_build(h2, Polynomial::zero(2), 3);
        CHECK(h.mat().norm() == 0.0);
    }
    SUBCASE("constant symbol pairs only the constants") {
        const auto h = hankel_build(h2, Polynomial::one(2), 2);
        CHECK(std::abs(h.mat()(0, 0) - Complex(1.0)) < 1e-14);
        CHECK(h.mat().cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("b = z1^2 entries sit on the antidiagonal slot") {
        const Polynomial b = Polynomial::monomial(MultiIndex({2, 0}));
        const auto h = hankel_build(h2, b, 2);
        const int i = h.basis().position(MultiIndex({1, 0}));
        // <z1 z1, z1^2> / ||z1||^2 = ||z1^2||^2 = 1 in exact H^2_2 norms
        CHECK(std::abs(h.mat()(i, i) - Complex(1.0)) < 1e-13);
    }
    SUBCASE("entries vanish beyond the symbol degree, matrix symmetric") {
        Rng rng(3);
        const Polynomial b = random_poly(2, 3, rng);
        const auto h = hankel_build(h2, b, 4);
        for (int i = 0; i < h.basis().size(); ++i)
            for (int j = 0; j < h.basis().size(); ++j) {
                if (h.basis().index(i).degree() + h.basis().index(j).degree() > b.degree())
                    CHECK(h.mat()(i, j) == Complex(0.0));
                CHECK(h.mat()(i, j) == h.mat()(j, i));
            }
    }
}

TEST_CASE("hankel intertwining") {
    SUBCASE("constant multiplier has zero defect") {
        Rng rng(5);
        const auto h = hankel_build(h2, random_poly(2, 4, rng), 4);
        CHECK(hankel_intertwine_check(h, Polynomial::constant(2, 1.7), 2) <= 1e-14);
    }
    SUBCASE("exact identity for phi = z1, b = z1^2 z2") {
        const Polynomial b = Polynomial::monomial(MultiIndex({2, 1}));
        const auto h = hankel_build(h2, b, 4);
        CHECK(hankel_intertwine_check(h, z1(), 2) <= 1e-13);
    }
    SUBCASE("degree budget is an error, not a defect") {
        const auto h = hankel_build(h2, Polynomial::monomial(MultiIndex({2, 1})), 3);
        CHECK_THROWS_AS(hankel_intertwine_check(h, z1(), 3), std::invalid_argument);
    }
    SUBCASE("random symbols and multipliers intertwine exactly") {
        Rng rng(9);
        for (int t = 0; t < 20; ++t) {
            const Polynomial phi = random_poly(2, 2, rng);
            const Polynomial b = random_poly(2, 4, rng);
            const auto h = hankel_build(h2, b, 4);
            CHECK(hankel_intertwine_check(h, phi, 2) <= 1e-12);
        }
    }
}

TEST_CASE("hankel norm lower bounds") {
    CHECK(hankel_norm_lower(hankel_build(h2, Polynomial::zero(2), 3)) == 0.0);
    CHECK(hankel_norm_lower(hankel_build(h2, Polynomial::one(2), 3)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    SUBCASE("b = z1: frozen value 1, stable from D = 3 to D = 6") {
        const double v3 = hankel_norm_lower(hankel_build(h2, z1(), 3));
        const double v6 = hankel_norm_lower(hankel_build(h2, z1(), 6));
        CHECK(v3 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(v6 - v3) <= 1e-3 * v3);
    }
    SUBCASE("non-decreasing in D") {
        Rng rng(13);
        const Polynomial b = random_poly(2, 4, rng);
        double prev = 0.0;
        for (int D = 0; D <= 5; ++D) {
            const double v = hankel_norm_lower(hankel_build(h2, b, D));
            CHECK(v >= prev - 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("duality_check") {
    SUBCASE("zero symbol") {
        const Factorization f{{{z1(), z2()}}};
        CHECK(duality_check(h2, f, Polynomial::zero(2), 6) == doctest::Approx(0.0));
    }
    SUBCASE("extremal constant pair") {
        const Factorization f{{{Polynomial::one(2), Polynomial::one(2)}}};
        CHECK(duality_check(h2, f, Polynomial::one(2), 4) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("random single pairs satisfy the Cauchy-Schwarz slack") {
        Rng rng(41);
        for (int t = 0; t < 30; ++t) {
            const Factorization f{{{random_poly(2, 3, rng), random_poly(2, 3, rng)}}};
            CHECK(duality_check(h2, f, random_poly(2, 5, rng), 8) >= -1e-10);
        }
    }
    SUBCASE("the pairing bound |<fg,b>| <= ||f|| ||g|| ||H_b||_lower") {
        Rng rng(45);
        for (int t = 0; t < 20; ++t) {
            const Polynomial f = random_poly(2, 3, rng);
            const Polynomial g = random_poly(2, 3, rng);
            const Polynomial b = random_poly(2, 6, rng);
            const auto h = hankel_build(h2, b, 6);
            const Complex pairing = space_inner(h2, poly_mul(f, g), b);
            CHECK(std::abs(pairing) <= space_norm(h2, f) * space_norm(h2, g) *
                                           hankel_norm_lower(h) + 1e-10);
        }
    }
    SUBCASE("degree budget enforced") {
        const Factorization f{{{poly_pow(z1(), 4), z2()}}};
        CHECK_THROWS_AS(duality_check(h2, f, Polynomial::one(2), 6), std::invalid_argument);
    }
    SUBCASE("the bilinear form matches the direct pairing") {
        Rng rng(51);
        const Polynomial f = random_poly(2, 2, rng);
        const Polynomial g = random_poly(2, 2, rng);
        const Polynomial b = random_poly(2, 4, rng);
        const auto h = hankel_build(h2, b, 4);
        const Complex direct = space_inner(h2, poly_mul(f, g), b);
        CHECK(std::abs(h.apply(f, g) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
}
