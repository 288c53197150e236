#include "catbert/sequences.hpp"

#include "catbert/grid.hpp"
#include "catbert/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using catbert::GCParams;
using catbert::gen_catalan;
using catbert::Int;
using catbert::Rational;

TEST_CASE("parameter validation names the violated constraint") {
    CHECK_THROWS_WITH(gen_catalan({1, 1, 0}, 3), Catch::Matchers::ContainsSubstring("p must"));
    CHECK_THROWS_WITH(gen_catalan({2, 0, 0}, 3), Catch::Matchers::ContainsSubstring("nonzero"));
    CHECK_THROWS_WITH(gen_catalan({2, 4, 0}, 3), Catch::Matchers::ContainsSubstring("coprime"));
    CHECK_THROWS_WITH(gen_catalan({2, 1, -1}, 3), Catch::Matchers::ContainsSubstring("non-negative"));
    CHECK_THROWS_AS(gen_catalan({2, -3, 0}, 0), std::invalid_argument);
}

TEST_CASE("g^(-3/2) starts 1, -2, -2, -4, -10") {
    const auto s = gen_catalan({2, -3, 0}, 5);
    CHECK(s.terms == std::vector<Int>{1, -2, -2, -4, -10});
}

TEST_CASE("g^(-1/2) is the central binomial coefficients") {
    const auto s = gen_catalan({2, -1, 0}, 51);
    for (unsigned long n = 0; n <= 50; ++n) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
        REQUIRE(s.terms[n] == b);
    }
}

TEST_CASE("count=1 gives the single term g_0 = 1") {
    CHECK(gen_catalan({5, 7, 2}, 1).terms == std::vector<Int>{1});
}

TEST_CASE("terms agree with direct binomial evaluation") {
    for (const GCParams& g : {GCParams{2, -3, 0}, {3, 2, 0}, {5, -7, 0}}) {
        const auto s = gen_catalan(g, 12);
        Rational p2n(1);
        for (long n = 0; n < 12; ++n) {
            const Rational direct =
                p2n * catbert::binom_rational(Rational(n) + g.ratio(),
                                              static_cast<unsigned long>(n));
            REQUIRE(Rational(s.terms[static_cast<std::size_t>(n)]) == direct);
            // alternate form (-p^2)^n binom(-1 - q/p, n)
            Rational alt = catbert::binom_rational(Rational(-1) - g.ratio(),
                                                   static_cast<unsigned long>(n));
            for (long i = 0; i < n; ++i) alt *= Rational(-g.p * g.p);
            REQUIRE(Rational(s.terms[static_cast<std::size_t>(n)]) == alt);
            p2n *= Rational(g.p * g.p);
        }
    }
}

TEST_CASE("ratio identity g_{n+1}/g_n = p(q + (n+1)p)/(n+1)") {
    for (const GCParams& g : {GCParams{2, -3, 0}, {3, 2, 0}, {5, -2, 0}}) {
        const auto s = gen_catalan(g, 20);
        for (long n = 0; n + 1 < 20; ++n) {
            const Rational lhs(s.terms[static_cast<std::size_t>(n) + 1],
                               s.terms[static_cast<std::size_t>(n)]);
            const Rational rhs(g.p * (g.q + (n + 1) * g.p), n + 1);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("all grid sequences are integral and nonzero") {
    for (const GCParams& g : catbert::parameter_grid()) {
        const auto s = gen_catalan(g, 60);
        REQUIRE(s.terms[0] == 1);
        for (const Int& t : s.terms) REQUIRE(t != 0);
    }
}

TEST_CASE("catalan numbers from the g^(-3/2) relation") {
    const auto cats = catbert::catalan_numbers(8);
    CHECK(std::vector<Int>(cats.begin(), cats.begin() + 4) == std::vector<Int>{1, 1, 2, 5});
    CHECK(cats.back() == 429);

    // independent oracle: the convolution recurrence Cat_{n+1} = sum Cat_i Cat_{n-i}
    const auto many = catbert::catalan_numbers(14);
    for (std::size_t n = 0; n + 1 < many.size(); ++n) {
        Int conv = 0;
        for (std::size_t i = 0; i <= n; ++i) conv += many[i] * many[n - i];
        REQUIRE(many[n + 1] == conv);
    }
}

TEST_CASE("shift recurrences hold and exclude n=0") {
    for (const GCParams& g : {GCParams{2, -3, 0}, {3, 2, 0}}) {
        const auto report = catbert::check_shift_recurrences(g, 10);
        CHECK(report.ok());
        for (const auto& v : report.violations) CHECK(v.indices[1] >= 1);
    }
}
