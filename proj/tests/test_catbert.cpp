#include "catbert/catbert.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using catbert::Int;
using catbert::Rational;

TEST_CASE("catbert matrix n=2") {
    const auto c = catbert::catbert_matrix(2);
    CHECK(c.matrix.at(0, 0) == Rational(1));
    CHECK(c.matrix.at(0, 1) == Rational(1));
    CHECK(c.matrix.at(1, 0) == Rational(1));
    CHECK(c.matrix.at(1, 1) == Rational(1, 2));
}

TEST_CASE("catbert inverse n=1 and n=2") {
    CHECK(catbert::catbert_inverse(1).at(0, 0) == Rational(1));
    const auto inv = catbert::catbert_inverse(2);
    CHECK(inv.at(0, 0) == Rational(-1));
    CHECK(inv.at(0, 1) == Rational(2));
    CHECK(inv.at(1, 0) == Rational(2));
    CHECK(inv.at(1, 1) == Rational(-2));
}

TEST_CASE("catbert inverse is integral up to n=15") {
    for (long n : {5L, 10L, 15L})
        REQUIRE(catbert::is_integer_matrix(catbert::catbert_inverse(n)).integral);
}

TEST_CASE("catbert determinant formula") {
    CHECK(catbert::catbert_det_formula(0) == Rational(1));
    CHECK(catbert::catbert_det_formula(1) == Rational(1));
    CHECK(catbert::catbert_det_formula(2) == Rational(-2));
    CHECK(catbert::catbert_det_formula(3) == Rational(-1400));
    for (long n = 1; n <= 10; ++n) {
        INFO("n=" << n);
        const Rational f = catbert::catbert_det_formula(n);
        REQUIRE(f.is_integer());
        REQUIRE(f == catbert::det_oracle(catbert::catbert_inverse(n)));
        // det(C(n)^-1) = (-1/2)^n det(G^(1,-3/2)(n)^-1)
        Rational scale(1);
        for (long i = 0; i < n; ++i) scale *= Rational(-1, 2);
        REQUIRE(f == scale * catbert::det_inverse_formula(catbert::catbert_params(), n));
    }
}

TEST_CASE("b-file parsing") {
    const auto bf = catbert::parse_bfile("# comment\n1 1\n2 -2\n", "A000000");
    REQUIRE(bf.entries.size() == 2);
    CHECK(bf.entries[0] == std::pair<long, Int>{1, Int(1)});
    CHECK(bf.entries[1] == std::pair<long, Int>{2, Int(-2)});

    CHECK(catbert::parse_bfile("").entries.empty());
    CHECK(catbert::parse_bfile("\n\n# only comments\n").entries.empty());

    try {
        catbert::parse_bfile("1 1\n2 2\n3 x\n");
        FAIL("expected MalformedLine");
    } catch (const catbert::MalformedLine& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(catbert::parse_bfile("2 1\n1 2\n"), catbert::MalformedLine);
    CHECK_THROWS_AS(catbert::parse_bfile("1 2 3\n"), catbert::MalformedLine);
}

TEST_CASE("oeis comparison with offset detection") {
    const auto bf = catbert::parse_bfile("5 100\n6 1\n7 -2\n8 -1400\n");
    const std::vector<Int> computed{1, -2, -1400};
    const auto cmp = catbert::oeis_compare(computed, bf);
    CHECK(cmp.offset == 1);
    CHECK(cmp.match_len == 3);
    CHECK(cmp.full_match);

    const std::vector<Int> wrong{1, -2, -999};
    const auto bad = catbert::oeis_compare(wrong, bf);
    CHECK(bad.match_len == 2);
    CHECK(!bad.full_match);
    REQUIRE(bad.first_mismatch.has_value());
    CHECK(bad.first_mismatch->first == 2);
}

TEST_CASE("shipped snapshot matches the computed determinant sequence") {
    std::ifstream in(CATBERT_BFILE_PATH);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto bf = catbert::parse_bfile(buf.str(), "A296056");
    std::vector<Int> dets;
    for (long n = 0; n <= 12; ++n) dets.push_back(catbert::catbert_det_formula(n).to_integer());
    const auto cmp = catbert::oeis_compare(dets, bf);
    CHECK(cmp.offset == 0);
    CHECK(cmp.match_len == dets.size());
}
