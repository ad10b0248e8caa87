#include <catch2/catch_amalgamated.hpp>

#include "boxpoly/polynomial.hpp"
#include "boxpoly/rng.hpp"

using namespace boxpoly;

TEST_CASE("unimodality over the full coefficient vector") {
    CHECK_FALSE(is_unimodal(IntPolynomial{0, 0, 4, 6, 8, 11, 10, 11, 8, 6, 4, 0}));
    CHECK(is_unimodal(IntPolynomial{0, 1, 1, 1, 0}));
    CHECK(is_unimodal(IntPolynomial{1}));
    CHECK(is_unimodal(IntPolynomial{}));
    CHECK(is_unimodal(IntPolynomial{0, 0, 2, 2, 2}));
    CHECK_FALSE(is_unimodal(IntPolynomial{1, 0, 1}));
    CHECK(is_unimodal(IntPolynomial{3, 2, 1}));
    CHECK(is_unimodal(IntPolynomial{1, 2, 3}));
}

TEST_CASE("strict unimodality allows only a short peak plateau") {
    CHECK(is_strictly_unimodal(IntPolynomial{0, 0, 1, 2, 3, 2, 1, 0}));
    CHECK_FALSE(is_strictly_unimodal(IntPolynomial{0, 0, 2, 2, 2}));
    CHECK_FALSE(is_strictly_unimodal(IntPolynomial{0, 0, 4, 6, 8, 11, 10, 11, 8, 6, 4, 0}));
    CHECK(is_strictly_unimodal(IntPolynomial{}));          // zero polynomial, by convention
    CHECK(is_strictly_unimodal(IntPolynomial{5}));
    CHECK(is_strictly_unimodal(IntPolynomial{3, 3}));      // plateau of length 2
    CHECK(is_strictly_unimodal(IntPolynomial{1, 2, 2, 1}));
    CHECK_FALSE(is_strictly_unimodal(IntPolynomial{1, 2, 2, 3}));  // plateau below the peak
    CHECK_FALSE(is_strictly_unimodal(IntPolynomial{2, 1, 1}));
    CHECK_FALSE(is_strictly_unimodal(IntPolynomial{1, 0, 2}));     // support gap
    CHECK(is_strictly_unimodal(IntPolynomial{0, 7, 0}));
}

TEST_CASE("palindromicity on explicit windows") {
    const IntPolynomial b{0, 0, 1, 1, 1};  // z^2 + z^3 + z^4
    CHECK(is_palindromic(b, 1, 5));
    CHECK(is_palindromic(IntPolynomial{1}, 0, 0));
    CHECK_FALSE(is_palindromic(IntPolynomial{1, 2}, 0, 1));
    CHECK(is_palindromic(IntPolynomial{}, 0, 9));
    CHECK_THROWS_AS(is_palindromic(b, 3, 1), validation_error);
}

TEST_CASE("polynomial arithmetic and exact division") {
    const IntPolynomial p{1, 2, 3};
    const IntPolynomial q{0, 1};
    CHECK((p * q) == IntPolynomial{0, 1, 2, 3});
    CHECK((p + q) == IntPolynomial{1, 3, 3});
    CHECK(p.evaluate(2) == 17);
    CHECK(p.value_at_one() == 6);
    CHECK(IntPolynomial::all_ones(3) == IntPolynomial{1, 1, 1});
    CHECK(p.shifted_up(2).shifted_down(2) == p);
    CHECK_THROWS_AS(p.shifted_down(1), internal_error);

    // (1 - z^4)/(1 - z) = 1 + z + z^2 + z^3
    const IntPolynomial diff{1, 0, 0, 0, -1};
    CHECK(diff.div_exact_one_minus_z() == IntPolynomial{1, 1, 1, 1});
    CHECK_THROWS_AS((IntPolynomial{1, 1}).div_exact_one_minus_z(), internal_error);

    CHECK(p.reversed(2) == IntPolynomial{3, 2, 1});
    CHECK(p.reversed(4) == IntPolynomial{0, 0, 3, 2, 1});
    CHECK(p.padded(5).size() == 5);
    CHECK(IntPolynomial(std::vector<Int>{1, 0, 0}).length() == 1);  // trailing zeros trimmed
}

TEST_CASE("coefficientwise order") {
    CHECK(coefficientwise_leq(IntPolynomial{0, 1}, IntPolynomial{1, 1, 2}));
    CHECK_FALSE(coefficientwise_leq(IntPolynomial{0, 2}, IntPolynomial{1, 1}));
    CHECK(coefficientwise_leq(IntPolynomial{}, IntPolynomial{}));
}

TEST_CASE("randomized agreement between strict and weak unimodality") {
    SplitMix64 rng(0x5eed);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Int> v(rng.next_below(9) + 1);
        for (Int& x : v) x = Int(rng.next_below(4));
        const IntPolynomial p{std::vector<Int>(v)};
        if (is_strictly_unimodal(v)) CHECK(is_unimodal(v));
        // reversal preserves both predicates
        std::vector<Int> rev(v.rbegin(), v.rend());
        CHECK(is_unimodal(v) == is_unimodal(rev));
        CHECK(is_strictly_unimodal(v) == is_strictly_unimodal(rev));
    }
}
