#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "qloop/algebra.hpp"
#include "qloop/fp2.hpp"

using namespace qloop;

TEST_SUITE("algebra") {

TEST_CASE("binom2 agrees with Pascal's triangle up to 4096") {
    // Incremental triangle: row r holds C(r, 0..r) mod 2.
    std::vector<std::uint8_t> row{1};
    for (long long r = 0; r <= 4096; ++r) {
        for (long long c = 0; c <= r; ++c)
            REQUIRE(binom2(r, c) == (row[c] != 0));
        std::vector<std::uint8_t> next(r + 2, 1);
        for (long long c = 1; c <= r; ++c) next[c] = row[c - 1] ^ row[c];
        row = std::move(next);
    }
}

TEST_CASE("binom2 edge cases") {
    CHECK(binom2(0, 0));
    CHECK_FALSE(binom2(-1, 0));
    CHECK_FALSE(binom2(3, -1));
    CHECK_FALSE(binom2(2, 3));
    CHECK(binom2(7, 3));
    CHECK_FALSE(binom2(4, 2));
}

TEST_CASE("is_pow2") {
    CHECK(is_pow2(1));
    CHECK(is_pow2(2));
    CHECK(is_pow2(1ll << 40));
    CHECK_FALSE(is_pow2(0));
    CHECK_FALSE(is_pow2(-4));
    CHECK_FALSE(is_pow2(6));
}

TEST_CASE("dimension of lower-indexed words") {
    CHECK(dim_lower({}, 5) == 5);
    CHECK(dim_lower({3}, 4) == 11);          // 2*4 + 3
    CHECK(dim_lower({1, 2}, 1) == 9);        // 4*1 + 1 + 2*2
    CHECK(dim_lower({1, 2, 3, 4, 5, 6, 7}, 1) == 897);  // 128 + 769
}

TEST_CASE("upper/lower conversions on fixed words") {
    // Q_1 Q_2 x_1 = Q^5 Q^3 x_1: i_2 = 2+1 = 3, inner dim 4, i_1 = 1+4 = 5.
    CHECK(lower_to_upper({1, 2}, 1) == std::vector<int>{5, 3});
    CHECK(upper_to_lower({5, 3}, 1) == std::vector<int>{1, 2});
    CHECK(lower_to_upper({3}, 4) == std::vector<int>{7});
    CHECK(lower_to_upper({}, 9).empty());
}

TEST_CASE("upper/lower round trip on 100000 random words") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> len(1, 7);
    std::uniform_int_distribution<int> entry(1, 8);
    std::uniform_int_distribution<long long> base(1, 12);
    for (int trial = 0; trial < 100000; ++trial) {
        std::vector<int> j(len(rng));
        for (int& v : j) v = entry(rng);
        std::sort(j.begin(), j.end());  // nondecreasing <=> admissible upper form
        const long long n = base(rng);
        const std::vector<int> upper = lower_to_upper(j, n);
        REQUIRE(upper_to_lower(upper, n) == j);
        Word w{upper};
        REQUIRE(word_admissible(w));
        REQUIRE(word_dim(w, n) == dim_lower(j, n));
        // i_1 - (i_2 + ... + i_s) telescopes to the outermost lower index
        // plus the base dimension.
        REQUIRE(word_excess(w) == j.front() + n);
    }
}

TEST_CASE("excess and admissibility") {
    CHECK(word_excess(Word{{7, 5}}) == 2);
    CHECK(word_excess(Word{{13, 7, 4}}) == 2);
    CHECK(word_admissible(Word{{4, 2, 1}}));
    CHECK_FALSE(word_admissible(Word{{5, 2}}));
    CHECK(word_excess(Word{}) > 1000000);  // empty word never vanishes
}

TEST_CASE("legality bounds the lower indices by the loop degree") {
    // Q^5 Q^3 x_1 has lower word (1,2): legal for l >= 3.
    Word w{{5, 3}};
    CHECK(word_legal(w, 1, 3));
    CHECK_FALSE(word_legal(w, 1, 2));
    CHECK(word_legal(w, 1, kInfiniteLoop));
    // Q^3 x_3 has lower index 0: a square, not a legal generator anywhere.
    CHECK_FALSE(word_legal(Word{{3}}, 3, 8));
    CHECK(word_legal(Word{}, 3, 2));
}

TEST_CASE("element arithmetic cancels mod 2") {
    Element a = Element::single({Word{{3}}});
    CHECK((a + a).is_zero());
    Element b = Element::single({Word{{4, 3}}});
    CHECK(a + b == b + a);
    CHECK((a + b) + a == b);
    // make_element folds duplicate terms.
    CHECK(make_element({{Word{{3}}}, {Word{{3}}}, {Word{{4, 3}}}}) == b);
}

TEST_CASE("products sort factors and distribute") {
    Element a = Element::single({Word{{3}}});
    Element b = Element::single({Word{{5, 3}}});
    Element ab = a * b;
    REQUIRE(ab.terms.size() == 1);
    CHECK(ab.terms[0] == Product{Word{{3}}, Word{{5, 3}}});
    CHECK(ab == b * a);
    // (a+b)^2 = a^2 + b^2 over F2.
    CHECK((a + b) * (a + b) == a * a + b * b);
}

TEST_CASE("homogeneity check") {
    Element e = Element::single({Word{{4, 3}}}) + Element::single({Word{{3}}, Word{{3}}});
    long long d = 0;
    CHECK(element_homogeneous(e, 1, &d));  // both terms live in dimension 8
    CHECK(d == 8);
    Element bad = Element::single({Word{{4, 3}}}) + Element::single({Word{{3}}});
    CHECK_FALSE(element_homogeneous(bad, 1));
}

TEST_CASE("printing") {
    CHECK(word_str(Word{{7, 4}}, 2) == "Q^7 Q^4 x_2");
    CHECK(word_str(Word{}, 6) == "x_6");
    CHECK(product_str({Word{{3}}, Word{{3}}}, 1) == "(Q^3 x_1)^2");
    CHECK(product_str({}, 1) == "1");
    Element e = Element::single({Word{{3}}, Word{{3}}}) + Element::single({Word{{6, 3}}});
    CHECK(element_str(e, 1) == "(Q^3 x_1)^2 + Q^6 Q^3 x_1");
    CHECK(element_str(Element::zero(), 1) == "0");
}

TEST_CASE("heights double under operations and add on products") {
    CHECK(word_height(Word{}) == 1);
    CHECK(word_height(Word{{4, 3}}) == 4);
    CHECK(product_height({Word{{3}}, Word{{3}}}) == 4);
}

}  // TEST_SUITE("algebra")
