#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "qloop/fp2.hpp"
#include "qloop/steenrod.hpp"

#include "oracles.hpp"

using namespace qloop;

namespace {

// Independent count of admissible words of total degree d with first entry
// <= cap (cap < 0 means unbounded), via the recursion over the leading entry.
long long admissible_count(long long d, long long cap,
                           std::map<std::pair<long long, long long>, long long>& memo) {
    if (d == 0) return 1;
    if (cap < 0 || cap > d) cap = d;
    auto it = memo.find({d, cap});
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (long long a = 1; a <= cap; ++a)
        total += admissible_count(d - a, a / 2, memo);
    memo[{d, cap}] = total;
    return total;
}

}  // namespace

TEST_SUITE("steenrod") {

TEST_CASE("fixed Adem normal forms") {
    SqAdem adem;
    CHECK(sq_elem_str(adem.normal_form(SqWord{{4, 4}})) == "Sq^6 Sq^2 + Sq^7 Sq^1");
    CHECK(sq_elem_str(adem.normal_form(SqWord{{2, 4}})) == "Sq^5 Sq^1 + Sq^6");
    CHECK(sq_elem_str(adem.normal_form(SqWord{{2, 2, 2}})) == "Sq^5 Sq^1");
    CHECK(adem.normal_form(SqWord{{1, 1}}).is_zero());
    CHECK(adem.normal_form(SqWord{{1, 2, 1}}) == SqElem::single(SqWord{{3, 1}}));
    CHECK(adem.normal_form(SqWord{{1, 3}}).is_zero());
    // Sq^0 entries act as the identity.
    CHECK(adem.normal_form(SqWord{{0, 3, 0}}) == SqElem::single(SqWord{{3}}));
    // Admissible words are fixed points.
    CHECK(adem.normal_form(SqWord{{6, 3, 1}}) == SqElem::single(SqWord{{6, 3, 1}}));
}

TEST_CASE("Sq^6 decomposes as Sq^2 Sq^4 + Sq^2 Sq^2 Sq^2") {
    SqAdem adem;
    SqElem sum = adem.normal_form(SqWord{{2, 4}}) + adem.normal_form(SqWord{{2, 2, 2}});
    CHECK(sum == SqElem::single(SqWord{{6}}));
}

TEST_CASE("normal form matches scan rewriting for all pairs a,b <= 64") {
    SqAdem adem;
    for (int a = 1; a <= 64; ++a)
        for (int b = 1; b <= 64; ++b) {
            SqWord w{{a, b}};
            REQUIRE_MESSAGE(adem.normal_form(w) == oracles::adem_scan_normal_form(w),
                            "Sq^", a, " Sq^", b);
        }
}

TEST_CASE("normal form matches scan rewriting on random longer words") {
    SqAdem adem;
    std::mt19937 rng(411);
    std::uniform_int_distribution<int> len(3, 5);
    std::uniform_int_distribution<int> entry(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        SqWord w;
        w.s.resize(len(rng));
        for (int& v : w.s) v = entry(rng);
        SqElem nf = adem.normal_form(w);
        REQUIRE(nf == oracles::adem_scan_normal_form(w));
        for (const SqWord& t : nf.terms) {
            REQUIRE(t.admissible());
            REQUIRE(t.degree() == w.degree());
        }
    }
}

TEST_CASE("compose agrees with normalizing the concatenation") {
    SqAdem adem;
    std::mt19937 rng(412);
    std::uniform_int_distribution<int> len(1, 3);
    std::uniform_int_distribution<int> entry(1, 9);
    for (int trial = 0; trial < 200; ++trial) {
        SqWord u, v;
        u.s.resize(len(rng));
        v.s.resize(len(rng));
        for (int& x : u.s) x = entry(rng);
        for (int& x : v.s) x = entry(rng);
        SqWord cat;
        cat.s = u.s;
        cat.s.insert(cat.s.end(), v.s.begin(), v.s.end());
        REQUIRE(adem.compose(u, v) == adem.normal_form(cat));
    }
}

TEST_CASE("admissible basis is well-formed and counted independently") {
    std::map<std::pair<long long, long long>, long long> memo;
    CHECK(sq_admissible_basis(0) == std::vector<SqWord>{SqWord{}});
    for (long long d = 1; d <= 48; ++d) {
        const std::vector<SqWord> basis = sq_admissible_basis(d);
        REQUIRE(static_cast<long long>(basis.size()) == admissible_count(d, -1, memo));
        std::set<SqWord> seen;
        for (const SqWord& w : basis) {
            REQUIRE(w.admissible());
            REQUIRE(w.degree() == d);
            REQUIRE(seen.insert(w).second);
        }
        REQUIRE(std::is_sorted(basis.begin(), basis.end()));
    }
}

TEST_CASE("admissible basis sizes match the dimensions of the algebra") {
    const std::vector<std::size_t> expected = {1, 1, 1, 2, 2, 2, 3, 4, 4,
                                               5, 6, 6, 7, 8, 9, 11, 12};
    for (std::size_t d = 0; d < expected.size(); ++d)
        CHECK(sq_admissible_basis(static_cast<long long>(d)).size() == expected[d]);
}

TEST_CASE("power-of-two decompositions") {
    SqAdem adem;
    // The composition count grows exponentially in m; stay in cheap range.
    for (long long m = 2; m <= 16; ++m) {
        Pow2Decompositions dec = decompositions_pow2(m, adem);
        CHECK(dec.non_exhaustive_for_detection == is_pow2(m));
        for (const SqWord& w : dec.words) {
            REQUIRE(w.s.size() >= 2);
            REQUIRE(w.degree() == m);
            for (int a : w.s) REQUIRE(is_pow2(a));
            REQUIRE_FALSE(adem.normal_form(w).is_zero());
        }
    }
    // Sq^1 Sq^1 = 0, so m = 2 has no surviving decomposition.
    CHECK(decompositions_pow2(2, adem).words.empty());
    // m = 6: Sq^2 Sq^4 and Sq^4 Sq^2 survive; Sq^2 Sq^2 Sq^2 does too.
    Pow2Decompositions six = decompositions_pow2(6, adem);
    std::set<SqWord> got(six.words.begin(), six.words.end());
    CHECK(got.count(SqWord{{2, 4}}) == 1);
    CHECK(got.count(SqWord{{4, 2}}) == 1);
    CHECK(got.count(SqWord{{2, 2, 2}}) == 1);
    CHECK_FALSE(six.non_exhaustive_for_detection);
}

TEST_CASE("span membership with certificates") {
    SqAdem adem;
    const long long degree = 12;
    SqSpan span(degree);
    std::vector<SqElem> inserted;
    std::mt19937 rng(413);
    const std::vector<SqWord> basis = sq_admissible_basis(degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int g = 0; g < 10; ++g) {
        SqElem v;
        for (int t = 0; t < 3; ++t) v += SqElem::single(basis[pick(rng)]);
        span.add(v);
        inserted.push_back(v);
    }
    CHECK(span.generators() == 10);
    CHECK(span.rank() <= 10);
    // Every inserted vector is in the span, and its certificate reassembles it.
    for (const SqElem& v : inserted) {
        std::vector<std::size_t> comb;
        REQUIRE(span.contains(v, &comb));
        SqElem sum;
        for (std::size_t idx : comb) sum += inserted[idx];
        REQUIRE(sum == v);
    }
    // Random combinations are in the span too.
    for (int trial = 0; trial < 20; ++trial) {
        SqElem v;
        for (std::size_t k = 0; k < inserted.size(); ++k)
            if (rng() & 1) v += inserted[k];
        std::vector<std::size_t> comb;
        REQUIRE(span.contains(v, &comb));
        SqElem sum;
        for (std::size_t idx : comb) sum += inserted[idx];
        REQUIRE(sum == v);
    }
    // The zero vector has the empty certificate.
    std::vector<std::size_t> comb{99};
    CHECK(span.contains(SqElem::zero(), &comb));
    CHECK(comb.empty());
}

TEST_CASE("span rejects duplicates and reports non-members") {
    SqSpan span(4);
    SqElem v = SqElem::single(SqWord{{4}});
    CHECK(span.add(v));
    CHECK_FALSE(span.add(v));
    CHECK(span.rank() == 1);
    SqElem w = SqElem::single(SqWord{{3, 1}});
    CHECK_FALSE(span.contains(w));
    CHECK(span.add(w));
    CHECK(span.contains(v + w));
}

TEST_CASE("word printing") {
    CHECK(sq_word_str(SqWord{{6, 3, 1}}) == "Sq^6 Sq^3 Sq^1");
    CHECK(sq_word_str(SqWord{}) == "1");
    CHECK(sq_elem_str(SqElem::zero()) == "0");
}

}  // TEST_SUITE("steenrod")
