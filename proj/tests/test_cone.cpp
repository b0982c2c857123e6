#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "qloop/cone.hpp"
#include "qloop/fp2.hpp"

#include "oracles.hpp"

using namespace qloop;

namespace {

const std::vector<long long> kHopf = {1, 2, 4, 8};

// The detection problem the pipeline poses for a singleton candidate (j) at
// base n and loop bound l: detect class in dimension d+1 = 2n+j+1, cone cell
// twice as high, base the Snaith piece's stunted complex.
ConeProblem singleton_problem(int j, long long n, int l) {
    const long long d = 2 * n + j;
    return ConeProblem{d2_stunted(n + 1, l - 1), j == l - 1, d + 1, 2 * (d + 1), kHopf};
}

}  // namespace

TEST_SUITE("cone") {

TEST_CASE("stunted complex geometry") {
    StuntedComplex X = d2_stunted(5, 7);  // Sigma^5 P_5^11
    CHECK(X.s == 5);
    CHECK(X.a == 5);
    CHECK(X.b == 11);
    CHECK(X.bottom_dim() == 10);
    CHECK(X.top_dim() == 16);
    CHECK(X.has_dim(10));
    CHECK(X.has_dim(16));
    CHECK_FALSE(X.has_dim(9));
    CHECK_FALSE(X.has_dim(17));
    CHECK_FALSE(X.is_sphere());
    CHECK(d2_stunted(3, 1).is_sphere());
}

TEST_CASE("Steenrod action on a stunted complex follows the binomial rule") {
    StuntedComplex X = d2_stunted(5, 7);
    for (long long m = X.bottom_dim(); m <= X.top_dim(); ++m)
        for (long long k = 1; k <= 8; ++k) {
            auto got = sq_stunted(k, m, X);
            const bool odd = oracles::pascal_binom2(m - X.s, k) != 0;
            if (odd && m + k <= X.top_dim()) {
                REQUIRE(got.has_value());
                REQUIRE(*got == m + k);
            } else {
                REQUIRE_FALSE(got.has_value());
            }
        }
    CHECK(sq_stunted(4, 11, X) == 15);
    CHECK_FALSE(sq_stunted(4, 13, X).has_value());   // even coefficient
    CHECK_FALSE(sq_stunted(6, 12, X).has_value());   // truncated above the top
    CHECK_THROWS_AS(sq_stunted(1, 9, X), std::exception);
    CHECK_THROWS_AS(sq_stunted(1, 17, X), std::exception);
}

TEST_CASE("route evaluation records step parities and intermediate deaths") {
    ConeProblem p = singleton_problem(1, 2, 8);  // detect 6, cone 12, base Sigma^3 P_3^9
    REQUIRE(p.detect_dim == 6);
    REQUIRE(p.cone_dim == 12);

    RouteEval dead = eval_route(p, {4, 2});
    REQUIRE(dead.dead);
    REQUIRE(dead.steps.size() == 1);  // dies on the first step
    CHECK(dead.steps[0].r == 4);
    CHECK(dead.steps[0].from == 6);
    CHECK_FALSE(dead.steps[0].odd);  // C(3,4) = 0
    CHECK(dead.steps[0].in_range);   // 10 is still a base dimension

    RouteEval alive = eval_route(p, {1, 4, 1});
    REQUIRE_FALSE(alive.dead);  // the last step lands on the cone cell
    REQUIRE(alive.steps.size() == 3);  // the landing step is recorded too
    CHECK(alive.steps[0].r == 1);
    CHECK(alive.steps[0].odd);
    CHECK(alive.steps[1].r == 4);
    CHECK(alive.steps[1].odd);  // C(4,4) = 1
    CHECK(alive.steps[2].r == 1);
    CHECK(alive.steps[2].from == 11);
    CHECK(alive.landing == 12);
}

TEST_CASE("sphere branch defers to the Hopf invariant one dimensions") {
    SqAdem adem;
    ConeTrace t;
    CHECK(cone_detection_possible(ConeProblem{{}, true, 4, 8, kHopf}, adem, &t) ==
          ConeVerdict::kPossible);
    CHECK(t.branch == "sphere");
    CHECK(t.detail == "Sq^4 can have Hopf invariant one");

    for (long long n : {2, 4, 8, 16}) {
        ConeTrace s;
        CHECK(cone_detection_possible(singleton_problem(7, n, 8), adem, &s) ==
              ConeVerdict::kImpossible);
        CHECK(s.branch == "sphere");
    }
    ConeTrace s2;
    cone_detection_possible(singleton_problem(7, 2, 8), adem, &s2);
    CHECK(s2.detail == "Sq^12 on a sphere requires a Hopf invariant one dimension");
}

TEST_CASE("indecomposable Sq^2^t over a stunted base needs external input") {
    SqAdem adem;
    ConeTrace t;
    CHECK(cone_detection_possible(singleton_problem(3, 6, 8), adem, &t) ==
          ConeVerdict::kNeedsExternal);
    CHECK(t.branch == "pow2");
    CHECK(t.detail == "Sq^16 is indecomposable; cone action unknown");
}

TEST_CASE("main1 decomposition eliminates j=1 and j=5 at even n") {
    SqAdem adem;
    for (int j : {1, 5})
        for (long long n = 2; n <= 64; n += 2) {
            if (j == 1 && n == 2) continue;  // the one main1 failure, handled below
            ConeTrace t;
            REQUIRE(cone_detection_possible(singleton_problem(j, n, 8), adem, &t) ==
                    ConeVerdict::kImpossible);
            REQUIRE_MESSAGE(t.branch == "main1", "j=", j, " n=", n);
            REQUIRE(t.main1_applicable);
            REQUIRE(t.main1_route_elimination);
            REQUIRE(t.main1_routes.size() == 2);
            REQUIRE(t.main1_routes[0].dead);
            REQUIRE(t.main1_routes[1].dead);
        }
}

TEST_CASE("at j=1, n=2 the main1 route survives and the span takes over") {
    SqAdem adem;
    ConeTrace t;
    CHECK(cone_detection_possible(singleton_problem(1, 2, 8), adem, &t) ==
          ConeVerdict::kImpossible);
    CHECK(t.branch == "span");
    CHECK(t.main1_applicable);
    CHECK_FALSE(t.main1_route_elimination);
    REQUIRE(t.main1_routes.size() == 2);
    CHECK(t.main1_routes[0].route == std::vector<int>{4, 2});
    CHECK(t.main1_routes[0].dead);
    CHECK(t.main1_routes[1].route == std::vector<int>{1, 4, 1});
    CHECK_FALSE(t.main1_routes[1].dead);
    CHECK(t.detail == "Sq^6 = nf(Sq^2 Sq^1 o rev(1,2)) + nf(Sq^2 o rev(4))");
    // At the shorter towers the second route is truncated and main1 succeeds.
    ConeTrace s;
    CHECK(cone_detection_possible(singleton_problem(1, 2, 5), adem, &s) ==
          ConeVerdict::kImpossible);
    CHECK(s.branch == "main1");
    CHECK(s.main1_route_elimination);
}

TEST_CASE("span certificate for (3) at n=4 replays exactly") {
    SqAdem adem;
    ConeProblem p = singleton_problem(3, 4, 8);
    ConeTrace t;
    REQUIRE(cone_detection_possible(p, adem, &t) == ConeVerdict::kImpossible);
    REQUIRE(t.branch == "span");
    REQUIRE(t.certificate_found);
    CHECK(t.detail ==
          "Sq^12 = nf(Sq^6 Sq^2 Sq^1 o rev(1,2)) + nf(Sq^5 Sq^2 o rev(1,4)) + "
          "nf(Sq^4 Sq^2 o rev(2,4)) + nf(Sq^4 o rev(8))");

    // The route tree: (4,4) is a minimal dead prefix, only (4,8) reaches the cone.
    CHECK(std::find(t.min_dead.begin(), t.min_dead.end(), std::vector<int>{4, 4}) !=
          t.min_dead.end());
    CHECK(t.alive_words == std::vector<std::vector<int>>{{4, 8}});
    RouteEval r44 = eval_route(p, {4, 4});
    CHECK(r44.dead);

    // Every certificate row: the dead route really dies, the recorded normal
    // form is nf(left o reverse(route)), and the rows sum to Sq^12.
    SqElem total;
    for (const CertificateRow& row : t.certificate) {
        REQUIRE(eval_route(p, row.dead_route).dead);
        SqWord reversed;
        reversed.s.assign(row.dead_route.rbegin(), row.dead_route.rend());
        REQUIRE(adem.compose(row.left, reversed) == row.normal_form);
        for (int a : row.dead_route) REQUIRE(is_pow2(a));
        total += row.normal_form;
    }
    CHECK(total == SqElem::single(SqWord{{12}}));
}

TEST_CASE("exhaustive branch: every power-of-two word dies for (3) at n = 0 mod 4, n >= 8") {
    SqAdem adem;
    for (long long n = 8; n <= 64; n += 4) {
        ConeTrace t;
        REQUIRE(cone_detection_possible(singleton_problem(3, n, 8), adem, &t) ==
                ConeVerdict::kImpossible);
        REQUIRE_MESSAGE(t.branch == "exhaustive", "n=", n);
        REQUIRE(t.alive_words.empty());
        for (const std::vector<int>& route : t.min_dead)
            REQUIRE(eval_route(singleton_problem(3, n, 8), route).dead);
    }
}

TEST_CASE("verdict strings") {
    CHECK(cone_verdict_str(ConeVerdict::kImpossible) == "IMPOSSIBLE");
    CHECK(cone_verdict_str(ConeVerdict::kPossible) == "POSSIBLE");
    CHECK(cone_verdict_str(ConeVerdict::kNeedsExternal) == "NEEDS-EXTERNAL");
}

}  // TEST_SUITE("cone")
