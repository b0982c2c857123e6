// The two-cell detection question: can Sq^m send the detect class of a cone
// over a stunted complex onto the cone cell?
//
// The cone C has the cohomology of the base in dimensions below the cone
// cell, which sits m above the detect class.  A composition route
// (r_1, ..., r_k) -- applied left to right, sum m -- provably annihilates the
// detect class as soon as an intermediate step dies in the base (even
// binomial or truncation), because every intermediate dimension is strictly
// below the cone cell.  Spans of such provably-zero compositions certify
// impossibility: when Sq^m itself lies in the span, Sq^m cannot reach the
// cone cell and the detection fails.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloop/steenrod.hpp"
#include "qloop/stunted.hpp"

namespace qloop {

enum class ConeVerdict { kImpossible, kPossible, kNeedsExternal };

std::string cone_verdict_str(ConeVerdict v);

struct ConeProblem {
    StuntedComplex base;                // ignored when sphere = true
    bool sphere = false;                // base is a single cell at detect_dim
    long long detect_dim = 0;           // dimension of the detect class xi^*
    long long cone_dim = 0;             // dimension of the cone cell, = 2*detect_dim
    std::vector<long long> hopf_dims;   // external fact: Hopf-invariant-one Sq^m dims
};

struct RouteStep {
    long long r = 0;     // the Sq exponent applied at this step
    long long from = 0;  // dimension the step started at
    bool odd = false;    // binomial coefficient parity (false when truncated)
    bool in_range = false;  // landing dimension still carried by the base
};

struct RouteEval {
    std::vector<int> route;       // exponents in application order
    std::vector<RouteStep> steps;
    bool dead = false;            // died strictly below the cone dimension
    long long landing = 0;        // final dimension reached (when not dead)
};

// Evaluates one composition route from the detect class; the final step of a
// full-degree route lands at the cone dimension where the value is unknown,
// so only intermediate deaths count as zero.
RouteEval eval_route(const ConeProblem& p, const std::vector<int>& route);

struct CertificateRow {
    SqWord left;                 // admissible left factor
    std::vector<int> dead_route; // the provably-zero prefix (application order)
    SqElem normal_form;          // nf(left o reverse(dead_route))
};

struct ConeTrace {
    ConeProblem problem;
    std::string branch;  // "sphere" | "pow2" | "main1" | "exhaustive" | "span"
    // main1 attempt (detect_dim = 4m'+2): routes (4m', 2) and (1, 4m', 1).
    bool main1_applicable = false;
    bool main1_route_elimination = false;
    std::vector<RouteEval> main1_routes;
    // Power-of-two route tree from the detect class.
    std::vector<std::vector<int>> min_dead;     // minimal dead prefixes
    std::vector<std::vector<int>> alive_words;  // full words reaching the cone dim
    // Span certificate: Sq^m as a sum of normal forms of dead compositions.
    bool certificate_found = false;
    std::vector<CertificateRow> certificate;
    std::string detail;
};

ConeVerdict cone_detection_possible(const ConeProblem& p, SqAdem& adem, ConeTrace* trace = nullptr);

}  // namespace qloop
