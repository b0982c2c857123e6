// Structure maps of the tower Omega^l S^{n+l}: generator/monomial bases,
// homology suspension with its decomposable kernel, the height filtration
// with James-Hopf projections, and the dimension-gap inequality engine.
#pragma once

#include <string>
#include <vector>

#include "qloop/algebra.hpp"

namespace qloop {

// All generator words (as lower-index sequences, outermost first) legal in
// Omega^l S^{n+l} with dimension <= max_dim: nondecreasing sequences with
// entries in (0, l), including the empty word x_n.  l = kInfiniteLoop lifts
// the entry bound.
std::vector<std::vector<int>> enumerate_generators(int l, long long n, long long max_dim);

// All normal-form monomials (products of generator words) of dimension
// <= max_dim, sorted by dimension then lexicographically.
std::vector<Product> enumerate_basis(int l, long long n, long long max_dim);

// Monomial counts per dimension 0..max_dim.
std::vector<long long> basis_census(int l, long long n, long long max_dim);

// Homology suspension H_* Omega^l S^{n+l} -> H_{*+1} Omega^{l-1} S^{n+l}:
// kills decomposables, re-bases generator words over x_{n+1} (upper indices
// unchanged; lower indices drop by one, excess-n+1 words becoming squares).
Element suspend_once(const Element& e, long long n);
Element suspend(const Element& e, long long n, int steps);

struct SuspensionReport {
    bool stable = false;  // an x_n summand survives every suspension
    int steps = 0;        // largest j with suspend(e, j) != 0 (when not stable)
    Element image;        // that last nonzero suspension (the input when stable)
};

// Largest suspension with nonzero image; elements with an x_n term never die
// and are reported stable.
SuspensionReport max_suspension(const Element& e, long long n);

// Keeps exactly the terms of height r (the D_r Snaith summand in homology).
Element james_hopf_project(const Element& e, long long r);

struct GapReport {
    int l = 0;
    long long n = 0;
    int l0 = 0;             // word length driving the 2^{l0} Snaith piece
    long long d = 0;        // dim of the candidate word
    long long top = 0;      // top dim of D_{2^{l0}}(S^{n+1}, l-1)
    long long margin = 0;   // 2d + 1 - top
    bool eliminated_by_gap = false;  // margin > 2, d+1 = 2 mod 4, d+1 not 2^t
    // Closed forms as printed alongside the exact values they should equal.
    long long exact_min_d = 0;       // dim of Q_1...Q_{l0} x_{n+1}
    long long printed_min_d = 0;     // 2^{l0-1}(l0-1) + 1 + 2^{l0} n
    long long exact_min_margin = 0;  // 2*exact_min_d + 1 - top
    long long printed_min_margin = 0;  // 2^{l0}(l0+n-l) + l + 1
    bool min_d_matches = false;
    bool min_margin_matches = false;
};

// Exact gap data for the word J in Omega^l S^{n+l}; the printed closed forms
// are evaluated side by side and flagged, never substituted.
GapReport gap_report(const std::vector<int>& J, int l, long long n);

}  // namespace qloop
