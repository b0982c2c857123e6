// Independent reference implementations used to cross-check the engine.
// Everything here is deliberately naive: Pascal's triangle instead of Lucas,
// relation-free scan rewriting instead of memoized recursion, exhaustive
// word enumeration instead of generator checks.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qloop/algebra.hpp"
#include "qloop/nishida.hpp"
#include "qloop/steenrod.hpp"

namespace oracles {

// Binomial coefficients mod 2 from Pascal's triangle.
inline int pascal_binom2(long long m, long long k) {
    if (k < 0 || m < 0 || k > m) return 0;
    std::vector<std::uint8_t> row{1};
    for (long long r = 1; r <= m; ++r) {
        std::vector<std::uint8_t> next(r + 1, 1);
        for (long long c = 1; c < r; ++c) next[c] = row[c - 1] ^ row[c];
        row = std::move(next);
    }
    return row[k];
}

// One leftmost rewrite step of the Adem relation on the cohomology side; the
// normal form is reached by scanning until every adjacent pair is admissible.
// Returns all words (with multiplicity mod 2 already cancelled by caller).
inline std::vector<qloop::SqWord> adem_scan_step(const qloop::SqWord& w) {
    using qloop::SqWord;
    for (std::size_t k = 0; k + 1 < w.s.size(); ++k) {
        const long long a = w.s[k], b = w.s[k + 1];
        if (a >= 2 * b) continue;
        std::vector<SqWord> out;
        for (long long c = 0; 2 * c <= a; ++c) {
            if (pascal_binom2(b - c - 1, a - 2 * c) == 0) continue;
            SqWord r;
            r.s.assign(w.s.begin(), w.s.begin() + k);
            if (a + b - c > 0) r.s.push_back(static_cast<int>(a + b - c));
            if (c > 0) r.s.push_back(static_cast<int>(c));
            r.s.insert(r.s.end(), w.s.begin() + k + 2, w.s.end());
            out.push_back(std::move(r));
        }
        return out;
    }
    return {w};  // already admissible
}

// Full normal form by repeated scanning, with an explicit mod-2 multiset.
inline qloop::SqElem adem_scan_normal_form(const qloop::SqWord& start) {
    std::map<qloop::SqWord, int> pending{{start, 1}};
    qloop::SqElem done;
    while (!pending.empty()) {
        auto it = pending.begin();
        qloop::SqWord w = it->first;
        int mult = it->second % 2;
        pending.erase(it);
        if (mult == 0) continue;
        if (w.admissible()) {
            done += qloop::SqElem::single(w);
            continue;
        }
        for (qloop::SqWord& r : adem_scan_step(w)) ++pending[r];
    }
    return done;
}

// Dual action of an arbitrary composition: the outermost (leftmost)
// exponent is applied first; this is the order under which single
// applications assemble into an action of the whole algebra, i.e. the order
// compatible with Adem normal forms.
inline qloop::Element sq_word_dual(qloop::SqDual& sq, const qloop::SqWord& w,
                                   const qloop::Element& e) {
    qloop::Element cur = e;
    for (long long r : w.s) cur = sq.apply(r, cur);
    return cur;
}

// Exhaustive annihilation: every admissible word of positive degree <= dim
// must act by zero.  The generator check must agree with this.
inline bool brute_A_annihilated(qloop::SqDual& sq, const qloop::Element& e, long long dim) {
    for (long long d = 1; d <= dim; ++d)
        for (const qloop::SqWord& w : qloop::sq_admissible_basis(d))
            if (!sq_word_dual(sq, w, e).is_zero()) return false;
    return true;
}

// Monomial counts from the generating function prod_g 1/(1 - t^{dim g})
// over the generator words, organized as a knapsack-style DP.
inline std::vector<long long> census_dp(const std::vector<long long>& generator_dims,
                                        long long max_dim) {
    std::vector<long long> count(max_dim + 1, 0);
    count[0] = 1;
    for (long long g : generator_dims)
        for (long long d = g; d <= max_dim; ++d) count[d] += count[d - g];
    return count;
}

}  // namespace oracles
