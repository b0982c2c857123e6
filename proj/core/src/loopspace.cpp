#include "qloop/loopspace.hpp"

#include <algorithm>

#include "qloop/dl.hpp"
#include "qloop/fp2.hpp"

namespace qloop {

namespace {

void generators_rec(int l, long long n, long long max_dim, int min_entry,
                    std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    // acc holds the word built so far, outermost first; appending j >= last
    // entry keeps the sequence nondecreasing, i.e. the upper form admissible.
    for (int j = min_entry; l == kInfiniteLoop || j < l; ++j) {
        acc.push_back(j);
        const long long d = dim_lower(acc, n);
        if (d > max_dim) {
            acc.pop_back();
            break;  // dimension grows with every entry value and length
        }
        out.push_back(acc);
        generators_rec(l, n, max_dim, j, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_generators(int l, long long n, long long max_dim) {
    std::vector<std::vector<int>> out;
    if (n <= max_dim) out.push_back({});
    std::vector<int> acc;
    generators_rec(l, n, max_dim, 1, acc, out);
    std::sort(out.begin(), out.end(), [n](const auto& a, const auto& b) {
        const long long da = dim_lower(a, n), db = dim_lower(b, n);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::vector<Product> enumerate_basis(int l, long long n, long long max_dim) {
    std::vector<Word> gens;
    for (const auto& J : enumerate_generators(l, n, max_dim))
        gens.push_back(Word{lower_to_upper(J, n)});

    std::vector<Product> out;
    Product acc;
    // Nonincreasing factor picks generate each sorted multiset exactly once.
    auto rec = [&](auto&& self, std::size_t max_gen, long long dim_left) -> void {
        out.push_back(acc);
        for (std::size_t g = 0; g < max_gen; ++g) {
            const long long d = word_dim(gens[g], n);
            if (d > dim_left) continue;
            acc.push_back(gens[g]);
            self(self, g + 1, dim_left - d);
            acc.pop_back();
        }
    };
    rec(rec, gens.size(), max_dim);

    for (Product& p : out) std::sort(p.begin(), p.end());
    std::sort(out.begin(), out.end(), [n](const Product& a, const Product& b) {
        const long long da = product_dim(a, n), db = product_dim(b, n);
        return da != db ? da < db : a < b;
    });
    return out;
}

std::vector<long long> basis_census(int l, long long n, long long max_dim) {
    std::vector<long long> census(static_cast<std::size_t>(max_dim) + 1, 0);
    for (const Product& p : enumerate_basis(l, n, max_dim))
        ++census[static_cast<std::size_t>(product_dim(p, n))];
    return census;
}

Element suspend_once(const Element& e, long long n) {
    DlEngine target(n + 1);
    Element out;
    for (const Product& p : e.terms) {
        if (p.size() != 1) continue;  // decomposables die
        // Same upper indices over x_{n+1}; excess n+1 words become squares.
        out += target.word_normal_form(p.front().q);
    }
    return out;
}

Element suspend(const Element& e, long long n, int steps) {
    Element cur = e;
    for (int k = 0; k < steps && !cur.is_zero(); ++k) {
        cur = suspend_once(cur, n);
        ++n;
    }
    return cur;
}

SuspensionReport max_suspension(const Element& e, long long n) {
    SuspensionReport report;
    for (const Product& p : e.terms) {
        if (p.size() == 1 && p.front().empty()) {
            report.stable = true;  // the x_n summand survives forever
            report.image = e;
            return report;
        }
    }
    Element cur = e;
    long long base = n;
    while (true) {
        Element next = suspend_once(cur, base);
        if (next.is_zero()) break;
        cur = std::move(next);
        ++base;
        ++report.steps;
        // A surviving x summand can only appear at the start; generator words
        // lose one from every lower index per step, so termination is forced.
    }
    report.image = cur;
    return report;
}

Element james_hopf_project(const Element& e, long long r) {
    Element out;
    for (const Product& p : e.terms)
        if (product_height(p) == r) out.terms.push_back(p);
    return out;
}

GapReport gap_report(const std::vector<int>& J, int l, long long n) {
    GapReport g;
    g.l = l;
    g.n = n;
    g.l0 = static_cast<int>(J.size());
    g.d = dim_lower(J, n);
    const long long p = 1ll << g.l0;  // 2^{l0}
    g.top = (p - 1) * (l - 2) + p * (n + 1);
    g.margin = 2 * g.d + 1 - g.top;
    const long long dp1 = g.d + 1;
    g.eliminated_by_gap = g.margin > 2 && dp1 % 4 == 2 && !is_pow2(dp1);

    std::vector<int> minimal(static_cast<std::size_t>(g.l0));
    for (int k = 0; k < g.l0; ++k) minimal[static_cast<std::size_t>(k)] = k + 1;
    g.exact_min_d = dim_lower(minimal, n + 1);
    g.printed_min_d = (p / 2) * (g.l0 - 1) + 1 + p * n;
    g.exact_min_margin = 2 * g.exact_min_d + 1 - g.top;
    g.printed_min_margin = p * (g.l0 + n - l) + l + 1;
    g.min_d_matches = g.exact_min_d == g.printed_min_d;
    g.min_margin_matches = g.exact_min_margin == g.printed_min_margin;
    return g;
}

}  // namespace qloop
