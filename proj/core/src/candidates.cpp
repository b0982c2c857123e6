#include "qloop/candidates.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qloop {

namespace {

// Concrete sequences covered by the tabulated l=8 row families (the
// parameterized rows expanded over their stated j values).
const std::set<std::vector<int>>& tabulated_patterns() {
    static const std::set<std::vector<int>> patterns = {
        {},
        {1}, {3}, {5}, {7},
        {1, 2}, {1, 4}, {1, 6}, {3, 4}, {3, 6}, {5, 6},
        {1, 2, 3}, {1, 2, 5}, {1, 2, 7}, {1, 4, 5}, {1, 4, 7}, {1, 6, 7},
        {3, 4, 5}, {3, 4, 7}, {3, 6, 7}, {5, 6, 7},
        {1, 2, 3, 4}, {1, 2, 3, 6}, {1, 2, 5, 6}, {3, 4, 5, 6},
        {1, 2, 3, 4, 5}, {1, 2, 3, 4, 7}, {3, 4, 5, 6, 7},
        {1, 2, 3, 4, 5, 6},
        {1, 2, 3, 4, 5, 6, 7},
    };
    return patterns;
}

void candidates_rec(int l, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    const int last = acc.back();
    for (int j = last + 1; j < l; ++j) {
        if ((last + j) % 2 == 0) continue;  // consecutive sums must be odd
        acc.push_back(j);
        out.push_back(acc);
        candidates_rec(l, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Candidate> enumerate_candidates(int l) {
    if (l < 4 || l > 9) throw std::out_of_range("enumerate_candidates: loop bound out of range");
    std::vector<std::vector<int>> seqs{{}};
    for (int j = 1; j < l; j += 2) {  // first entry odd
        std::vector<int> acc{j};
        seqs.push_back(acc);
        candidates_rec(l, acc, seqs);
    }
    std::sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<Candidate> out;
    out.reserve(seqs.size());
    for (auto& J : seqs) {
        Candidate c;
        c.extra = tabulated_patterns().count(J) == 0;
        c.J = std::move(J);
        out.push_back(std::move(c));
    }
    return out;
}

std::string candidate_str(const Candidate& c) {
    if (c.J.empty()) return "()";
    std::string out = "(";
    for (std::size_t k = 0; k < c.J.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(c.J[k]);
    }
    out += ")";
    return out;
}

}  // namespace qloop
