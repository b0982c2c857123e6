#include "qloop/steenrod.hpp"

#include <algorithm>

#include "qloop/fp2.hpp"

namespace qloop {

SqElem operator+(const SqElem& a, const SqElem& b) {
    std::vector<SqWord> merged;
    merged.reserve(a.terms.size() + b.terms.size());
    std::set_symmetric_difference(a.terms.begin(), a.terms.end(), b.terms.begin(),
                                  b.terms.end(), std::back_inserter(merged));
    return SqElem{std::move(merged)};
}

SqElem& operator+=(SqElem& a, const SqElem& b) {
    a = a + b;
    return a;
}

std::string sq_word_str(const SqWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int a : w.s) {
        if (!out.empty()) out += ' ';
        out += "Sq^";
        out += std::to_string(a);
    }
    return out;
}

std::string sq_elem_str(const SqElem& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const SqWord& w : e.terms) {
        if (!out.empty()) out += " + ";
        out += sq_word_str(w);
    }
    return out;
}

SqElem SqAdem::normal_form(const SqWord& w) {
    // Drop Sq^0 factors.
    if (std::find(w.s.begin(), w.s.end(), 0) != w.s.end()) {
        SqWord cleaned;
        for (int a : w.s)
            if (a != 0) cleaned.s.push_back(a);
        return normal_form(cleaned);
    }
    if (w.admissible()) return SqElem::single(w);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    // First inadmissible pair from the left: Sq^a Sq^b with a < 2b.
    std::size_t k = 0;
    while (w.s[k] >= 2 * w.s[k + 1]) ++k;
    const long long a = w.s[k], b = w.s[k + 1];

    SqElem out;
    // Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c for a < 2b.
    for (long long c = 0; 2 * c <= a; ++c) {
        if (!binom2(b - c - 1, a - 2 * c)) continue;
        SqWord rewritten;
        rewritten.s.reserve(w.s.size() + 1);
        rewritten.s.insert(rewritten.s.end(), w.s.begin(), w.s.begin() + k);
        rewritten.s.push_back(static_cast<int>(a + b - c));
        if (c > 0) rewritten.s.push_back(static_cast<int>(c));
        rewritten.s.insert(rewritten.s.end(), w.s.begin() + k + 2, w.s.end());
        out += normal_form(rewritten);
    }
    memo_.emplace(w, out);
    return out;
}

SqElem SqAdem::normal_form(const SqElem& e) {
    SqElem out;
    for (const SqWord& w : e.terms) out += normal_form(w);
    return out;
}

SqElem SqAdem::compose(const SqWord& u, const SqWord& v) {
    SqWord joined;
    joined.s.reserve(u.s.size() + v.s.size());
    joined.s.insert(joined.s.end(), u.s.begin(), u.s.end());
    joined.s.insert(joined.s.end(), v.s.begin(), v.s.end());
    return normal_form(joined);
}

namespace {

void admissible_rec(long long degree, long long max_first, SqWord& acc,
                    std::vector<SqWord>& out) {
    if (degree == 0) {
        out.push_back(acc);
        return;
    }
    // Next (leftmost remaining) exponent a: a <= max_first, and the remaining
    // degree must be expressible admissibly below a/2: remainder <= a - 1
    // in the admissible geometric bound sum_{k>=1} a/2^k = a - (tail), i.e.
    // a >= ceil((degree+1)/2) ensures the tail degree - a < a ... iterate and
    // recurse with the exact constraint instead of a closed form.
    for (long long a = std::min(degree, max_first); a >= 1; --a) {
        const long long rest = degree - a;
        if (rest > a - 1) break;  // tail of an admissible word has degree < a
        acc.s.push_back(static_cast<int>(a));
        admissible_rec(rest, a / 2, acc, out);
        acc.s.pop_back();
    }
}

}  // namespace

std::vector<SqWord> sq_admissible_basis(long long degree) {
    std::vector<SqWord> out;
    SqWord acc;
    admissible_rec(degree, degree, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

Pow2Decompositions decompositions_pow2(long long m, SqAdem& adem) {
    Pow2Decompositions result;
    result.non_exhaustive_for_detection = is_pow2(m);

    std::vector<int> pows;
    for (long long p = 1; p <= m; p *= 2) pows.push_back(static_cast<int>(p));

    std::vector<SqWord> all;
    SqWord acc;
    // Depth-first over compositions of m into powers of two.
    auto rec = [&](auto&& self, long long rest) -> void {
        if (rest == 0) {
            if (acc.s.size() >= 2) all.push_back(acc);
            return;
        }
        for (int p : pows) {
            if (p > rest) break;
            acc.s.push_back(p);
            self(self, rest - p);
            acc.s.pop_back();
        }
    };
    rec(rec, m);

    for (SqWord& w : all)
        if (!adem.normal_form(w).is_zero()) result.words.push_back(std::move(w));
    return result;
}

SqSpan::SqSpan(long long degree) : degree_(degree), basis_(sq_admissible_basis(degree)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
}

std::vector<std::uint64_t> SqSpan::coordinates(const SqElem& v) const {
    std::vector<std::uint64_t> bits((basis_.size() + 63) / 64, 0);
    for (const SqWord& w : v.terms) {
        const auto it = index_.find(w);
        if (it == index_.end()) continue;  // callers pass normalized input
        bits[it->second / 64] ^= 1ull << (it->second % 64);
    }
    return bits;
}

namespace {

std::size_t first_set(const std::vector<std::uint64_t>& bits) {
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k]) return 64 * k + static_cast<std::size_t>(__builtin_ctzll(bits[k]));
    return static_cast<std::size_t>(-1);
}

void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] ^= b[k];
}

}  // namespace

bool SqSpan::add(const SqElem& v) {
    std::vector<std::uint64_t> bits = coordinates(v);
    std::vector<std::uint64_t> comb(( inserted_ + 64) / 64 + 1, 0);
    comb[inserted_ / 64] = 1ull << (inserted_ % 64);
    ++inserted_;
    for (const Row& row : rows_) {
        const std::size_t p = row.pivot;
        if (p / 64 < bits.size() && (bits[p / 64] >> (p % 64)) & 1) {
            xor_into(bits, row.bits);
            xor_into(comb, row.comb);
        }
    }
    const std::size_t pivot = first_set(bits);
    if (pivot == static_cast<std::size_t>(-1)) return false;
    rows_.push_back(Row{std::move(bits), std::move(comb), pivot});
    return true;
}

bool SqSpan::contains(const SqElem& v, std::vector<std::size_t>* combination) const {
    std::vector<std::uint64_t> bits = coordinates(v);
    std::vector<std::uint64_t> comb;
    for (const Row& row : rows_) {
        const std::size_t p = row.pivot;
        if (p / 64 < bits.size() && (bits[p / 64] >> (p % 64)) & 1) {
            xor_into(bits, row.bits);
            xor_into(comb, row.comb);
        }
    }
    if (first_set(bits) != static_cast<std::size_t>(-1)) return false;
    if (combination) {
        combination->clear();
        for (std::size_t k = 0; k < comb.size(); ++k)
            for (std::uint64_t word = comb[k]; word; word &= word - 1)
                combination->push_back(64 * k +
                                       static_cast<std::size_t>(__builtin_ctzll(word)));
        std::sort(combination->begin(), combination->end());
    }
    return true;
}

}  // namespace qloop
