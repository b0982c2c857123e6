// The mod-2 Steenrod algebra on the cohomology side: compositions
// Sq^{a_1}...Sq^{a_s}, Adem normalization into the admissible basis
// (a_k >= 2 a_{k+1}), the admissible basis by degree, and an F2 row-reduction
// span with membership certificates.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qloop {

struct SqWord {
    std::vector<int> s;  // exponents, leftmost outermost: Sq^{s_0} Sq^{s_1} ...

    bool empty() const { return s.empty(); }
    long long degree() const {
        long long d = 0;
        for (int a : s) d += a;
        return d;
    }
    bool admissible() const {
        for (std::size_t k = 0; k + 1 < s.size(); ++k)
            if (s[k] < 2 * s[k + 1]) return false;
        return true;
    }

    friend bool operator==(const SqWord& a, const SqWord& b) { return a.s == b.s; }
    friend bool operator<(const SqWord& a, const SqWord& b) { return a.s < b.s; }
};

// F2 sum of admissible words (or arbitrary words before normalization).
struct SqElem {
    std::vector<SqWord> terms;  // sorted, duplicate-free

    bool is_zero() const { return terms.empty(); }
    static SqElem zero() { return {}; }
    static SqElem single(SqWord w) { return SqElem{{std::move(w)}}; }

    friend bool operator==(const SqElem& a, const SqElem& b) { return a.terms == b.terms; }
    friend bool operator!=(const SqElem& a, const SqElem& b) { return !(a == b); }
};

SqElem operator+(const SqElem& a, const SqElem& b);
SqElem& operator+=(SqElem& a, const SqElem& b);

std::string sq_word_str(const SqWord& w);
std::string sq_elem_str(const SqElem& e);

// Adem normalizer with a process-wide memo table on single words.
class SqAdem {
  public:
    // Normal form of a single composition; entries may be arbitrary positive
    // integers (zeros are treated as Sq^0 = 1 and dropped).
    SqElem normal_form(const SqWord& w);
    // Linear extension.
    SqElem normal_form(const SqElem& e);
    // Normal form of the concatenation u then v (the composition u o v,
    // i.e. v acts first).
    SqElem compose(const SqWord& u, const SqWord& v);

  private:
    std::map<SqWord, SqElem> memo_;
};

// All admissible words of the given total degree, lexicographically sorted.
// Degree 0 yields the empty word.
std::vector<SqWord> sq_admissible_basis(long long degree);

// All compositions Sq^{a_1}...Sq^{a_s} of m into s >= 2 powers of two whose
// Adem normal form is nonzero.  When m is itself a power of two the list
// cannot witness anything about the indecomposable Sq^m.
struct Pow2Decompositions {
    std::vector<SqWord> words;
    bool non_exhaustive_for_detection = false;  // set when m = 2^t
};
Pow2Decompositions decompositions_pow2(long long m, SqAdem& adem);

// Incremental F2 span of elements of a fixed degree, with membership
// certificates expressed as subsets of the inserted generators.
class SqSpan {
  public:
    explicit SqSpan(long long degree);

    long long degree() const { return degree_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t generators() const { return inserted_; }

    // Inserts v; returns false if v was already in the span.
    bool add(const SqElem& v);

    // True iff v lies in the span; when so and combination != nullptr,
    // fills it with indices (insertion order) of generators XOR-ing to v.
    bool contains(const SqElem& v, std::vector<std::size_t>* combination = nullptr) const;

  private:
    struct Row {
        std::vector<std::uint64_t> bits;  // coordinates over the admissible basis
        std::vector<std::uint64_t> comb;  // which inserted generators sum to this row
        std::size_t pivot;
    };

    std::vector<std::uint64_t> coordinates(const SqElem& v) const;

    long long degree_;
    std::vector<SqWord> basis_;
    std::map<SqWord, std::size_t> index_;
    std::vector<Row> rows_;
    std::size_t inserted_ = 0;
};

}  // namespace qloop
