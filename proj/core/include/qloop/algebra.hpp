// Value types for the mod-2 homology of iterated loop spaces of spheres.
//
// H_*(Omega^l S^{n+l}; F2) is a polynomial algebra on admissible words
// Q^{i_1} ... Q^{i_s} x_n of excess > n whose lower indices stay below l,
// together with the bottom class x_n itself.  A Word stores the upper
// indices (outermost first); the empty word is x_n.  A Product is a sorted
// multiset of words (squares appear as repeated factors), and an Element is
// a canonically sorted mod-2 sum of products.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace qloop {

// Sentinel for the stable (infinite loop) context, where every admissible
// word is legal.
inline constexpr int kInfiniteLoop = -1;

struct Word {
    std::vector<int> q;  // upper indices, outermost operation first

    bool empty() const { return q.empty(); }
    std::size_t length() const { return q.size(); }

    friend bool operator==(const Word& a, const Word& b) { return a.q == b.q; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) { return a.q < b.q; }
};

// A commutative monomial in the generator words; kept sorted.
using Product = std::vector<Word>;

struct Element {
    std::vector<Product> terms;  // sorted, duplicate-free (mod-2 sum)

    bool is_zero() const { return terms.empty(); }

    static Element zero() { return {}; }
    static Element single(Product p) {
        std::sort(p.begin(), p.end());
        return Element{{std::move(p)}};
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

// ---- dimensions, excess, admissibility -----------------------------------

// Dimension of Q_{j_1} ... Q_{j_s} x_n written with lower indices
// (outermost first): 2^s n + sum_k 2^{k-1} j_k.
inline long long dim_lower(const std::vector<int>& j, long long n) {
    long long d = n;
    for (auto it = j.rbegin(); it != j.rend(); ++it) d = 2 * d + *it;
    return d;
}

// Upper indices from lower ones: i_k = j_k + dim of the part inside it.
inline std::vector<int> lower_to_upper(const std::vector<int>& j, long long n) {
    std::vector<int> upper(j.size());
    long long inner = n;
    for (std::size_t k = j.size(); k-- > 0;) {
        upper[k] = static_cast<int>(j[k] + inner);
        inner = 2 * inner + j[k];
    }
    return upper;
}

// Lower indices from upper ones: j_k = i_k - (n + sum of the deeper i's).
inline std::vector<int> upper_to_lower(const std::vector<int>& i, long long n) {
    std::vector<int> lower(i.size());
    long long inner = n;
    for (std::size_t k = i.size(); k-- > 0;) {
        lower[k] = static_cast<int>(i[k] - inner);
        inner += i[k];
    }
    return lower;
}

inline long long word_dim(const Word& w, long long n) {
    long long d = n;
    for (int a : w.q) d += a;
    return d;
}

// Excess i_1 - (i_2 + ... + i_s); the empty word has infinite excess.
inline long long word_excess(const Word& w) {
    if (w.empty()) return std::numeric_limits<long long>::max();
    long long rest = 0;
    for (std::size_t k = 1; k < w.q.size(); ++k) rest += w.q[k];
    return w.q.front() - rest;
}

inline bool word_admissible(const Word& w) {
    for (std::size_t k = 0; k + 1 < w.q.size(); ++k)
        if (w.q[k] > 2 * w.q[k + 1]) return false;
    return true;
}

// A generator word is legal in the l-fold loop space when every lower index
// lies strictly between 0 and l.  Stable contexts accept everything.
inline bool word_legal(const Word& w, long long n, int loop) {
    if (loop == kInfiniteLoop || w.empty()) return true;
    const std::vector<int> lower = upper_to_lower(w.q, n);
    for (int j : lower)
        if (j <= 0 || j >= loop) return false;
    return true;
}

inline long long product_dim(const Product& p, long long n) {
    long long d = 0;
    for (const Word& w : p) d += word_dim(w, n);
    return d;
}

inline bool product_legal(const Product& p, long long n, int loop) {
    for (const Word& w : p)
        if (!word_legal(w, n, loop)) return false;
    return true;
}

// Height: 1 on the bottom class, doubled by each operation, additive on
// products.  The James-Hopf projections filter by it.
inline long long word_height(const Word& w) { return 1ll << w.q.size(); }

inline long long product_height(const Product& p) {
    long long h = 0;
    for (const Word& w : p) h += word_height(w);
    return h;
}

// ---- element arithmetic ---------------------------------------------------

// Canonical form: sort the terms and drop pairs (coefficients live in F2).
inline Element make_element(std::vector<Product> terms) {
    for (Product& p : terms) std::sort(p.begin(), p.end());
    std::sort(terms.begin(), terms.end());
    std::vector<Product> out;
    for (std::size_t k = 0; k < terms.size();) {
        std::size_t run = k + 1;
        while (run < terms.size() && terms[run] == terms[k]) ++run;
        if ((run - k) % 2) out.push_back(std::move(terms[k]));
        k = run;
    }
    return Element{std::move(out)};
}

inline Element operator+(const Element& a, const Element& b) {
    std::vector<Product> merged;
    merged.reserve(a.terms.size() + b.terms.size());
    std::set_symmetric_difference(a.terms.begin(), a.terms.end(), b.terms.begin(),
                                  b.terms.end(), std::back_inserter(merged));
    return Element{std::move(merged)};
}

inline Element& operator+=(Element& a, const Element& b) {
    a = a + b;
    return a;
}

// Product of two elements (distribute, merge factor lists, cancel pairs).
inline Element operator*(const Element& a, const Element& b) {
    std::vector<Product> terms;
    terms.reserve(a.terms.size() * b.terms.size());
    for (const Product& pa : a.terms)
        for (const Product& pb : b.terms) {
            Product p;
            p.reserve(pa.size() + pb.size());
            std::merge(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(p));
            terms.push_back(std::move(p));
        }
    return make_element(std::move(terms));
}

inline bool element_homogeneous(const Element& e, long long n, long long* dim_out = nullptr) {
    if (e.is_zero()) {
        if (dim_out) *dim_out = -1;
        return true;
    }
    const long long d = product_dim(e.terms.front(), n);
    for (const Product& p : e.terms)
        if (product_dim(p, n) != d) return false;
    if (dim_out) *dim_out = d;
    return true;
}

// ---- printing --------------------------------------------------------------

inline std::string word_str(const Word& w, long long n) {
    std::string s;
    for (int a : w.q) {
        s += "Q^";
        s += std::to_string(a);
        s += ' ';
    }
    s += "x_";
    s += std::to_string(n);
    return s;
}

inline std::string product_str(const Product& p, long long n) {
    if (p.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < p.size();) {
        std::size_t run = k + 1;
        while (run < p.size() && p[run] == p[k]) ++run;
        if (!s.empty()) s += ' ';
        const std::size_t mult = run - k;
        if (mult == 1) {
            s += word_str(p[k], n);
        } else {
            s += '(';
            s += word_str(p[k], n);
            s += ")^";
            s += std::to_string(mult);
        }
        k = run;
    }
    return s;
}

inline std::string element_str(const Element& e, long long n) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const Product& p : e.terms) {
        if (!s.empty()) s += " + ";
        s += product_str(p, n);
    }
    return s;
}

}  // namespace qloop
