#include "qloop/nishida.hpp"

#include <stdexcept>

#include "qloop/fp2.hpp"

namespace qloop {

Element SqDual::apply(long long r, const Element& e) {
    if (r == 0) return e;
    Element out;
    for (const Product& p : e.terms) out += apply_product(r, p);
    return out;
}

Element SqDual::apply_word(long long r, const Word& w) {
    if (r == 0) return Element::single({w});
    if (w.empty()) return Element::zero();  // Sq^r_* x_n = 0 for r > 0
    const auto key = std::make_pair(r, w);
    if (auto it = word_memo_.find(key); it != word_memo_.end()) return it->second;

    // Sq^r_*(Q^a w') = sum_t binom(a-r, r-2t) Q^{a-r+t} Sq^t_* w'.
    const long long a = w.q.front();
    Word tail;
    tail.q.assign(w.q.begin() + 1, w.q.end());
    const long long tail_dim = word_dim(tail, dl_.n());
    Element out;
    for (long long t = 0; 2 * t <= r; ++t) {
        if (!binom2(a - r, r - 2 * t)) continue;
        // Instability: Q^b vanishes on classes of dimension > b, so terms
        // with a-r+t below dim(Sq^t_* tail) = tail_dim - t contribute nothing.
        if (a - r + t < tail_dim - t) continue;
        out += dl_.q(a - r + t, apply_word(t, tail));
    }
    word_memo_.emplace(key, out);
    return out;
}

Element SqDual::apply_product(long long r, const Product& p) {
    if (p.empty()) return r == 0 ? Element::single({}) : Element::zero();
    if (p.size() == 1) return apply_word(r, p.front());
    const auto key = std::make_pair(r, p);
    if (auto it = prod_memo_.find(key); it != prod_memo_.end()) return it->second;

    // Cartan: Sq^r_*(uv) = sum_{i+j=r} Sq^i_* u . Sq^j_* v; iterating over
    // ordered splits makes the repeated-factor cancellations automatic.
    const Word first = p.front();
    Product rest(p.begin() + 1, p.end());
    Element out;
    for (long long i = 0; i <= r; ++i) {
        const Element left = apply_word(i, first);
        if (left.is_zero()) continue;
        const Element right = apply_product(r - i, rest);
        if (right.is_zero()) continue;
        out += left * right;
    }
    prod_memo_.emplace(key, out);
    return out;
}

bool SqDual::is_A_annihilated(const Element& e, AnnihilationWitness* witness) {
    long long dim = 0;
    if (!element_homogeneous(e, dl_.n(), &dim))
        throw std::invalid_argument("is_A_annihilated: non-homogeneous element");
    for (long long r = 1; r <= dim; r *= 2) {
        Element image = apply(r, e);
        if (!image.is_zero()) {
            if (witness) {
                witness->sq = r;
                witness->image = std::move(image);
            }
            return false;
        }
    }
    if (witness) {
        witness->sq = 0;
        witness->image = Element::zero();
    }
    return true;
}

}  // namespace qloop
