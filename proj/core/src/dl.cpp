#include "qloop/dl.hpp"

#include "qloop/fp2.hpp"

namespace qloop {

Element DlEngine::q(long long a, const Element& e) {
    Element out;
    for (const Product& p : e.terms) out += q_product(a, p);
    return out;
}

Element DlEngine::q_word(long long a, const Word& w) {
    const long long d = word_dim(w, n_);
    if (a < d) return Element::zero();
    if (a == d) return Element::single({w, w});
    const auto key = std::make_pair(a, w);
    if (auto it = word_memo_.find(key); it != word_memo_.end()) return it->second;

    Element out;
    if (w.empty() || a <= 2 * w.q.front()) {
        // Prepending keeps the word admissible (for the empty word a > n
        // already makes Q^a x_n a generator of excess a - n > 0 ... the
        // excess-versus-n comparison is the caller's concern).
        Word longer;
        longer.q.reserve(w.q.size() + 1);
        longer.q.push_back(static_cast<int>(a));
        longer.q.insert(longer.q.end(), w.q.begin(), w.q.end());
        out = Element::single({std::move(longer)});
    } else {
        // Adem: Q^a Q^s = sum_i binom(i-s-1, 2i-a) Q^{a+s-i} Q^i, with the
        // inner exponent i running over [ceil(a/2), a-s-1].
        const long long s = w.q.front();
        Word tail;
        tail.q.assign(w.q.begin() + 1, w.q.end());
        for (long long i = (a + 1) / 2; i <= a - s - 1; ++i) {
            if (!binom2(i - s - 1, 2 * i - a)) continue;
            out += q(a + s - i, q_word(i, tail));
        }
    }
    word_memo_.emplace(key, out);
    return out;
}

Element DlEngine::q_product(long long a, const Product& p) {
    if (p.empty()) return a == 0 ? Element::single({}) : Element::zero();
    if (p.size() == 1) return q_word(a, p.front());
    const long long d = product_dim(p, n_);
    if (a < d) return Element::zero();
    if (a == d) {
        Product sq;
        sq.reserve(2 * p.size());
        std::merge(p.begin(), p.end(), p.begin(), p.end(), std::back_inserter(sq));
        return Element::single(std::move(sq));
    }
    const auto key = std::make_pair(a, p);
    if (auto it = prod_memo_.find(key); it != prod_memo_.end()) return it->second;

    // Cartan: Q^a(uv) = sum_{b+c=a} Q^b(u) Q^c(v).
    const Word first = p.front();
    Product rest(p.begin() + 1, p.end());
    const long long d_first = word_dim(first, n_);
    const long long d_rest = d - d_first;
    Element out;
    for (long long b = d_first; b <= a - d_rest; ++b) {
        const Element left = q_word(b, first);
        if (left.is_zero()) continue;
        const Element right = q_product(a - b, rest);
        if (right.is_zero()) continue;
        out += left * right;
    }
    prod_memo_.emplace(key, out);
    return out;
}

Element DlEngine::word_normal_form(const std::vector<int>& upper) {
    Element e = Element::single({Word{}});
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) e = q(*it, e);
    return e;
}

}  // namespace qloop
