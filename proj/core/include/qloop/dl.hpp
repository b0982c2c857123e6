// Dyer-Lashof operations on H_*(QS^n; F2) = polynomial algebra on admissible
// words of excess > n over the bottom class x_n.
//
// The engine normalizes arbitrary applications Q^a(-) into the admissible
// basis: instability (Q^a z = 0 for a < dim z, = z^2 for a = dim z), the Adem
// relations for inadmissible pairs, and the Cartan formula on products.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qloop/algebra.hpp"

namespace qloop {

class DlEngine {
  public:
    explicit DlEngine(long long n) : n_(n) {}

    long long n() const { return n_; }

    // Q^a applied to a normalized element.
    Element q(long long a, const Element& e);

    // Q^a applied to a single admissible generator word.
    Element q_word(long long a, const Word& w);

    // Q^a applied to a monomial (Cartan formula).
    Element q_product(long long a, const Product& p);

    // Normal form of Q^{i_1} ... Q^{i_s} x_n for an arbitrary upper-index
    // sequence, applying operations innermost first.
    Element word_normal_form(const std::vector<int>& upper);

  private:
    long long n_;
    std::map<std::pair<long long, Word>, Element> word_memo_;
    std::map<std::pair<long long, Product>, Element> prod_memo_;
};

}  // namespace qloop
