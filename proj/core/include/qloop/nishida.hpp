// Dual Steenrod action on Dyer-Lashof monomials via the Nishida relations,
// and the A-annihilation test with witnesses.
#pragma once

#include <map>
#include <utility>

#include "qloop/algebra.hpp"
#include "qloop/dl.hpp"

namespace qloop {

struct AnnihilationWitness {
    long long sq = 0;  // least failing generator exponent 2^k; 0 when annihilated
    Element image;     // its nonzero image
};

class SqDual {
  public:
    explicit SqDual(DlEngine& dl) : dl_(dl) {}

    long long n() const { return dl_.n(); }

    // Sq^r_* on a normalized element.
    Element apply(long long r, const Element& e);
    Element apply_word(long long r, const Word& w);
    Element apply_product(long long r, const Product& p);

    // True iff Sq^{2^k}_* e = 0 for all 2^k <= dim e (the Sq^{2^k} generate,
    // and duals compose contravariantly, so this decides annihilation by the
    // whole positive-degree part of the algebra).  On failure the witness
    // holds the least failing exponent and its image.  Input must be
    // homogeneous.
    bool is_A_annihilated(const Element& e, AnnihilationWitness* witness = nullptr);

  private:
    DlEngine& dl_;
    std::map<std::pair<long long, Word>, Element> word_memo_;
    std::map<std::pair<long long, Product>, Element> prod_memo_;
};

}  // namespace qloop
