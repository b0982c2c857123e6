// Text form of classes: "Q^a Q^b ... x_n" words, "(EXPR)^2" squares, sums
// with '+', products by juxtaposition; whitespace never matters.  Words are
// renormalized into the admissible basis, so inadmissible or excess-zero
// strings parse to their actual value (possibly 0).
#pragma once

#include <string>

#include "qloop/algebra.hpp"

namespace qloop {

struct ParsedClass {
    long long n = 0;  // the common subscript of every x in the expression
    Element element;
};

ParsedClass parse_class(const std::string& text);

}  // namespace qloop
