#include "qloop/expr.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "qloop/dl.hpp"

namespace qloop {
namespace {

Element square_element(const Element& e) {
    std::vector<Product> squares;
    squares.reserve(e.terms.size());
    for (const Product& p : e.terms) {
        Product doubled;
        doubled.reserve(p.size() * 2);
        for (const Word& w : p) {
            doubled.push_back(w);
            doubled.push_back(w);
        }
        squares.push_back(std::move(doubled));
    }
    return make_element(std::move(squares));
}

struct Parser {
    const std::string& s;
    std::size_t i = 0;
    long long n = -1;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("class expression, offset " + std::to_string(i) + ": " + what);
    }

    long long number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a number");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000000) fail("number out of range");
            ++i;
        }
        return v;
    }

    // factor := ('Q^' num)* 'x_' num  |  '(' expr ')^2'
    Element factor() {
        skip_ws();
        if (i < s.size() && s[i] == '(') {
            ++i;
            Element inner = expr();
            if (!eat(')')) fail("expected ')'");
            if (!eat('^')) fail("expected '^2' after ')'");
            if (number() != 2) fail("only squares '(...)^2' are supported");
            return square_element(inner);
        }
        std::vector<int> upper;
        while (i < s.size() && s[i] == 'Q') {
            ++i;
            if (!eat('^')) fail("expected '^' after 'Q'");
            upper.push_back(static_cast<int>(number()));
            skip_ws();
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            if (!eat('_')) fail("expected '_' after 'x'");
            long long sub = number();
            if (sub < 1) fail("the subscript of x must be at least 1");
            if (n == -1) n = sub;
            else if (n != sub)
                fail("mixed subscripts x_" + std::to_string(n) + " and x_" + std::to_string(sub));
            return DlEngine(n).word_normal_form(upper);
        }
        fail(upper.empty() ? "expected 'Q^', 'x_' or '('" : "expected 'x_' to close the Q word");
    }

    // term := factor factor*   (juxtaposition is the Pontryagin product)
    Element term() {
        Element out = factor();
        for (;;) {
            skip_ws();
            if (i < s.size() && (s[i] == 'Q' || s[i] == 'x' || s[i] == '(')) {
                out = out * factor();
                continue;
            }
            return out;
        }
    }

    Element expr() {
        Element out = term();
        while (eat('+')) out += term();
        return out;
    }
};

}  // namespace

ParsedClass parse_class(const std::string& text) {
    Parser p(text);
    Element e = p.expr();
    p.skip_ws();
    if (p.i != text.size()) p.fail("unexpected trailing input");
    if (p.n == -1) p.fail("the expression names no x_n");
    return ParsedClass{p.n, std::move(e)};
}

}  // namespace qloop
