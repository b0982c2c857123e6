#include "qloop/cone.hpp"

#include <algorithm>

#include "qloop/fp2.hpp"

namespace qloop {

namespace {

std::string route_str(const std::vector<int>& route) {
    std::string out = "(";
    for (std::size_t k = 0; k < route.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(route[k]);
    }
    out += ")";
    return out;
}

SqWord reversed_word(const std::vector<int>& route) {
    SqWord w;
    w.s.assign(route.rbegin(), route.rend());
    return w;
}

}  // namespace

std::string cone_verdict_str(ConeVerdict v) {
    switch (v) {
        case ConeVerdict::kImpossible: return "IMPOSSIBLE";
        case ConeVerdict::kPossible: return "POSSIBLE";
        case ConeVerdict::kNeedsExternal: return "NEEDS-EXTERNAL";
    }
    return "?";
}

RouteEval eval_route(const ConeProblem& p, const std::vector<int>& route) {
    RouteEval ev;
    ev.route = route;
    long long cur = p.detect_dim;
    for (int r : route) {
        RouteStep step;
        step.r = r;
        step.from = cur;
        const long long target = cur + r;
        if (target == p.cone_dim) {
            // Lands on the cone cell: value unknown, never a proof of zero.
            step.odd = !p.sphere && binom2(cur - p.base.s, r);
            step.in_range = true;
            ev.steps.push_back(step);
            ev.landing = target;
            return ev;
        }
        if (p.sphere) {
            // Single-cell base: every intermediate dimension is empty.
            step.odd = false;
            step.in_range = false;
        } else {
            step.in_range = target <= p.base.top_dim();
            step.odd = step.in_range && binom2(cur - p.base.s, r);
        }
        ev.steps.push_back(step);
        if (!step.odd || !step.in_range) {
            ev.dead = true;
            return ev;
        }
        cur = target;
    }
    ev.landing = cur;
    return ev;
}

namespace {

// Enumerates the power-of-two route tree from the detect class: minimal dead
// prefixes (every extension of one is provably zero) and full words whose
// proper steps all survive (their value on the cone is unknown).
void enumerate_routes(const ConeProblem& p, std::vector<std::vector<int>>& min_dead,
                      std::vector<std::vector<int>>& alive_words) {
    const long long m = p.detect_dim;
    struct Node {
        std::vector<int> prefix;
        long long deg;
    };
    std::vector<Node> stack{{{}, 0}};
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        const long long cur = p.detect_dim + node.deg;
        for (long long r = 1; r <= m - node.deg; r *= 2) {
            std::vector<int> extended = node.prefix;
            extended.push_back(static_cast<int>(r));
            if (node.deg + r == m) {
                alive_words.push_back(std::move(extended));
                continue;
            }
            const long long target = cur + r;  // strictly below cone_dim here
            const bool alive =
                !p.sphere && target <= p.base.top_dim() && binom2(cur - p.base.s, r);
            if (alive)
                stack.push_back(Node{std::move(extended), node.deg + r});
            else
                min_dead.push_back(std::move(extended));
        }
    }
    std::sort(min_dead.begin(), min_dead.end());
    std::sort(alive_words.begin(), alive_words.end());
}

}  // namespace

ConeVerdict cone_detection_possible(const ConeProblem& p, SqAdem& adem, ConeTrace* trace) {
    const long long m = p.detect_dim;
    ConeTrace local;
    ConeTrace& t = trace ? *trace : local;
    t.problem = p;

    if (p.sphere) {
        t.branch = "sphere";
        const bool hopf =
            std::find(p.hopf_dims.begin(), p.hopf_dims.end(), m) != p.hopf_dims.end();
        t.detail = hopf ? "Sq^" + std::to_string(m) + " can have Hopf invariant one"
                        : "Sq^" + std::to_string(m) +
                              " on a sphere requires a Hopf invariant one dimension";
        return hopf ? ConeVerdict::kPossible : ConeVerdict::kImpossible;
    }

    if (is_pow2(m)) {
        t.branch = "pow2";
        t.detail = "Sq^" + std::to_string(m) + " is indecomposable; cone action unknown";
        return ConeVerdict::kNeedsExternal;
    }

    // Lemma route: Sq^{4k+2} = Sq^2 Sq^{4k} + Sq^1 Sq^{4k} Sq^1.  When both
    // composition routes die in the base, Sq^m annihilates the detect class.
    if (m % 4 == 2 && m > 2) {
        t.main1_applicable = true;
        t.main1_routes.push_back(eval_route(p, {static_cast<int>(m - 2), 2}));
        t.main1_routes.push_back(eval_route(p, {1, static_cast<int>(m - 2), 1}));
        if (t.main1_routes[0].dead && t.main1_routes[1].dead) {
            t.main1_route_elimination = true;
            t.branch = "main1";
            t.detail = "both routes of Sq^2 Sq^" + std::to_string(m - 2) + " + Sq^1 Sq^" +
                       std::to_string(m - 2) + " Sq^1 die in the base";
            return ConeVerdict::kImpossible;
        }
    }

    enumerate_routes(p, t.min_dead, t.alive_words);

    if (t.alive_words.empty()) {
        // Every monomial in the generators Sq^{2^k} dies on the way up; such
        // monomials span the whole degree-m part of the algebra, Sq^m included.
        t.branch = "exhaustive";
        t.detail = "all power-of-two composition routes die before the cone cell";
        return ConeVerdict::kImpossible;
    }

    // Span certificate: collect nf(M o reverse(S)) for every dead prefix S and
    // every admissible monomial M of the complementary degree, then test
    // whether Sq^m itself is a sum of such provably-zero compositions.
    t.branch = "span";
    SqSpan span(m);
    std::vector<CertificateRow> generators;
    for (const std::vector<int>& dead : t.min_dead) {
        long long deg = 0;
        for (int r : dead) deg += r;
        const SqWord tail = reversed_word(dead);
        for (const SqWord& left : sq_admissible_basis(m - deg)) {
            CertificateRow row;
            row.left = left;
            row.dead_route = dead;
            row.normal_form = adem.compose(left, tail);
            generators.push_back(row);
            span.add(row.normal_form);
        }
    }
    SqWord sq_m;
    sq_m.s.push_back(static_cast<int>(m));
    std::vector<std::size_t> combination;
    if (span.contains(SqElem::single(sq_m), &combination)) {
        t.certificate_found = true;
        for (std::size_t idx : combination) t.certificate.push_back(generators[idx]);
        std::string cert = "Sq^" + std::to_string(m) + " =";
        for (std::size_t k = 0; k < t.certificate.size(); ++k) {
            cert += k ? " + nf(" : " nf(";
            cert += sq_word_str(t.certificate[k].left) + " o rev" +
                    route_str(t.certificate[k].dead_route) + ")";
        }
        t.detail = cert;
        return ConeVerdict::kImpossible;
    }
    t.detail = "surviving route " + route_str(t.alive_words.front());
    return ConeVerdict::kPossible;
}

}  // namespace qloop
