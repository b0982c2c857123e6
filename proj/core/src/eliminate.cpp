#include "qloop/eliminate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qloop/dl.hpp"
#include "qloop/fp2.hpp"

namespace qloop {

std::string status_str(Status s) {
    switch (s) {
        case Status::kSurvivorBottomCell: return "SURVIVOR-BOTTOM-CELL";
        case Status::kSurvivorHopf: return "SURVIVOR-HOPF";
        case Status::kEliminated: return "ELIMINATED";
        case Status::kExternal: return "EXTERNAL";
        case Status::kUnresolved: return "UNRESOLVED";
    }
    return "?";
}

long long EliminationReport::count(Status s) const {
    long long c = 0;
    for (const auto& row : rows) c += (row.verdict.status == s ? 1 : 0);
    return c;
}

namespace {

const ExternalFact* find_hopf_fact(const FactsTable& facts) {
    for (const auto& f : facts.facts)
        if (f.kind == "hopf-invariant-one-dims") return &f;
    return nullptr;
}

// J = (): x_n^2 is spherical exactly when a Hopf invariant one class exists
// in pi_{2n+1} S^{n+1}.
Verdict square_of_bottom(long long n, const FactsTable& facts) {
    Verdict v;
    v.pass = "P0";
    if (const ExternalFact* f = find_hopf_fact(facts)) v.fact_id = f->id;
    auto dims = facts.hopf_dims();
    std::ostringstream os;
    if (std::find(dims.begin(), dims.end(), n + 1) != dims.end()) {
        v.status = Status::kSurvivorHopf;
        os << "x_" << n << "^2 is spherical: Sq^" << (n + 1)
           << " acts on a two-cell complex (Hopf invariant one in dimension " << (n + 1) << ")";
    } else {
        v.status = Status::kEliminated;
        os << "x_" << n << "^2 spherical would force Hopf invariant one in dimension "
           << (n + 1) << ", which exists only in dimensions 1, 2, 4, 8";
    }
    v.reason = os.str();
    return v;
}

}  // namespace

Verdict eliminate_one(const Candidate& c, int l, long long n, const FactsTable& facts,
                      SqDual& sq, SqAdem& adem) {
    if (n < 1) throw std::invalid_argument("eliminate_one: n must be positive");
    if (sq.n() != n) throw std::invalid_argument("eliminate_one: engine bound to a different n");
    if (c.J.empty()) return square_of_bottom(n, facts);
    for (int j : c.J)
        if (j <= 0 || j >= l) throw std::invalid_argument("eliminate_one: word entry outside (0, l)");

    const long long d = dim_lower(c.J, n);
    Verdict v;

    // P1: a spherical square lives in dimension 2d with d odd; even d is
    // already impossible (the candidate filter makes this unreachable for
    // enumerated words, but arbitrary words are accepted here).
    if (d % 2 == 0) {
        v.status = Status::kEliminated;
        v.pass = "P1";
        std::ostringstream os;
        os << "dim Q_J x_" << n << " = " << d << " is even";
        v.reason = os.str();
        return v;
    }

    // P2: a spherical class is annihilated by every Sq^r_*, r > 0; by the
    // Cartan rule Sq^{2r}_* (xi^2) = (Sq^r_* xi)^2, so a nonzero Sq^r_* on
    // the word itself transfers to the square.
    Element xi = Element::single(Product{Word{lower_to_upper(c.J, n)}});
    AnnihilationWitness wit;
    if (!sq.is_A_annihilated(xi, &wit)) {
        v.status = Status::kEliminated;
        v.pass = "P2";
        v.sq_witness = wit;
        std::ostringstream os;
        os << "Sq^" << wit.sq << "_* Q_J x_" << n << " = " << element_str(wit.image, n)
           << " != 0, hence Sq^" << (2 * wit.sq) << "_* of the square is its square and nonzero";
        v.reason = os.str();
        return v;
    }

    if (c.J.size() >= 2) {
        // P3: the dimension-gap argument for longer words.
        GapReport g = gap_report(c.J, l, n);
        if (g.eliminated_by_gap) {
            v.status = Status::kEliminated;
            v.pass = "P3";
            v.gap = g;
            std::ostringstream os;
            os << "gap: 2d+1 - top = " << (2 * g.d + 1) << " - " << g.top << " = " << g.margin
               << " > 2 with d+1 = " << (g.d + 1) << " = 2 mod 4 and not a power of two";
            v.reason = os.str();
            return v;
        }
    } else {
        // P4: the cone detection question over the quadratic construction on
        // S^{n+1}, for single operations Q_j x_n.
        const int j = c.J.front();
        ConeProblem prob;
        prob.base = d2_stunted(n + 1, l - 1);
        prob.sphere = (j == l - 1);
        prob.detect_dim = d + 1;
        prob.cone_dim = 2 * d + 2;
        prob.hopf_dims = facts.hopf_dims();
        ConeTrace trace;
        ConeVerdict cv = cone_detection_possible(prob, adem, &trace);
        v.cone = trace;
        if (cv == ConeVerdict::kImpossible) {
            v.status = Status::kEliminated;
            v.pass = "P4";
            std::ostringstream os;
            os << "cone detection impossible (" << trace.branch << "): " << trace.detail;
            v.reason = os.str();
            return v;
        }
    }

    // P5: stems with externally known trivial mod-2 Hurewicz image.
    const long long stem = 2 * d - n;
    if (const ExternalFact* f = facts.find_trivial_stem(stem)) {
        v.status = Status::kExternal;
        v.pass = "P5";
        v.fact_id = f->id;
        std::ostringstream os;
        os << "square in dimension " << (2 * d) << " lies in the " << stem << "-stem of S^"
           << (n + l) << "; " << f->id << " rules out a spherical image";
        v.reason = os.str();
        return v;
    }

    v.status = Status::kUnresolved;
    v.pass = "-";
    std::ostringstream os;
    os << "survived P0-P5 (square dimension " << (2 * d) << ", " << stem << "-stem)";
    if (v.cone && v.cone->branch == "pow2")
        os << "; cone question blocked on indecomposable Sq^" << (d + 1);
    v.reason = os.str();
    return v;
}

EliminationReport run_elimination(int l, long long n_from, long long n_to,
                                  const FactsTable& facts) {
    if (n_from < 1 || n_to < n_from)
        throw std::invalid_argument("run_elimination: need 1 <= n_from <= n_to");
    EliminationReport rep;
    rep.l = l;
    rep.n_from = n_from;
    rep.n_to = n_to;

    const std::vector<Candidate> cands = enumerate_candidates(l);
    std::vector<std::vector<ReportRow>> per_candidate(cands.size());

    SqAdem adem;
    for (long long n = n_from; n <= n_to; ++n) {
        DlEngine dl(n);
        SqDual sq(dl);
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const Candidate& c = cands[ci];
            if (c.J.empty()) {
                ReportRow bottom;
                bottom.candidate = c;
                bottom.n = n;
                bottom.squared = false;
                bottom.dim = n;
                bottom.verdict.status = Status::kSurvivorBottomCell;
                bottom.verdict.pass = "P0";
                bottom.verdict.reason =
                    "x_" + std::to_string(n) + " is the Hurewicz image of the looped identity map";
                per_candidate[ci].push_back(std::move(bottom));
            }
            ReportRow row;
            row.candidate = c;
            row.n = n;
            row.squared = true;
            row.dim = 2 * (c.J.empty() ? n : dim_lower(c.J, n));
            row.verdict = eliminate_one(c, l, n, facts, sq, adem);
            per_candidate[ci].push_back(std::move(row));
        }
    }
    for (auto& rows : per_candidate)
        for (auto& row : rows) rep.rows.push_back(std::move(row));
    return rep;
}

}  // namespace qloop
