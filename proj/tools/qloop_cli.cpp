// Command-line front end: basis enumeration, dual Steenrod action,
// A-annihilation checks, suspension, candidate enumeration, the elimination
// pipeline, and the table emitters.
//
// Exit codes: 0 clean; 1 usage or input error; 2 a run left UNRESOLVED
// candidates; 3 an emitted table carries discrepancy footnotes (demoted to a
// warning by --warn-discrepancies).  2 wins over 3 when both apply.
#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "qloop/candidates.hpp"
#include "qloop/eliminate.hpp"
#include "qloop/expr.hpp"
#include "qloop/facts.hpp"
#include "qloop/loopspace.hpp"
#include "qloop/nishida.hpp"
#include "qloop/tables.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUnresolved = 2;
constexpr int kExitDiscrepancies = 3;

int finish_tables(const qloop::TableDocument& doc, const std::string& format,
                  bool warn_only) {
    std::fputs(qloop::render_table(doc, qloop::parse_table_format(format)).c_str(), stdout);
    if (doc.footnotes.empty()) return 0;
    if (warn_only) {
        std::fprintf(stderr, "warning: %zu discrepancy footnote(s) vs printed values\n",
                     doc.footnotes.size());
        return 0;
    }
    return kExitDiscrepancies;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 symbolic algebra for the homology of iterated loop spaces of spheres"};
    app.require_subcommand(1);
    bool warn_only = false;
    app.add_flag("--warn-discrepancies", warn_only,
                 "report table footnotes as warnings instead of exit code 3");

    // basis
    auto* basis = app.add_subcommand("basis", "monomial basis of H_* Omega^l S^{n+l}");
    int basis_l = 8;
    long long basis_n = 1, basis_max_dim = 0;
    basis->add_option("--l", basis_l, "loop bound l (or -1 for the stable range)")->required();
    basis->add_option("--n", basis_n, "bottom dimension n")->required();
    basis->add_option("--max-dim", basis_max_dim, "largest dimension listed")->required();

    // sq
    auto* sq = app.add_subcommand("sq", "dual Steenrod action Sq^r_* on a class");
    long long sq_r = 0;
    std::string sq_class;
    sq->add_option("--r", sq_r, "exponent r of Sq^r_*")->required();
    sq->add_option("--class", sq_class, "class expression, e.g. \"Q^7 Q^5 x_1\"")->required();

    // annihilated
    auto* ann = app.add_subcommand("annihilated",
                                   "test whether the positive-degree Steenrod action kills a class");
    std::string ann_class;
    ann->add_option("--class", ann_class, "class expression")->required();

    // suspend
    auto* susp = app.add_subcommand("suspend", "homology suspension of a class");
    std::string susp_class;
    int susp_steps = -1;
    susp->add_option("--class", susp_class, "class expression")->required();
    susp->add_option("--steps", susp_steps,
                     "suspend this many times (default: largest nonzero suspension)");

    // candidates
    auto* cand = app.add_subcommand("candidates", "candidate sequences at a loop bound");
    int cand_l = 8;
    cand->add_option("--l", cand_l, "loop bound l (4..9)")->required();

    // eliminate
    auto* elim = app.add_subcommand("eliminate", "run the elimination pipeline");
    int elim_l = 8;
    long long elim_from = 1, elim_to = 32;
    std::string elim_facts, elim_format = "text";
    elim->add_option("--l", elim_l, "loop bound l (4..9)")->required();
    elim->add_option("--n-from", elim_from, "first n of the sweep (default 1)");
    elim->add_option("--n-to", elim_to, "last n of the sweep (default 32)");
    elim->add_option("--facts", elim_facts, "external facts JSON file (default: built-in)");
    elim->add_option("--format", elim_format, "text | csv | json | latex");

    // table
    auto* table = app.add_subcommand("table", "emit a classification table");
    std::string table_kind, table_format = "text";
    table->add_option("--kind", table_kind, "lemma81 | degenerate43 | mod4-44 | nondegenerate45")
        ->required();
    table->add_option("--format", table_format, "text | csv | json | latex");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*basis) {
            for (const qloop::Product& p : qloop::enumerate_basis(basis_l, basis_n, basis_max_dim))
                std::printf("%lld\t%s\n", qloop::product_dim(p, basis_n),
                            qloop::product_str(p, basis_n).c_str());
            return 0;
        }
        if (*sq) {
            const qloop::ParsedClass pc = qloop::parse_class(sq_class);
            qloop::DlEngine dl(pc.n);
            qloop::SqDual dual(dl);
            const qloop::Element img = dual.apply(sq_r, pc.element);
            std::printf("%s\n", qloop::element_str(img, pc.n).c_str());
            return 0;
        }
        if (*ann) {
            const qloop::ParsedClass pc = qloop::parse_class(ann_class);
            qloop::DlEngine dl(pc.n);
            qloop::SqDual dual(dl);
            qloop::AnnihilationWitness wit;
            if (dual.is_A_annihilated(pc.element, &wit)) {
                std::printf("A-annihilated\n");
            } else {
                std::printf("not annihilated: Sq^%lld_* -> %s\n", wit.sq,
                            qloop::element_str(wit.image, pc.n).c_str());
            }
            return 0;
        }
        if (*susp) {
            const qloop::ParsedClass pc = qloop::parse_class(susp_class);
            if (susp_steps >= 0) {
                const qloop::Element img = qloop::suspend(pc.element, pc.n, susp_steps);
                std::printf("%s\n", qloop::element_str(img, pc.n + susp_steps).c_str());
                return 0;
            }
            const qloop::SuspensionReport rep = qloop::max_suspension(pc.element, pc.n);
            if (rep.stable)
                std::printf("stable: an x_%lld summand survives every suspension\n", pc.n);
            else
                std::printf("dies after %d suspension(s); last nonzero image: %s\n", rep.steps,
                            qloop::element_str(rep.image, pc.n + rep.steps).c_str());
            return 0;
        }
        if (*cand) {
            const std::vector<qloop::Candidate> cs = qloop::enumerate_candidates(cand_l);
            for (const qloop::Candidate& c : cs)
                std::printf("%s%s\n", qloop::candidate_str(c).c_str(),
                            c.extra ? " EXTRA" : "");
            return 0;
        }
        if (*elim) {
            const qloop::FactsTable facts =
                elim_facts.empty() ? qloop::default_facts() : qloop::load_facts(elim_facts);
            const qloop::EliminationReport rep =
                qloop::run_elimination(elim_l, elim_from, elim_to, facts);
            const qloop::TableDocument doc = qloop::report_table(rep);
            std::fputs(qloop::render_table(doc, qloop::parse_table_format(elim_format)).c_str(),
                       stdout);
            const long long unresolved = rep.count(qloop::Status::kUnresolved);
            if (unresolved > 0) {
                std::fprintf(stderr, "%lld candidate(s) UNRESOLVED\n", unresolved);
                return kExitUnresolved;
            }
            return 0;
        }
        if (*table)
            return finish_tables(qloop::emit_table(qloop::parse_table_kind(table_kind)),
                                 table_format, warn_only);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitError;
    }
    return 0;
}
