// Table emitters.  Row structure (which families exist, their printed
// values, the printed elimination column) is frozen input data; every
// numeric column is recomputed exactly -- linear forms are fitted from sweep
// points and verified across the sweep, witnesses come from the Nishida
// engine -- and any disagreement with a printed value becomes a footnote,
// never a silent correction.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qloop/eliminate.hpp"

namespace qloop {

enum class TableKind { kLemma81, kDegenerate43, kMod4_44, kNondegenerate45 };
enum class TableFormat { kText, kCsv, kJson, kLatex };

TableKind parse_table_kind(const std::string& name);        // lemma81 | degenerate43 | mod4-44 | nondegenerate45
TableFormat parse_table_format(const std::string& name);    // text | csv | json | latex
std::string table_kind_str(TableKind kind);

// c0 + cj*j + cn*n, printed in that order ("1+2j+4n", "j+n", "769+128n").
struct LinearForm {
    long long c0 = 0, cj = 0, cn = 0;
    long long eval(long long j, long long n) const { return c0 + cj * j + cn * n; }
    bool operator==(const LinearForm&) const = default;
};

std::string linear_str(const LinearForm& f);

// How the elimination column of the family table is meant to be read.
enum class ElimRule {
    kNone,       // empty J: no elimination stated
    kSingleton,  // (j): dim even, else Sq^1 when j+n is even
    kNEven,      // Sq^{2^{s-1}} fires when n is even
    kNOdd,       // Sq^{2^{s-1}} fires when n is odd
};

struct Family {
    std::string label;          // "(1,j)", "(1,2,3,4)", ...
    std::vector<int> pattern;   // lower word; -1 marks the symbolic slot
    std::vector<int> j_values;  // values the slot ranges over; empty when no slot
    int length = 0;

    // Exact fitted forms, verified across the sweep.
    LinearForm dim;
    std::vector<LinearForm> upper;
    LinearForm printed_dim;
    std::vector<LinearForm> printed_upper;

    long long elim_sq = 0;  // 0 when no Sq stated
    ElimRule elim_rule = ElimRule::kNone;
    std::string elim_text;  // the printed column

    // Gap-table data, meaningful for length >= 2 (l = 8 throughout).
    LinearForm top;
    LinearForm margin;          // exact 2d+1-top
    LinearForm printed_margin;
    bool two_mod_four = false;  // d+1 = 2 mod 4 (uniform over the slot)
    std::string pow2_cases;     // exact solutions of d+1 = 2^t
    std::string printed_pow2_cases;
};

// The family rows of the classification table at l = 8 (candidate sequences
// grouped with one symbolic slot), exact columns computed and cached on
// first use.  Throws if a fitted form fails verification.
const std::vector<Family>& lemma81_families();

struct TableDocument {
    std::string kind;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;  // every entry records a discrepancy vs printed values

    bool operator==(const TableDocument&) const = default;
};

TableDocument emit_table(TableKind kind);

// Verdict report rendered through the same document machinery.
TableDocument report_table(const EliminationReport& rep);

std::string render_table(const TableDocument& doc, TableFormat format);
nlohmann::ordered_json table_to_json(const TableDocument& doc);
TableDocument table_from_json(const nlohmann::ordered_json& doc);

}  // namespace qloop
