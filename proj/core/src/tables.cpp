#include "qloop/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qloop/dl.hpp"
#include "qloop/fp2.hpp"
#include "qloop/loopspace.hpp"
#include "qloop/nishida.hpp"

namespace qloop {

TableKind parse_table_kind(const std::string& name) {
    if (name == "lemma81") return TableKind::kLemma81;
    if (name == "degenerate43") return TableKind::kDegenerate43;
    if (name == "mod4-44") return TableKind::kMod4_44;
    if (name == "nondegenerate45") return TableKind::kNondegenerate45;
    throw std::invalid_argument("unknown table kind: " + name);
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "text") return TableFormat::kText;
    if (name == "csv") return TableFormat::kCsv;
    if (name == "json") return TableFormat::kJson;
    if (name == "latex") return TableFormat::kLatex;
    throw std::invalid_argument("unknown table format: " + name);
}

std::string table_kind_str(TableKind kind) {
    switch (kind) {
        case TableKind::kLemma81: return "lemma81";
        case TableKind::kDegenerate43: return "degenerate43";
        case TableKind::kMod4_44: return "mod4-44";
        case TableKind::kNondegenerate45: return "nondegenerate45";
    }
    return "?";
}

std::string linear_str(const LinearForm& f) {
    struct Term {
        long long c;
        const char* var;
    };
    // Constant-first ("1+2j+4n") except when the constant is negative, where
    // the customary order is variable-first ("4n+4j-19").
    std::vector<Term> order;
    if (f.c0 >= 0)
        order = {{f.c0, ""}, {f.cj, "j"}, {f.cn, "n"}};
    else
        order = {{f.cn, "n"}, {f.cj, "j"}, {f.c0, ""}};
    std::string out;
    for (const Term& t : order) {
        if (t.c == 0) continue;
        const bool leading = out.empty();
        if (t.c < 0)
            out += "-";
        else if (!leading)
            out += "+";
        const long long mag = std::llabs(t.c);
        if (mag != 1 || *t.var == '\0') out += std::to_string(mag);
        out += t.var;
    }
    return out.empty() ? "0" : out;
}

namespace {

struct FamilySpec {
    const char* label;
    std::vector<int> pattern;
    std::vector<int> j_values;
    LinearForm printed_dim;
    std::vector<LinearForm> printed_upper;
    long long elim_sq;
    ElimRule elim_rule;
    const char* elim_text;
    LinearForm printed_margin;
    const char* printed_pow2;
    bool printed_two_mod_four;
};

const std::vector<FamilySpec>& family_specs() {
    static const std::vector<FamilySpec> specs = {
        {"()", {}, {}, {0, 0, 1}, {}, 0, ElimRule::kNone, "", {}, "", false},
        {"(j)", {-1}, {1, 2, 3, 4, 5, 6, 7}, {0, 1, 2}, {{0, 1, 1}}, 1, ElimRule::kSingleton,
         "eliminated if dim=j+2n is even or by Sq^1_* if j+n is even", {}, "", false},
        {"(1,j)", {1, -1}, {2, 4, 6}, {1, 2, 4}, {{1, 1, 2}, {0, 1, 1}}, 2, ElimRule::kNEven,
         "eliminated by Sq^2_* if n is even", {-19, 4, 4}, "none", true},
        {"(3,j)", {3, -1}, {4, 6}, {3, 2, 4}, {{3, 1, 2}, {0, 1, 1}}, 2, ElimRule::kNEven,
         "eliminated by Sq^2_* if n is even", {-15, 4, 4}, "(j=6; n=2^{t-2}-4)", false},
        {"(5,6)", {5, 6}, {}, {17, 0, 4}, {{11, 0, 2}, {6, 0, 1}}, 2, ElimRule::kNEven,
         "eliminated by Sq^2_* if n is even", {9, 0, 4}, "none", true},
        {"(1,2,j)", {1, 2, -1}, {3, 5, 7}, {5, 4, 8}, {{3, 2, 4}, {2, 1, 2}, {0, 1, 1}}, 4,
         ElimRule::kNOdd, "eliminated by Sq^4_* if n is odd", {-39, 8, 8}, "none", true},
        {"(1,4,j)", {1, 4, -1}, {5, 7}, {9, 4, 8}, {{5, 2, 4}, {4, 1, 2}, {0, 1, 1}}, 4,
         ElimRule::kNOdd, "eliminated by Sq^4_* if n is odd", {-31, 8, 8}, "none", true},
        {"(1,6,7)", {1, 6, 7}, {}, {41, 0, 8}, {{21, 0, 4}, {13, 0, 2}, {7, 0, 1}}, 4,
         ElimRule::kNOdd, "eliminated by Sq^4_* if n is odd", {32, 0, 8}, "none", true},
        {"(3,4,j)", {3, 4, -1}, {5, 7}, {11, 4, 8}, {{7, 2, 4}, {4, 1, 2}, {0, 1, 1}}, 4,
         ElimRule::kNOdd, "eliminated by Sq^4_* if n is odd", {-27, 8, 8},
         "(j=5; n=2^{t-3}-4); (j=7; n=2^{t-3}-5)", false},
        {"(3,6,7)", {3, 6, 7}, {}, {43, 0, 8}, {{23, 0, 4}, {13, 0, 2}, {7, 0, 1}}, 4,
         ElimRule::kNOdd, "eliminated by Sq^4_* if n is odd", {37, 0, 8}, "none", false},
        {"(5,6,7)", {5, 6, 7}, {}, {45, 0, 8}, {{25, 0, 4}, {13, 0, 2}, {7, 0, 1}}, 4,
         ElimRule::kNOdd, "eliminated by Sq^4_* if n is odd", {41, 0, 8}, "none", true},
        {"(1,2,3,4)", {1, 2, 3, 4}, {}, {49, 0, 16},
         {{25, 0, 8}, {13, 0, 4}, {7, 0, 2}, {4, 0, 1}}, 8, ElimRule::kNEven,
         "eliminated by Sq^8_* if n is even", {-7, 0, 16}, "none", true},
        {"(1,2,3,6)", {1, 2, 3, 6}, {}, {65, 0, 16},
         {{33, 0, 8}, {17, 0, 4}, {9, 0, 2}, {6, 0, 1}}, 8, ElimRule::kNEven,
         "eliminated by Sq^8_* if n is even", {25, 0, 16}, "none", true},
        {"(1,2,5,6)", {1, 2, 5, 6}, {}, {73, 0, 16},
         {{37, 0, 8}, {19, 0, 4}, {11, 0, 2}, {6, 0, 1}}, 8, ElimRule::kNEven,
         "eliminated by Sq^8_* if n is even", {41, 0, 16}, "none", true},
        {"(3,4,5,6)", {3, 4, 5, 6}, {}, {79, 0, 16},
         {{41, 0, 8}, {21, 0, 4}, {11, 0, 2}, {6, 0, 1}}, 8, ElimRule::kNEven,
         "eliminated by Sq^8_* if n is even", {53, 0, 16}, "n=2^{t-4}-5", false},
        {"(1,2,3,4,5)", {1, 2, 3, 4, 5}, {}, {129, 0, 32},
         {{65, 0, 16}, {33, 0, 8}, {17, 0, 4}, {9, 0, 2}, {5, 0, 1}}, 16, ElimRule::kNOdd,
         "eliminated by Sq^16_* if n is odd", {41, 0, 32}, "none", true},
        {"(1,2,3,4,7)", {1, 2, 3, 4, 7}, {}, {161, 0, 32},
         {{81, 0, 16}, {41, 0, 8}, {21, 0, 4}, {11, 0, 2}, {7, 0, 1}}, 16, ElimRule::kNOdd,
         "eliminated by Sq^16_* if n is odd", {105, 0, 32}, "none", true},
        {"(3,4,5,6,7)", {3, 4, 5, 6, 7}, {}, {191, 0, 32},
         {{97, 0, 16}, {49, 0, 8}, {25, 0, 4}, {13, 0, 2}, {7, 0, 1}}, 16, ElimRule::kNOdd,
         "eliminated by Sq^16_* if n is odd", {165, 0, 32}, "n=2^{t-5}-6", false},
        {"(1,2,3,4,5,6)", {1, 2, 3, 4, 5, 6}, {}, {301, 0, 64},
         {{161, 0, 32}, {81, 0, 16}, {41, 0, 8}, {21, 0, 4}, {11, 0, 2}, {6, 0, 1}}, 32,
         ElimRule::kNEven, "eliminated by Sq^32_* if n is even", {161, 0, 64}, "none", true},
        {"(1,2,3,4,5,6,7)", {1, 2, 3, 4, 5, 6, 7}, {}, {769, 0, 128},
         {{385, 0, 64}, {193, 0, 32}, {97, 0, 16}, {49, 0, 8}, {25, 0, 4}, {13, 0, 2},
          {7, 0, 1}},
         64, ElimRule::kNOdd, "eliminated by Sq^64_* if n is odd", {549, 0, 128}, "none",
         true},
    };
    return specs;
}

std::vector<int> instantiate(const std::vector<int>& pattern, int j) {
    std::vector<int> out = pattern;
    for (int& v : out)
        if (v == -1) v = j;
    return out;
}

constexpr long long kFitSweep = 64;

// Fits a + b*n + c*j from three sweep points and verifies the fit over the
// whole (j_values x 1..64) sweep; a failed fit aborts the row.
LinearForm fit_form(const std::function<long long(int, long long)>& f,
                    const std::vector<int>& j_values, const std::string& row,
                    const char* column) {
    const std::vector<int> js = j_values.empty() ? std::vector<int>{0} : j_values;
    LinearForm form;
    const long long f11 = f(js.front(), 1);
    form.cn = f(js.front(), 2) - f11;
    if (js.size() >= 2) {
        const long long dj = js[1] - js[0];
        const long long df = f(js[1], 1) - f11;
        if (df % dj != 0)
            throw std::runtime_error("table row " + row + ": " + column +
                                     " has a fractional j coefficient");
        form.cj = df / dj;
    }
    form.c0 = f11 - form.cj * js.front() - form.cn;
    for (int j : js)
        for (long long n = 1; n <= kFitSweep; ++n)
            if (f(j, n) != form.eval(j, n))
                throw std::runtime_error("table row " + row + ": " + column +
                                         " is not linear in (j, n); row aborted");
    return form;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(v[k]);
    }
    return out;
}

std::string upper_form_str(const std::vector<LinearForm>& upper) {
    std::string out;
    for (const LinearForm& f : upper) out += "Q^{" + linear_str(f) + "}";
    out += "x_n";
    return out;
}

// Exact solutions of d+1 = 2^t: with dim = c0 + cj*j + cn*n and cn = 2^len,
// solutions exist exactly when cn divides A = c0 + cj*j + 1, giving
// n = 2^{t-len} - A/cn.
std::string pow2_cases_str(const Family& fam, bool complement) {
    const bool slot = !fam.j_values.empty();
    const std::vector<int> js = slot ? fam.j_values : std::vector<int>{0};
    std::vector<std::string> parts;
    bool any_solution = false;
    for (int j : js) {
        const long long A = fam.dim.c0 + fam.dim.cj * j + 1;
        const long long cn = fam.dim.cn;
        std::string cond;
        if (A % cn == 0) {
            any_solution = true;
            cond = "n" + std::string(complement ? " != " : "=") + "2^{t-" +
                   std::to_string(fam.length) + "}-" + std::to_string(A / cn);
        } else if (complement) {
            cond = "all n";
        } else {
            continue;
        }
        parts.push_back(slot ? "(j=" + std::to_string(j) + "; " + cond + ")" : cond);
    }
    if (!complement && !any_solution) return "none";
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += "; ";
        out += parts[k];
    }
    return out;
}

std::vector<Family> build_families() {
    std::vector<Family> families;
    for (const FamilySpec& spec : family_specs()) {
        Family fam;
        fam.label = spec.label;
        fam.pattern = spec.pattern;
        fam.j_values = spec.j_values;
        fam.length = static_cast<int>(spec.pattern.size());
        fam.printed_dim = spec.printed_dim;
        fam.printed_upper = spec.printed_upper;
        fam.elim_sq = spec.elim_sq;
        fam.elim_rule = spec.elim_rule;
        fam.elim_text = spec.elim_text;

        fam.dim = fit_form(
            [&](int j, long long n) { return dim_lower(instantiate(spec.pattern, j), n); },
            spec.j_values, fam.label, "dimension");
        for (int pos = 0; pos < fam.length; ++pos) {
            fam.upper.push_back(fit_form(
                [&](int j, long long n) {
                    return lower_to_upper(instantiate(spec.pattern, j), n)[pos];
                },
                spec.j_values, fam.label, "upper form"));
        }

        if (fam.length >= 2) {
            fam.top = fit_form(
                [&](int j, long long n) {
                    return gap_report(instantiate(spec.pattern, j), 8, n).top;
                },
                spec.j_values, fam.label, "top");
            fam.margin = fit_form(
                [&](int j, long long n) {
                    return gap_report(instantiate(spec.pattern, j), 8, n).margin;
                },
                spec.j_values, fam.label, "margin");
            fam.printed_margin = spec.printed_margin;
            fam.printed_pow2_cases = spec.printed_pow2;
            fam.pow2_cases = pow2_cases_str(fam, false);
            // d+1 mod 4 is constant over the row: cn = 0 mod 4 and cj*dj = 0 mod 4.
            fam.two_mod_four = (fam.dim.eval(fam.j_values.empty() ? 0 : fam.j_values.front(), 1) + 1) % 4 == 2;
            for (int j : (fam.j_values.empty() ? std::vector<int>{0} : fam.j_values))
                for (long long n = 1; n <= 8; ++n)
                    if (((fam.dim.eval(j, n) + 1) % 4 == 2) != fam.two_mod_four)
                        throw std::runtime_error("table row " + fam.label +
                                                 ": d+1 mod 4 is not constant; row aborted");
        }
        families.push_back(std::move(fam));
    }
    return families;
}

}  // namespace

const std::vector<Family>& lemma81_families() {
    static const std::vector<Family> families = build_families();
    return families;
}

namespace {

// ---- witness classification -------------------------------------------

struct WitnessClass {
    int modulus = 1;
    std::vector<long long> sq_by_residue;  // indexed by n mod modulus; 0 = A-annihilated

    bool operator==(const WitnessClass&) const = default;
};

constexpr int kWitnessSweep = 20;

WitnessClass classify_witness(const std::vector<int>& word) {
    std::vector<long long> w(kWitnessSweep + 1, 0);
    for (int n = 1; n <= kWitnessSweep; ++n) {
        DlEngine dl(n);
        SqDual sq(dl);
        AnnihilationWitness wit;
        Element xi = Element::single(Product{Word{lower_to_upper(word, n)}});
        sq.is_A_annihilated(xi, &wit);
        w[n] = wit.sq;
    }
    for (int m : {1, 2, 4}) {
        bool periodic = true;
        for (int n = 1; n + m <= kWitnessSweep; ++n) periodic = periodic && (w[n] == w[n + m]);
        if (!periodic) continue;
        WitnessClass c;
        c.modulus = m;
        c.sq_by_residue.resize(m);
        for (int r = 0; r < m; ++r) c.sq_by_residue[r] = w[r == 0 ? m : r];
        return c;
    }
    throw std::runtime_error("witness pattern is not periodic mod 4 for (" + join_ints(word) +
                             ")");
}

std::string residues_str(const std::vector<int>& residues, int m) {
    if (static_cast<int>(residues.size()) == m) return "all n";
    if (m == 2) return residues == std::vector<int>{0} ? "n even" : "n odd";
    if (m == 4 && residues == std::vector<int>{0, 2}) return "n even";
    if (m == 4 && residues == std::vector<int>{1, 3}) return "n odd";
    std::string out;
    for (std::size_t k = 0; k < residues.size(); ++k) {
        if (k) out += ", ";
        out += "n=" + std::to_string(residues[k]) + " mod " + std::to_string(m);
    }
    return out;
}

std::string witness_class_str(const WitnessClass& c) {
    // Group residues sharing a witness, ordered by first appearance.
    std::vector<long long> values;
    for (long long v : c.sq_by_residue)
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::vector<int> residues;
        for (int r = 0; r < c.modulus; ++r)
            if (c.sq_by_residue[r] == values[k]) residues.push_back(r);
        if (k) out += "; ";
        const std::string cond = residues_str(residues, c.modulus);
        if (values[k] == 0)
            out += "A-annihilated";
        else
            out += "Sq^" + std::to_string(values[k]) + "_*";
        out += " (" + cond + ")";
    }
    return out;
}

// ---- documents ----------------------------------------------------------

void footnote_if(TableDocument& doc, bool mismatch, const std::string& text) {
    if (mismatch) doc.footnotes.push_back(text);
}

std::string family_cell(const Family& fam) {
    if (fam.j_values.size() > 1) return fam.label + " with j=" + join_ints(fam.j_values);
    return fam.label;
}

void add_printed_value_footnotes(TableDocument& doc, const Family& fam, bool gap_columns) {
    footnote_if(doc, !(fam.dim == fam.printed_dim),
                "row " + fam.label + ": exact dimension " + linear_str(fam.dim) +
                    "; printed value " + linear_str(fam.printed_dim));
    footnote_if(doc, fam.upper != fam.printed_upper,
                "row " + fam.label + ": exact upper form " + upper_form_str(fam.upper) +
                    "; printed form " + upper_form_str(fam.printed_upper));
    if (!gap_columns) return;
    footnote_if(doc, !(fam.margin == fam.printed_margin),
                "row " + fam.label + ": exact margin " + linear_str(fam.margin) +
                    "; printed value " + linear_str(fam.printed_margin));
    footnote_if(doc, fam.pow2_cases != fam.printed_pow2_cases,
                "row " + fam.label + ": exact solutions of d+1=2^t are \"" + fam.pow2_cases +
                    "\"; printed column has \"" + fam.printed_pow2_cases + "\"");
}

TableDocument emit_lemma81() {
    TableDocument doc;
    doc.kind = "lemma81";
    doc.columns = {"J", "Q^I x_n", "dimension", "trivial eliminations"};
    for (const Family& fam : lemma81_families()) {
        doc.rows.push_back({family_cell(fam), fam.length ? upper_form_str(fam.upper) : "x_n",
                            linear_str(fam.dim), fam.elim_text});
        add_printed_value_footnotes(doc, fam, false);
    }
    // Sequences allowed by the parity constraints but absent from the printed
    // table; their columns are fully computed.
    for (const Candidate& c : enumerate_candidates(8)) {
        if (!c.extra) continue;
        Family fam;
        fam.pattern = c.J;
        fam.length = static_cast<int>(c.J.size());
        fam.label = candidate_str(c);
        fam.dim = fit_form([&](int, long long n) { return dim_lower(c.J, n); }, {}, fam.label,
                           "dimension");
        for (int pos = 0; pos < fam.length; ++pos)
            fam.upper.push_back(fit_form(
                [&](int, long long n) { return lower_to_upper(c.J, n)[pos]; }, {}, fam.label,
                "upper form"));
        doc.rows.push_back({fam.label + " EXTRA", upper_form_str(fam.upper),
                            linear_str(fam.dim), witness_class_str(classify_witness(c.J))});
    }
    return doc;
}

TableDocument emit_degenerate43() {
    TableDocument doc;
    doc.kind = "degenerate43";
    doc.columns = {"J", "d", "cases with d+1=2^t", "d+1=2 mod 4", "top", "2d+1-top"};
    for (const Family& fam : lemma81_families()) {
        if (fam.length < 2) continue;
        // Margin cell: exact polynomial with the exact ">2" threshold per j.
        std::ostringstream margin;
        margin << linear_str(fam.margin) << ">2";
        const bool slot = !fam.j_values.empty();
        const std::vector<int> js = slot ? fam.j_values : std::vector<int>{0};
        std::vector<std::string> conds;
        bool any_threshold = false;
        for (int j : js) {
            if (fam.margin.eval(j, 1) > 2) {
                if (slot) conds.push_back("j=" + std::to_string(j));
                continue;
            }
            any_threshold = true;
            long long nmin = 1;
            while (fam.margin.eval(j, nmin) <= 2) ++nmin;
            const std::string cond = "n>" + std::to_string(nmin - 1);
            conds.push_back(slot ? "(j=" + std::to_string(j) + ";" + cond + ")" : "if " + cond);
        }
        if (any_threshold) {
            margin << " if ";
            for (std::size_t k = 0; k < conds.size(); ++k) {
                if (k) margin << " or ";
                margin << conds[k];
            }
        }
        doc.rows.push_back({family_cell(fam), linear_str(fam.dim), fam.pow2_cases,
                            fam.two_mod_four ? "yes" : "no", linear_str(fam.top),
                            margin.str()});
        add_printed_value_footnotes(doc, fam, true);
    }
    return doc;
}

TableDocument emit_mod4_44() {
    TableDocument doc;
    doc.kind = "mod4-44";
    doc.columns = {"J", "Q^I x_n", "dimension", "cases with d+1 != 2^t", "eliminated by"};
    // What the section claims, for comparison against the computed witnesses.
    const std::map<std::string, WitnessClass> claimed = {
        {"(3,4)", {1, {2}}},
        {"(3,6)", {2, {2, 4}}},
        {"(3,4,5)", {1, {2}}},
        {"(3,4,7)", {1, {2}}},
        {"(3,6,7)", {1, {4}}},
        {"(3,4,5,6)", {1, {2}}},
        {"(3,4,5,6,7)", {1, {2}}},
    };
    // The section's own prints of the complement column and the (3,j) upper
    // form, for discrepancy detection.
    const std::map<std::string, std::string> printed_complement = {
        {"(3,j)", "(j=6; n != 2^{t-2}-4); (j=4; all n)"},
        {"(3,4,j)", "(j=5; n != 2^{t-3}-4); (j=7; n != 2^{t-3}-5)"},
        {"(3,6,7)", "all n"},
        {"(3,4,5,6)", "n != 2^{t-4}-5"},
        {"(3,4,5,6,7)", "n != 2^{t-5}-6"},
    };
    const std::map<std::string, std::string> printed_upper_form = {
        {"(3,j)", "Q^{3+2j+2n}Q^{j+n}x_n"},
    };

    for (const Family& fam : lemma81_families()) {
        if (fam.length < 2 || fam.two_mod_four) continue;
        const bool slot = !fam.j_values.empty();
        const std::vector<int> js = slot ? fam.j_values : std::vector<int>{0};
        std::string elim;
        for (std::size_t k = 0; k < js.size(); ++k) {
            const std::vector<int> word = instantiate(fam.pattern, js[k]);
            const WitnessClass computed = classify_witness(word);
            std::string label = fam.label;
            if (slot) label = "(" + join_ints(word) + ")";
            if (k) elim += "; ";
            if (slot) elim += "(j=" + std::to_string(js[k]) + ") ";
            elim += witness_class_str(computed);
            const auto it = claimed.find(label);
            if (it != claimed.end() && !(computed == it->second))
                doc.footnotes.push_back(
                    "row " + label + ": the section claims " + witness_class_str(it->second) +
                    "; exact computation gives " + witness_class_str(computed));
        }
        const std::string complement = pow2_cases_str(fam, true);
        doc.rows.push_back({family_cell(fam), upper_form_str(fam.upper), linear_str(fam.dim),
                            complement, elim});
        const auto pc = printed_complement.find(fam.label);
        if (pc != printed_complement.end() && pc->second != complement)
            doc.footnotes.push_back("row " + fam.label + ": exact complement column is \"" +
                                    complement + "\"; the section prints \"" + pc->second +
                                    "\"");
        const auto pu = printed_upper_form.find(fam.label);
        if (pu != printed_upper_form.end() && pu->second != upper_form_str(fam.upper))
            doc.footnotes.push_back("row " + fam.label + ": exact upper form " +
                                    upper_form_str(fam.upper) + "; the section prints " +
                                    pu->second);
    }
    return doc;
}

TableDocument emit_nondegenerate45() {
    TableDocument doc;
    doc.kind = "nondegenerate45";
    doc.columns = {"J", "n with d+1=2^t", "i_1", "first even entry", "eliminated by"};
    // Rows the section prints, with its closed form for i_1 as 2^{t-a}+1.
    const std::map<std::string, int> printed_rows = {
        {"(3,6)", 1}, {"(3,4,5)", 2}, {"(3,4,7)", 1}, {"(3,4,5,6)", 1}, {"(3,4,5,6,7)", 1}};

    for (const Family& fam : lemma81_families()) {
        if (fam.length < 2) continue;
        const bool slot = !fam.j_values.empty();
        for (int j : (slot ? fam.j_values : std::vector<int>{0})) {
            const long long A = fam.dim.c0 + fam.dim.cj * j + 1;
            if (A % fam.dim.cn != 0) continue;  // no n with d+1 = 2^t
            const long long K = A / fam.dim.cn;
            const int L = fam.length;
            const std::vector<int> word = instantiate(fam.pattern, j);
            const std::string label = "(" + join_ints(word) + ")";

            int t0 = L;
            while ((1LL << (t0 - L)) - K < 1) ++t0;
            auto n_of = [&](int t) { return (1LL << (t - L)) - K; };

            // i_1 = 2^{t-1} + B, derived from the linear form and verified.
            const long long B = fam.upper.front().c0 + fam.upper.front().cj * j -
                                fam.upper.front().cn * K;
            for (int t = t0; t <= t0 + 2; ++t) {
                const long long n = n_of(t);
                if (dim_lower(word, n) + 1 != (1LL << t))
                    throw std::runtime_error("row " + label + ": n=2^{t-" + std::to_string(L) +
                                             "}-" + std::to_string(K) +
                                             " does not solve d+1=2^t");
                if (lower_to_upper(word, n).front() != (1LL << (t - 1)) + B)
                    throw std::runtime_error("row " + label + ": i_1 is not 2^{t-1}" +
                                             (B >= 0 ? "+" : "") + std::to_string(B));
            }
            const std::string i1_str =
                "2^{t-1}" + std::string(B >= 0 ? "+" : "") + std::to_string(B);

            // First even entry of the upper word (checked at two values of t).
            int even_pos = 0;  // 0 = none
            for (int t = t0; t <= t0 + 1; ++t) {
                const std::vector<int> upper = lower_to_upper(word, n_of(t));
                int pos = 0;
                for (std::size_t p = 0; p < upper.size(); ++p)
                    if (upper[p] % 2 == 0) {
                        pos = static_cast<int>(p) + 1;
                        break;
                    }
                if (t == t0)
                    even_pos = pos;
                else if (pos != even_pos)
                    throw std::runtime_error("row " + label +
                                             ": parity pattern differs between t values");
            }
            std::string even_cell = "none";
            if (even_pos > 0)
                even_cell = "position " + std::to_string(even_pos) + " -> Sq^" +
                            std::to_string(1LL << (even_pos - 1)) + "_* (Wellington)";

            // Least witness and its image, verified at t0 and t0+1.
            long long witness = -1;
            bool single_term = true;
            bool leading_term_present = true;
            for (int t = t0; t <= t0 + 1; ++t) {
                const long long n = n_of(t);
                DlEngine dl(n);
                SqDual sq(dl);
                AnnihilationWitness wit;
                Element xi = Element::single(Product{Word{lower_to_upper(word, n)}});
                if (sq.is_A_annihilated(xi, &wit))
                    throw std::runtime_error("row " + label + ": class is A-annihilated at n=" +
                                             std::to_string(n));
                if (witness == -1)
                    witness = wit.sq;
                else if (witness != wit.sq)
                    throw std::runtime_error("row " + label +
                                             ": witness differs between t values");
                single_term = single_term && wit.image.terms.size() == 1;
                // The image must contain the word with first entry i_1 - witness.
                std::vector<int> expected = lower_to_upper(word, n);
                expected.front() -= static_cast<int>(wit.sq);
                bool found = false;
                for (const Product& p : wit.image.terms)
                    found = found || (p.size() == 1 && p.front().q == expected);
                leading_term_present = leading_term_present && found;
            }
            std::ostringstream elim;
            elim << "Sq^" << witness << "_*";
            if (witness == 2 && leading_term_present) {
                std::vector<std::string> tail;
                for (std::size_t p = 1; p < fam.upper.size(); ++p) {
                    LinearForm f = fam.upper[p];
                    f.c0 += f.cj * j;
                    f.cj = 0;
                    tail.push_back(linear_str(f));
                }
                elim << ": image has leading term Q^{2^{t-1}-1}";
                for (const std::string& s : tail) elim << "Q^{" << s << "}";
                elim << "x_n";
                if (!single_term) elim << " + ...";
            }
            doc.rows.push_back(
                {label,
                 "n=2^{t-" + std::to_string(L) + "}-" + std::to_string(K) + " (t>=" +
                     std::to_string(t0) + ")",
                 i1_str, even_cell, elim.str()});

            const auto pr = printed_rows.find(label);
            if (pr == printed_rows.end())
                doc.footnotes.push_back("row " + label +
                                        ": absent from the printed nondegenerate table");
            else if (pr->second != 1)
                doc.footnotes.push_back("row " + label + ": exact i_1 is " + i1_str +
                                        "; the section prints 2^{t-" +
                                        std::to_string(pr->second) + "}+1");
        }
    }
    return doc;
}

}  // namespace

TableDocument emit_table(TableKind kind) {
    switch (kind) {
        case TableKind::kLemma81: return emit_lemma81();
        case TableKind::kDegenerate43: return emit_degenerate43();
        case TableKind::kMod4_44: return emit_mod4_44();
        case TableKind::kNondegenerate45: return emit_nondegenerate45();
    }
    throw std::invalid_argument("unknown table kind");
}

TableDocument report_table(const EliminationReport& rep) {
    TableDocument doc;
    doc.kind = "elimination-report";
    doc.columns = {"J", "flag", "n", "class", "dim", "status", "pass", "detail"};
    for (const ReportRow& row : rep.rows) {
        std::string jword;
        for (int j : row.candidate.J) jword += "Q_" + std::to_string(j) + " ";
        const std::string base = jword + "x_" + std::to_string(row.n);
        const std::string cls = row.squared ? "(" + base + ")^2" : base;
        doc.rows.push_back({candidate_str(row.candidate), row.candidate.extra ? "EXTRA" : "",
                            std::to_string(row.n), cls, std::to_string(row.dim),
                            status_str(row.verdict.status), row.verdict.pass,
                            row.verdict.reason});
    }
    return doc;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos && (s.empty() || (s.front() != ' ' && s.back() != ' ')))
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

std::string latex_escape_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '#': out += "\\#"; break;
            case '_': out += "\\_"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out += c;
        }
    }
    return out;
}

std::string latex_escape_math(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "\\&"; break;
            case '%': out += "\\%"; break;
            case '#': out += "\\#"; break;
            default: out += c;
        }
    }
    return out;
}

std::string render_text(const TableDocument& doc) {
    std::vector<std::size_t> width(doc.columns.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t k = 0; k < row.size() && k < width.size(); ++k)
            width[k] = std::max(width[k], row[k].size());
    };
    widen(doc.columns);
    for (const auto& row : doc.rows) widen(row);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << " | ";
            os << row[k];
            if (k + 1 < row.size()) os << std::string(width[k] - row[k].size(), ' ');
        }
        os << "\n";
    };
    os << "# " << doc.kind << "\n";
    line(doc.columns);
    std::size_t total = width.empty() ? 0 : (3 * (width.size() - 1));
    for (std::size_t w : width) total += w;
    os << std::string(total, '-') << "\n";
    for (const auto& row : doc.rows) line(row);
    if (!doc.footnotes.empty()) {
        os << "\nfootnotes (exact values vs printed values):\n";
        for (std::size_t k = 0; k < doc.footnotes.size(); ++k)
            os << "  [" << (k + 1) << "] " << doc.footnotes[k] << "\n";
    }
    return os.str();
}

std::string render_csv(const TableDocument& doc) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ",";
            os << csv_field(row[k]);
        }
        os << "\n";
    };
    line(doc.columns);
    for (const auto& row : doc.rows) line(row);
    for (std::size_t k = 0; k < doc.footnotes.size(); ++k)
        os << "# footnote [" << (k + 1) << "]: " << doc.footnotes[k] << "\n";
    return os.str();
}

std::string render_latex(const TableDocument& doc) {
    std::ostringstream os;
    os << "\\begin{tabular}{|";
    for (std::size_t k = 0; k < doc.columns.size(); ++k) os << "l|";
    os << "}\n\\hline\n";
    for (std::size_t k = 0; k < doc.columns.size(); ++k) {
        if (k) os << " & ";
        os << latex_escape_text(doc.columns[k]);
    }
    os << " \\\\\n\\hline\n";
    for (const auto& row : doc.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << " & ";
            os << "$" << latex_escape_math(row[k]) << "$";
        }
        os << " \\\\\n\\hline\n";
    }
    os << "\\end{tabular}\n";
    if (!doc.footnotes.empty()) {
        os << "\\par\\noindent\n";
        for (std::size_t k = 0; k < doc.footnotes.size(); ++k)
            os << "[" << (k + 1) << "] " << latex_escape_text(doc.footnotes[k]) << "\\\\\n";
    }
    return os.str();
}

}  // namespace

std::string render_table(const TableDocument& doc, TableFormat format) {
    switch (format) {
        case TableFormat::kText: return render_text(doc);
        case TableFormat::kCsv: return render_csv(doc);
        case TableFormat::kJson: return table_to_json(doc).dump(2) + "\n";
        case TableFormat::kLatex: return render_latex(doc);
    }
    throw std::invalid_argument("unknown table format");
}

nlohmann::ordered_json table_to_json(const TableDocument& doc) {
    nlohmann::ordered_json j;
    j["kind"] = doc.kind;
    j["columns"] = doc.columns;
    j["rows"] = doc.rows;
    j["footnotes"] = doc.footnotes;
    return j;
}

TableDocument table_from_json(const nlohmann::ordered_json& j) {
    TableDocument doc;
    doc.kind = j.at("kind").get<std::string>();
    doc.columns = j.at("columns").get<std::vector<std::string>>();
    doc.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    doc.footnotes = j.at("footnotes").get<std::vector<std::string>>();
    return doc;
}

}  // namespace qloop
