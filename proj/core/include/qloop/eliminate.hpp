// The multi-pass elimination driver for candidate spherical classes
// (Q_J x_n)^2 in H_*(Omega^l S^{n+l}): cheap syntactic tests first, then the
// dual-Steenrod, dimension-gap and cone arguments, with external homotopy
// facts last.  Every non-survivor verdict carries a replayable witness.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloop/algebra.hpp"
#include "qloop/candidates.hpp"
#include "qloop/cone.hpp"
#include "qloop/facts.hpp"
#include "qloop/loopspace.hpp"
#include "qloop/nishida.hpp"

namespace qloop {

enum class Status {
    kSurvivorBottomCell,
    kSurvivorHopf,
    kEliminated,
    kExternal,
    kUnresolved,
};

std::string status_str(Status s);

struct Verdict {
    Status status = Status::kUnresolved;
    std::string pass;    // which pass decided ("P0".."P5", or "-" for none)
    std::string reason;  // deterministic human-readable justification
    std::optional<AnnihilationWitness> sq_witness;  // P2
    std::optional<GapReport> gap;                   // P3
    std::optional<ConeTrace> cone;                  // P4 (also kept when it ran without deciding)
    std::string fact_id;                            // P0 / P5
};

struct ReportRow {
    Candidate candidate;
    long long n = 0;
    bool squared = true;  // false only for the bottom-cell row of the empty J
    long long dim = 0;    // dimension of the class the verdict speaks about
    Verdict verdict;
};

struct EliminationReport {
    int l = 0;
    long long n_from = 0, n_to = 0;
    std::vector<ReportRow> rows;

    long long count(Status s) const;
};

// Applies P0..P5 to one candidate at concrete n (engines shared per n).
Verdict eliminate_one(const Candidate& c, int l, long long n, const FactsTable& facts,
                      SqDual& sq, SqAdem& adem);

EliminationReport run_elimination(int l, long long n_from, long long n_to,
                                  const FactsTable& facts);

}  // namespace qloop
