// Candidate sequences for spherical classes (Q_J x_n)^2 in Omega^l S^{n+l}:
// strictly increasing lower words with entries in (0, l), first entry odd and
// consecutive sums odd (so the upper form has only odd entries), plus the
// empty sequence for the bottom class and its square.
#pragma once

#include <string>
#include <vector>

namespace qloop {

struct Candidate {
    std::vector<int> J;  // strictly increasing lower indices; empty allowed
    bool extra = false;  // enumerated here but absent from the tabulated families
};

// All candidates at loop bound l (4 <= l <= 9), sorted by length then
// lexicographically.  Sequences outside the known tabulated families at l=8
// are flagged extra rather than dropped.
std::vector<Candidate> enumerate_candidates(int l);

std::string candidate_str(const Candidate& c);

}  // namespace qloop
