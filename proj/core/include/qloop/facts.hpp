// External homotopy-theoretic facts consumed by the pipeline.  These are
// data, never computed here: the Hopf-invariant-one dimensions and the stems
// whose 2-component is known to have trivial mod-2 Hurewicz image.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qloop {

struct ExternalFact {
    std::string id;
    std::string kind;  // "hopf-invariant-one-dims" | "hurewicz-trivial-stem"
    nlohmann::ordered_json params;
    std::string source;
};

class FactsTable {
  public:
    int version = 0;
    std::vector<ExternalFact> facts;

    // Dimensions m where Sq^m can act on a two-cell sphere cone (Hopf
    // invariant one).  Throws when the table carries no such fact.
    std::vector<long long> hopf_dims() const;

    // The fact asserting the given stem's 2-component maps trivially under
    // the Hurewicz homomorphism, when present.
    const ExternalFact* find_trivial_stem(long long stem) const;
};

FactsTable parse_facts(const nlohmann::ordered_json& doc);
FactsTable load_facts(const std::string& path);

// Built-in table identical to the shipped data file.
FactsTable default_facts();
std::string default_facts_json();

}  // namespace qloop
