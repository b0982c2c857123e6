#include "qloop/facts.hpp"

#include <fstream>
#include <stdexcept>

namespace qloop {

std::vector<long long> FactsTable::hopf_dims() const {
    for (const ExternalFact& f : facts)
        if (f.kind == "hopf-invariant-one-dims")
            return f.params.at("dims").get<std::vector<long long>>();
    throw std::runtime_error("facts table lacks a hopf-invariant-one-dims entry");
}

const ExternalFact* FactsTable::find_trivial_stem(long long stem) const {
    for (const ExternalFact& f : facts)
        if (f.kind == "hurewicz-trivial-stem" && f.params.at("stem").get<long long>() == stem)
            return &f;
    return nullptr;
}

FactsTable parse_facts(const nlohmann::ordered_json& doc) {
    FactsTable table;
    table.version = doc.at("version").get<int>();
    for (const auto& entry : doc.at("facts")) {
        ExternalFact f;
        f.id = entry.at("id").get<std::string>();
        f.kind = entry.at("kind").get<std::string>();
        f.params = entry.at("params");
        f.source = entry.at("source").get<std::string>();
        table.facts.push_back(std::move(f));
    }
    return table;
}

FactsTable load_facts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open facts file: " + path);
    nlohmann::ordered_json doc;
    in >> doc;
    return parse_facts(doc);
}

std::string default_facts_json() {
    return R"json({
  "version": 1,
  "facts": [
    {
      "id": "hopf-invariant-one",
      "kind": "hopf-invariant-one-dims",
      "params": { "dims": [1, 2, 4, 8] },
      "source": "Adams, On the non-existence of elements of Hopf invariant one, Ann. of Math. 72 (1960)"
    },
    {
      "id": "stem-17-hurewicz-trivial",
      "kind": "hurewicz-trivial-stem",
      "params": { "stem": 17 },
      "source": "2-component of the 17-stem (eta eta*, nu kappa): Toda brackets; Ravenel, Complex Cobordism and Stable Homotopy Groups of Spheres, Ch. 3 tables"
    },
    {
      "id": "stem-64-hurewicz-trivial",
      "kind": "hurewicz-trivial-stem",
      "params": { "stem": 64 },
      "source": "2-component of the 64-stem: Kochman-Mahowald, On the computation of stable stems (status revisited by Isaksen-Wang-Xu)"
    }
  ]
}
)json";
}

FactsTable default_facts() {
    return parse_facts(nlohmann::ordered_json::parse(default_facts_json()));
}

}  // namespace qloop
