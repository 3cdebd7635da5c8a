#include <algorithm>
#include <cstdlib>

#include "axiomtest/rewrite.hpp"

#ifndef AXIOMTEST_SPEC_DIR
#define AXIOMTEST_SPEC_DIR "specs"
#endif

namespace axiomtest {

std::filesystem::path shipped_spec_dir() { return AXIOMTEST_SPEC_DIR; }

std::vector<std::string> mutation_catalog() { return {"M0", "M1", "M2", "M3", "M4", "M5"}; }

Specification apply_mutation(const Specification& base, const Specification& patch) {
  Specification out = base;
  for (const auto& label : patch.overrides) {
    const ConditionalAxiom* replacement = patch.find_axiom(label);
    auto it = std::find_if(out.axioms.begin(), out.axioms.end(),
                           [&](const ConditionalAxiom& ax) { return ax.label == label; });
    if (!replacement || it == out.axioms.end())
      throw SpecError("mutation " + patch.name + " overrides unknown axiom '" + label + "'");
    *it = *replacement;
  }
  return out;
}

Specification load_mutation(const std::string& id, const SearchPath& search_path) {
  SearchPath dirs = search_path;
  dirs.push_back(shipped_spec_dir());
  for (const auto& dir : dirs) {
    std::filesystem::path file = dir / "mutants" / (id + ".spec");
    if (!std::filesystem::exists(file)) continue;
    SearchPath imports = {dir};
    imports.insert(imports.end(), dirs.begin(), dirs.end());
    return load_spec(file, imports);
  }
  throw SpecError("unknown mutation id '" + id + "'");
}

Term mutant_eval(const Specification& spec, const std::string& mutation_id, const Term& t, const Fuel& fuel,
                 const SearchPath& search_path) {
  Specification mutated = apply_mutation(spec, load_mutation(mutation_id, search_path));
  return reference_eval(mutated, t, fuel);
}

}  // namespace axiomtest
