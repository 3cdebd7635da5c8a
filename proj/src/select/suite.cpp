#include <openssl/sha.h>

#include <cstdio>

#include "axiomtest/parser.hpp"
#include "axiomtest/select.hpp"

namespace axiomtest {

std::string to_string(SelectionStrategy s) {
  return s == SelectionStrategy::kExhaustiveFirst ? "exhaustive-first" : "seeded-random";
}

SelectionStrategy parse_strategy(const std::string& text) {
  if (text == "exhaustive-first") return SelectionStrategy::kExhaustiveFirst;
  if (text == "seeded-random") return SelectionStrategy::kSeededRandom;
  throw Error("unknown selection strategy '" + text + "'");
}

void Hypotheses::validate() const {
  if (regularity_bound < 1) throw Error("regularity_bound must be at least 1");
  if (representatives_per_subdomain < 1) throw Error("representatives_per_subdomain must be at least 1");
  if (fuel.max_steps < 1 || fuel.max_condition_depth < 1) throw Error("fuel bounds must be at least 1");
}

void ObservationPlan::validate() const {
  if (context_depth < 1 || contexts_per_test < 1 || parameter_bound < 1)
    throw Error("observation plan bounds must be at least 1");
}

std::string to_string(SuiteMode m) {
  switch (m) {
    case SuiteMode::kAxioms: return "axioms";
    case SuiteMode::kObservational: return "observational";
    case SuiteMode::kNormalForm: return "normal-form";
  }
  return "axioms";
}

std::string spec_digest(const Specification& spec) {
  std::string text = render_spec(spec);
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), md);
  std::string hex;
  char buf[3];
  for (unsigned char b : md) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    hex += buf;
  }
  return hex;
}

TestSuite generate(const Specification& spec, const Hypotheses& hyp) {
  hyp.validate();
  ConditionalRewriteSystem crs = orient(spec);
  TestSuite suite;
  suite.spec_name = spec.name;
  suite.spec_sha256 = spec_digest(spec);
  suite.hypotheses = hyp;
  DecomposeResult dec = decompose(crs, hyp);
  suite.skipped = dec.skipped;
  for (const auto& leaf : dec.leaves) {
    InstantiateResult r = instantiate(crs, leaf, hyp);
    if (r.unsat_within_bound()) {
      suite.skipped.push_back({leaf.id, "unsat within bound (tried " + std::to_string(r.tried) + ", unknown " +
                                            std::to_string(r.unknown) + ")"});
      continue;
    }
    if (r.tests.empty()) {
      suite.skipped.push_back({leaf.id, "only tautological instances"});
      continue;
    }
    for (auto& tc : r.tests) suite.tests.push_back(std::move(tc));
  }
  return suite;
}

TestSuite normal_form_tests(const Specification& spec, std::size_t size_bound, const Fuel& fuel,
                            bool keep_tautologies) {
  ConditionalRewriteSystem crs = orient(spec);
  TestSuite suite;
  suite.spec_name = spec.name;
  suite.spec_sha256 = spec_digest(spec);
  suite.mode = SuiteMode::kNormalForm;
  suite.hypotheses.fuel = fuel;
  suite.hypotheses.keep_tautologies = keep_tautologies;
  suite.normal_form_bound = size_bound;
  TermEnumerator terms(spec.signature, false);
  std::size_t n = 0;
  for (const auto& s : spec.signature.sorts()) {
    for (const auto& t : terms.up_to(s, size_bound)) {
      std::string id = "nf/" + std::to_string(n++);
      NormalizeResult r = normalize(crs, t, fuel);
      if (!r.ok()) {
        suite.skipped.push_back({id, "fuel exhausted on " + render_term(t)});
        continue;
      }
      if (t == r.term && !keep_tautologies) continue;
      suite.tests.push_back({id, {t, r.term}, "nf", "", {}, std::nullopt});
    }
  }
  return suite;
}

}  // namespace axiomtest
