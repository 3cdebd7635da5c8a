// Test selection: per-axiom uniformity subdomains, unfolding of defined
// operations, bounded instantiation and the normal-form test set.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axiomtest/core.hpp"
#include "axiomtest/rewrite.hpp"

namespace axiomtest {

enum class SelectionStrategy { kExhaustiveFirst, kSeededRandom };

std::string to_string(SelectionStrategy s);
/// Accepts "exhaustive-first" and "seeded-random".
SelectionStrategy parse_strategy(const std::string& text);

struct Hypotheses {
  std::size_t unfold_depth = 0;
  /// Maximum node count of each variable's ground image.
  std::size_t regularity_bound = 7;
  std::size_t representatives_per_subdomain = 1;
  std::uint64_t seed = 0;
  SelectionStrategy strategy = SelectionStrategy::kSeededRandom;
  /// Keep tests whose sides are the same constructor term.
  bool keep_tautologies = false;
  Fuel fuel;

  /// Throws Error when a field is out of range.
  void validate() const;
};

struct Subdomain {
  /// Axiom label followed by one `/k` per unfolding (k is the 1-based rule
  /// index among the unfolded operation's rules).
  std::string id;
  std::string source_axiom;
  std::vector<Equation> constraints;
  Equation conclusion;
  /// Images of the source axiom's variables accumulated by unfolding.
  Substitution binding;
};

struct Position {
  enum class Part { kConclusionLhs, kConclusionRhs, kConstraintLhs, kConstraintRhs };
  Part part = Part::kConclusionLhs;
  std::size_t constraint = 0;
  std::vector<std::size_t> path;

  friend bool operator==(const Position&, const Position&) = default;
};

const Term& term_at(const Subdomain& d, const Position& p);
std::string to_string(const Position& p);

struct SkipRecord {
  std::string subdomain_id;
  std::string reason;
};

/// One subdomain per axiom under test; constraints are the premises.
std::vector<Subdomain> axiom_domains(const Specification& spec);

/// Occurrences f(t1, ..., tn) with f defined by rules and every ti built from
/// constructors and variables, in the order conclusion lhs, conclusion rhs,
/// then constraints, preorder within each. The conclusion's lhs root is
/// never listed.
std::vector<Position> unfoldable_occurrences(const ConditionalRewriteSystem& crs, const Subdomain& d);
std::vector<Position> unfoldable_occurrences(const Specification& spec, const Subdomain& d);

struct UnfoldResult {
  std::vector<Subdomain> children;
  /// Children pruned as infeasible, or the parent when unfolding is refused.
  std::vector<SkipRecord> skipped;
  /// False when the precondition failed and the parent was not split.
  bool unfolded = true;
};

UnfoldResult unfold(const ConditionalRewriteSystem& crs, const Subdomain& d, const Position& occ,
                    const Fuel& fuel = {});
UnfoldResult unfold(const Specification& spec, const Subdomain& d, const Position& occ);

struct DecomposeResult {
  std::vector<Subdomain> leaves;
  std::vector<SkipRecord> skipped;
};

/// Breadth-first unfolding of the leftmost occurrence of every leaf,
/// `hyp.unfold_depth` rounds.
DecomposeResult decompose(const Specification& spec, const Hypotheses& hyp);
DecomposeResult decompose(const ConditionalRewriteSystem& crs, const Hypotheses& hyp);

struct TestCase {
  std::string id;
  Equation equation;
  std::string subdomain_id;
  std::string source_axiom;
  Substitution instantiation;
  /// Rendered observable context applied to the original test, if any.
  std::optional<std::string> context;
};

struct InstantiateResult {
  std::vector<TestCase> tests;
  std::size_t tried = 0;
  std::size_t unknown = 0;
  std::size_t tautologies = 0;
  /// Premise-satisfying tuples found, tautologies included.
  std::size_t solutions = 0;

  bool unsat_within_bound() const { return solutions == 0; }
};

/// Variables of `d` in order of first occurrence: conclusion, then constraints.
std::vector<VarDecl> subdomain_variables(const Subdomain& d);

InstantiateResult instantiate(const ConditionalRewriteSystem& crs, const Subdomain& d, const Hypotheses& hyp);
InstantiateResult instantiate(const Specification& spec, const Subdomain& d, const Hypotheses& hyp);

struct ObservationPlan {
  /// Maximum node count of a context body, hole excluded.
  std::size_t context_depth = 5;
  std::size_t contexts_per_test = 4;
  std::size_t parameter_bound = 3;

  void validate() const;
};

enum class SuiteMode { kAxioms, kObservational, kNormalForm };

std::string to_string(SuiteMode m);

struct TestSuite {
  std::string spec_name;
  std::string spec_sha256;
  SuiteMode mode = SuiteMode::kAxioms;
  Hypotheses hypotheses;
  std::optional<ObservationPlan> plan;
  /// Size bound used by the normal-form mode.
  std::optional<std::size_t> normal_form_bound;
  std::vector<TestCase> tests;
  std::vector<SkipRecord> skipped;
};

/// Hex SHA-256 of the rendered flattened specification.
std::string spec_digest(const Specification& spec);

TestSuite generate(const Specification& spec, const Hypotheses& hyp);

/// t = t' for every ground term t of size <= size_bound whose normal form t'
/// is reached within fuel; terms that fail to normalize are listed as skipped.
TestSuite normal_form_tests(const Specification& spec, std::size_t size_bound, const Fuel& fuel = {},
                            bool keep_tautologies = false);

}  // namespace axiomtest
