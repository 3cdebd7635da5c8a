// Conditional rewriting over oriented axioms, bounded semantic consequence
// for ground equations, and the completeness and confluence desk checks.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "axiomtest/core.hpp"
#include "axiomtest/parser.hpp"

namespace axiomtest {

struct RewriteRule {
  std::string label;
  std::vector<Equation> conditions;
  Term lhs;
  Term rhs;
};

enum class OrientDefectKind {
  kNonOrientable,
  kExtraVariable,
  kConstructorHeadedLhs,
};

std::string to_string(OrientDefectKind kind);

struct OrientDefect {
  OrientDefectKind kind;
  std::string label;
  std::string message;
};

/// Rules in axiom order. Axioms that do not have the rule shape are listed
/// as defects and left out, which marks the system partial.
class ConditionalRewriteSystem {
 public:
  ConditionalRewriteSystem(Specification source, std::vector<RewriteRule> rules,
                           std::vector<OrientDefect> defects);

  const Specification& source() const { return source_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<OrientDefect>& defects() const { return defects_; }
  bool partial() const { return !defects_.empty(); }

  /// Indices into rules() of the rules whose lhs head is `op`, in order.
  const std::vector<std::size_t>& rules_for(const OpSymbol& op) const;
  /// True when some rule has `op` as its lhs head.
  bool is_defined(const OpSymbol& op) const { return !rules_for(op).empty(); }

 private:
  Specification source_;
  std::vector<RewriteRule> rules_;
  std::vector<OrientDefect> defects_;
  std::map<std::string, std::vector<std::size_t>> by_head_;
};

ConditionalRewriteSystem orient(const Specification& spec);

struct Fuel {
  std::size_t max_steps = 10000;
  std::size_t max_condition_depth = 8;
};

enum class Strategy { kInnermostLeftmost, kInnermostRightmost };

enum class NormalStatus { kNormal, kFuelExhausted };

struct NormalizeResult {
  Term term;
  NormalStatus status = NormalStatus::kNormal;
  std::size_t steps = 0;

  bool ok() const { return status == NormalStatus::kNormal; }
};

/// Innermost conditional rewriting; the first applicable rule in axiom order
/// fires. A rule fires only when each of its instantiated conditions holds,
/// judged one condition level deeper. Every rule application, including
/// those made while evaluating conditions, consumes one step.
NormalizeResult normalize(const ConditionalRewriteSystem& crs, const Term& t, const Fuel& fuel = {},
                          Strategy strategy = Strategy::kInnermostLeftmost);

enum class UnknownReason { kFuelExhausted, kStuckTerm };

class TriState {
 public:
  enum class Kind { kHolds, kFailsToHold, kUnknown };

  static TriState holds() { return TriState(Kind::kHolds, UnknownReason::kStuckTerm); }
  static TriState fails_to_hold() { return TriState(Kind::kFailsToHold, UnknownReason::kStuckTerm); }
  static TriState unknown(UnknownReason r) { return TriState(Kind::kUnknown, r); }

  Kind kind() const { return kind_; }
  bool is_holds() const { return kind_ == Kind::kHolds; }
  bool is_fails() const { return kind_ == Kind::kFailsToHold; }
  bool is_unknown() const { return kind_ == Kind::kUnknown; }
  /// Meaningful only for Unknown.
  UnknownReason reason() const { return reason_; }

  friend bool operator==(const TriState& a, const TriState& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kUnknown || a.reason_ == b.reason_);
  }

 private:
  TriState(Kind k, UnknownReason r) : kind_(k), reason_(r) {}
  Kind kind_;
  UnknownReason reason_;
};

std::string to_string(const TriState& v);

/// Holds when both sides reach the same normal form, FailsToHold when they
/// reach distinct constructor terms, Unknown otherwise.
TriState holds(const ConditionalRewriteSystem& crs, const Equation& e, const Fuel& fuel = {});

struct CompletenessReport {
  /// Ground terms with no constructor normal form within fuel.
  std::vector<Term> condition1_witnesses;
  /// Constructor terms that a rule rewrites, reported as orient defects.
  std::vector<std::string> condition2_witnesses;
  std::size_t terms_checked = 0;

  bool complete() const { return condition1_witnesses.empty() && condition2_witnesses.empty(); }
};

/// Normalizes every ground term of size <= size_bound that has exactly one
/// non-constructor occurrence.
CompletenessReport check_constructor_completeness(const Specification& spec, std::size_t size_bound,
                                                  const Fuel& fuel = {});

struct ConfluenceDiscrepancy {
  Term term;
  Term first;
  Term second;
};

struct ConfluenceReport {
  std::vector<ConfluenceDiscrepancy> discrepancies;
  std::size_t terms_checked = 0;

  bool confluent() const { return discrepancies.empty(); }
};

/// For ground terms with at most two non-constructor occurrences, compares
/// the leftmost and rightmost innermost normal forms, and the normal forms
/// reached through every rule applicable at the root.
ConfluenceReport check_ground_confluence(const Specification& spec, std::size_t size_bound,
                                         const Fuel& fuel = {});

class EvalError : public Error {
 public:
  using Error::Error;
};

/// Constructor normal form of `t`. Throws EvalError when fuel runs out or
/// the normal form still contains a defined operation.
Term reference_eval(const ConditionalRewriteSystem& crs, const Term& t, const Fuel& fuel = {});
Term reference_eval(const Specification& spec, const Term& t, const Fuel& fuel = {});

/// Replaces the axioms of `base` named by the patch's `override` list with
/// the patch versions.
Specification apply_mutation(const Specification& base, const Specification& patch);

/// Loads `mutants/<id>.spec` from the search path or the shipped catalog.
/// Throws SpecError for unknown ids.
Specification load_mutation(const std::string& id, const SearchPath& search_path = {});

/// Shipped catalog ids, M0 to M5.
std::vector<std::string> mutation_catalog();

/// Directory holding the shipped specifications.
std::filesystem::path shipped_spec_dir();

Term mutant_eval(const Specification& spec, const std::string& mutation_id, const Term& t,
                 const Fuel& fuel = {}, const SearchPath& search_path = {});

}  // namespace axiomtest
