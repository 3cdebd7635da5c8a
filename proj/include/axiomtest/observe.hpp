// Observable contexts and observational test suites.
#pragma once

#include <string>
#include <vector>

#include "axiomtest/select.hpp"

namespace axiomtest {

/// Name of the hole variable in context bodies.
inline constexpr const char* kHoleName = "z";

struct ObservableContext {
  /// Contains the hole exactly once; parameters are free variables.
  Term body;
  Sort hole_sort;
  Sort result_sort;
  /// Parameter variables in preorder, named x, x1, x2, ...
  std::vector<VarDecl> parameters;
};

/// Node count of the body, hole excluded.
std::size_t context_size(const ObservableContext& c);

/// Builds a context from an explicit body holding the variable `z`.
ObservableContext make_context(const Term& body, const Sort& hole_sort);

/// True when the body has an observable sort, holds exactly one hole and no
/// strict subterm containing the hole has an observable sort.
bool is_minimal_context(const Term& body, const Signature& sig);

Term plug(const ObservableContext& c, const Term& t);

/// Every minimal context of size <= plan.context_depth, ordered by size then
/// structure. Empty when the hole sort is observable.
std::vector<ObservableContext> enumerate_minimal_contexts(const Specification& spec, const Sort& hole_sort,
                                                          const ObservationPlan& plan);

/// Wraps a test of non-observable sort into context-applied tests. Parameters
/// are instantiated exhaustively up to plan.parameter_bound, taking the i-th
/// instantiation of every context in turn, at most plan.contexts_per_test
/// tests in total. Tests of observable sort are returned unchanged.
std::vector<TestCase> observe_test(const Specification& spec, const TestCase& tc,
                                   const std::vector<ObservableContext>& contexts, const ObservationPlan& plan);

/// Premises are discharged by the reference rewriting only. Subdomains
/// whose non-observable premises cannot be discharged are skipped.
TestSuite generate_observational(const Specification& spec, const Hypotheses& hyp, const ObservationPlan& plan);

}  // namespace axiomtest
