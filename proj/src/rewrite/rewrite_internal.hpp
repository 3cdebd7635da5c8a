#pragma once

#include <optional>
#include <string>

#include "axiomtest/rewrite.hpp"

namespace axiomtest::detail {

/// Profile key used to index rules by head symbol.
std::string op_key(const OpSymbol& op);

/// Extends `rho` so that pattern·rho = t. Repeated pattern variables must
/// match equal subterms.
bool match(const Term& pattern, const Term& t, Substitution& rho);

struct OutOfFuel {};

class Engine {
 public:
  Engine(const ConditionalRewriteSystem& crs, const Fuel& fuel, Strategy strategy);

  /// Throws OutOfFuel once the step budget is spent.
  Term normalize(const Term& t, std::size_t depth);
  Term normalize_args(const Term& t, std::size_t depth);
  /// First rule (from index `skip` among the head's rules) that fires at the root.
  std::optional<Term> rewrite_root(const Term& t, std::size_t depth, std::size_t skip);
  std::optional<Term> apply_rule(const RewriteRule& rule, const Term& t, std::size_t depth);

  std::size_t steps() const { return steps_; }

 private:
  const ConditionalRewriteSystem& crs_;
  Fuel fuel_;
  Strategy strategy_;
  std::size_t steps_ = 0;
};

}  // namespace axiomtest::detail
