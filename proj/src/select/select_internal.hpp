#pragma once

#include <optional>
#include <set>
#include <string>

#include "axiomtest/select.hpp"

namespace axiomtest::detail {

/// Most general unifier; variables in `prefer` are bound first when two
/// variables meet.
std::optional<Substitution> unify(const Term& a, const Term& b, const std::set<std::string>& prefer);

std::set<std::string> root_variables(const ConditionalRewriteSystem& crs, const Subdomain& d);

void apply_to_subdomain(Subdomain& d, const Substitution& sigma, const std::set<std::string>& roots);

/// Drops trivial and proven constraints and solves constructor equations.
/// Returns the reason when a constraint can never hold.
std::optional<std::string> simplify(const ConditionalRewriteSystem& crs, Subdomain& d, const Fuel& fuel,
                                    const std::set<std::string>& roots);

}  // namespace axiomtest::detail
