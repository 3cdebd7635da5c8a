#include "axiomtest/rewrite.hpp"

#include <algorithm>

#include "rewrite_internal.hpp"

namespace axiomtest {

std::string to_string(OrientDefectKind kind) {
  switch (kind) {
    case OrientDefectKind::kNonOrientable: return "non-orientable axiom";
    case OrientDefectKind::kExtraVariable: return "extra variable";
    case OrientDefectKind::kConstructorHeadedLhs: return "constructor-headed lhs";
  }
  return "defect";
}

std::string to_string(const TriState& v) {
  switch (v.kind()) {
    case TriState::Kind::kHolds: return "Holds";
    case TriState::Kind::kFailsToHold: return "FailsToHold";
    case TriState::Kind::kUnknown:
      return v.reason() == UnknownReason::kFuelExhausted ? "Unknown(fuel-exhausted)" : "Unknown(stuck-term)";
  }
  return "Unknown";
}

namespace detail {

std::string op_key(const OpSymbol& op) {
  std::string key = op.name + "(";
  for (std::size_t i = 0; i < op.arg_sorts.size(); ++i) {
    if (i) key += ",";
    key += op.arg_sorts[i].name;
  }
  return key + ")";
}

bool match(const Term& pattern, const Term& t, Substitution& rho) {
  if (pattern.is_var()) {
    if (pattern.sort() != t.sort()) return false;
    if (const Term* bound = rho.find(pattern.var_name())) return *bound == t;
    rho.bind({pattern.var_name(), pattern.sort()}, t);
    return true;
  }
  if (!t.is_app() || !pattern.op().same_profile(t.op())) return false;
  for (std::size_t i = 0; i < pattern.args().size(); ++i)
    if (!match(pattern.arg(i), t.arg(i), rho)) return false;
  return true;
}

Engine::Engine(const ConditionalRewriteSystem& crs, const Fuel& fuel, Strategy strategy)
    : crs_(crs), fuel_(fuel), strategy_(strategy) {}

Term Engine::normalize(const Term& t, std::size_t depth) {
  if (t.is_var() || t.is_constructor_term()) return t;
  Term reduced = normalize_args(t, depth);
  if (auto next = rewrite_root(reduced, depth, 0)) return normalize(*next, depth);
  return reduced;
}

Term Engine::normalize_args(const Term& t, std::size_t depth) {
  std::vector<Term> args(t.args().begin(), t.args().end());
  if (args.empty()) return t;
  bool changed = false;
  auto step = [&](std::size_t i) {
    Term n = normalize(args[i], depth);
    if (!(n == args[i])) {
      args[i] = std::move(n);
      changed = true;
    }
  };
  if (strategy_ == Strategy::kInnermostLeftmost) {
    for (std::size_t i = 0; i < args.size(); ++i) step(i);
  } else {
    for (std::size_t i = args.size(); i-- > 0;) step(i);
  }
  return changed ? Term::app(t.op_ref(), std::move(args)) : t;
}

std::optional<Term> Engine::apply_rule(const RewriteRule& rule, const Term& t, std::size_t depth) {
  Substitution rho;
  if (!match(rule.lhs, t, rho)) return std::nullopt;
  for (const auto& cond : rule.conditions) {
    if (depth + 1 > fuel_.max_condition_depth) return std::nullopt;
    Equation inst = apply_substitution(cond, rho);
    if (!(normalize(inst.lhs, depth + 1) == normalize(inst.rhs, depth + 1))) return std::nullopt;
  }
  if (++steps_ > fuel_.max_steps) throw OutOfFuel{};
  return apply_substitution(rule.rhs, rho);
}

std::optional<Term> Engine::rewrite_root(const Term& t, std::size_t depth, std::size_t skip) {
  const auto& idx = crs_.rules_for(t.op());
  for (std::size_t k = skip; k < idx.size(); ++k)
    if (auto next = apply_rule(crs_.rules()[idx[k]], t, depth)) return next;
  return std::nullopt;
}

}  // namespace detail

ConditionalRewriteSystem::ConditionalRewriteSystem(Specification source, std::vector<RewriteRule> rules,
                                                   std::vector<OrientDefect> defects)
    : source_(std::move(source)), rules_(std::move(rules)), defects_(std::move(defects)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) by_head_[detail::op_key(rules_[i].lhs.op())].push_back(i);
}

const std::vector<std::size_t>& ConditionalRewriteSystem::rules_for(const OpSymbol& op) const {
  static const std::vector<std::size_t> kNone;
  auto it = by_head_.find(detail::op_key(op));
  return it == by_head_.end() ? kNone : it->second;
}

ConditionalRewriteSystem orient(const Specification& spec) {
  std::vector<RewriteRule> rules;
  std::vector<OrientDefect> defects;
  for (const auto& ax : spec.axioms) {
    const Term& lhs = ax.conclusion.lhs;
    if (lhs.is_var()) {
      defects.push_back({OrientDefectKind::kNonOrientable, ax.label, "left-hand side is a variable"});
      continue;
    }
    if (lhs.op().is_constructor) {
      defects.push_back({OrientDefectKind::kConstructorHeadedLhs, ax.label,
                         "left-hand side is headed by constructor '" + lhs.op().name + "'"});
      continue;
    }
    auto bad_arg = std::find_if(lhs.args().begin(), lhs.args().end(),
                                [](const Term& a) { return !a.is_constructor_term(); });
    if (bad_arg != lhs.args().end()) {
      defects.push_back({OrientDefectKind::kNonOrientable, ax.label,
                         "argument " + render_term(*bad_arg) + " is not a constructor pattern"});
      continue;
    }
    std::set<VarDecl> allowed = variables_of(lhs);
    std::set<VarDecl> used = variables_of(ax.conclusion.rhs);
    for (const auto& p : ax.premises) {
      used.merge(variables_of(p.lhs));
      used.merge(variables_of(p.rhs));
    }
    std::vector<std::string> extra;
    for (const auto& v : used)
      if (!allowed.count(v)) extra.push_back(v.name);
    if (!extra.empty()) {
      std::string names;
      for (const auto& n : extra) names += (names.empty() ? "" : ", ") + n;
      defects.push_back({OrientDefectKind::kExtraVariable, ax.label, "variables not bound by the lhs: " + names});
      continue;
    }
    rules.push_back({ax.label, ax.premises, lhs, ax.conclusion.rhs});
  }
  return ConditionalRewriteSystem(spec, std::move(rules), std::move(defects));
}

NormalizeResult normalize(const ConditionalRewriteSystem& crs, const Term& t, const Fuel& fuel, Strategy strategy) {
  detail::Engine engine(crs, fuel, strategy);
  try {
    Term nf = engine.normalize(t, 0);
    return {nf, NormalStatus::kNormal, engine.steps()};
  } catch (const detail::OutOfFuel&) {
    return {t, NormalStatus::kFuelExhausted, engine.steps()};
  }
}

TriState holds(const ConditionalRewriteSystem& crs, const Equation& e, const Fuel& fuel) {
  NormalizeResult l = normalize(crs, e.lhs, fuel);
  NormalizeResult r = normalize(crs, e.rhs, fuel);
  if (!l.ok() || !r.ok()) return TriState::unknown(UnknownReason::kFuelExhausted);
  if (l.term == r.term) return TriState::holds();
  if (l.term.is_constructor_term() && r.term.is_constructor_term()) return TriState::fails_to_hold();
  return TriState::unknown(UnknownReason::kStuckTerm);
}

Term reference_eval(const ConditionalRewriteSystem& crs, const Term& t, const Fuel& fuel) {
  NormalizeResult r = normalize(crs, t, fuel);
  if (!r.ok()) throw EvalError("fuel exhausted after " + std::to_string(r.steps) + " steps on " + render_term(t));
  if (!r.term.is_constructor_term()) throw EvalError("stuck term " + render_term(r.term));
  return r.term;
}

Term reference_eval(const Specification& spec, const Term& t, const Fuel& fuel) {
  return reference_eval(orient(spec), t, fuel);
}

}  // namespace axiomtest
