#include <algorithm>
#include <map>

#include "axiomtest/parser.hpp"
#include "axiomtest/select.hpp"
#include "select_internal.hpp"

namespace axiomtest {

namespace detail {

namespace {

Term resolve(const Term& t, const std::map<std::string, Term>& sigma) {
  if (sigma.empty() || t.is_ground()) return t;
  if (t.is_var()) {
    auto it = sigma.find(t.var_name());
    return it == sigma.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(resolve(a, sigma));
  return Term::app(t.op_ref(), std::move(args));
}

bool occurs(const std::string& name, const Term& t) {
  if (t.is_var()) return t.var_name() == name;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return occurs(name, a); });
}

void bind_var(std::map<std::string, Term>& sigma, const std::string& name, const Term& image) {
  std::map<std::string, Term> single{{name, image}};
  for (auto& [k, v] : sigma) v = resolve(v, single);
  sigma.emplace(name, image);
}

bool unify_into(const Term& a0, const Term& b0, std::map<std::string, Term>& sigma,
                const std::set<std::string>& prefer) {
  Term a = resolve(a0, sigma);
  Term b = resolve(b0, sigma);
  if (a.sort() != b.sort()) return false;
  if (a.is_var() && b.is_var() && a.var_name() == b.var_name()) return true;
  if (a.is_var() && b.is_var() && prefer.count(b.var_name()) && !prefer.count(a.var_name())) std::swap(a, b);
  if (a.is_var()) {
    if (occurs(a.var_name(), b)) return false;
    bind_var(sigma, a.var_name(), b);
    return true;
  }
  if (b.is_var()) {
    if (occurs(b.var_name(), a)) return false;
    bind_var(sigma, b.var_name(), a);
    return true;
  }
  if (!a.op().same_profile(b.op())) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!unify_into(a.arg(i), b.arg(i), sigma, prefer)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, const std::set<std::string>& prefer) {
  std::map<std::string, Term> sigma;
  if (!unify_into(a, b, sigma, prefer)) return std::nullopt;
  Substitution out;
  for (const auto& [k, v] : sigma) out.bind({k, v.sort()}, v);
  return out;
}

std::set<std::string> root_variables(const ConditionalRewriteSystem& crs, const Subdomain& d) {
  std::set<std::string> out;
  if (const ConditionalAxiom* ax = crs.source().find_axiom(d.source_axiom))
    for (const auto& v : variables_of(*ax)) out.insert(v.name);
  return out;
}

void apply_to_subdomain(Subdomain& d, const Substitution& sigma, const std::set<std::string>& roots) {
  for (auto& c : d.constraints) c = apply_substitution(c, sigma);
  d.conclusion = apply_substitution(d.conclusion, sigma);
  Substitution composed = compose(sigma, d.binding);
  Substitution kept;
  for (const auto& [name, img] : composed.entries())
    if (roots.count(name)) kept.bind({name, img.sort()}, img);
  d.binding = std::move(kept);
}

std::optional<std::string> simplify(const ConditionalRewriteSystem& crs, Subdomain& d, const Fuel& fuel,
                                    const std::set<std::string>& roots) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < d.constraints.size(); ++i) {
      const Equation c = d.constraints[i];
      if (c.lhs == c.rhs) {
        d.constraints.erase(d.constraints.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (c.is_ground()) {
        TriState v = holds(crs, c, fuel);
        if (v.is_fails()) return render_equation(c) + " cannot hold";
        if (v.is_holds()) {
          d.constraints.erase(d.constraints.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        continue;
      }
      if (c.lhs.is_constructor_term() && c.rhs.is_constructor_term()) {
        auto sigma = unify(c.lhs, c.rhs, {});
        if (!sigma) return render_equation(c) + " has no constructor solution";
        d.constraints.erase(d.constraints.begin() + static_cast<std::ptrdiff_t>(i));
        apply_to_subdomain(d, *sigma, roots);
        changed = true;
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  for (const auto& v : variables_of(t)) out.insert(v.name);
}

std::set<std::string> taken_names(const Subdomain& d, const std::set<std::string>& roots) {
  std::set<std::string> out = roots;
  collect_vars(d.conclusion.lhs, out);
  collect_vars(d.conclusion.rhs, out);
  for (const auto& c : d.constraints) {
    collect_vars(c.lhs, out);
    collect_vars(c.rhs, out);
  }
  for (const auto& [name, img] : d.binding.entries()) {
    out.insert(name);
    collect_vars(img, out);
  }
  return out;
}

/// Renames every variable of `rule` with added primes, avoiding `taken`.
RewriteRule rename_apart(const RewriteRule& rule, std::set<std::string>& taken, std::set<std::string>& fresh) {
  Substitution rename;
  for (const auto& v : variables_of(rule.lhs)) {
    std::string name = v.name + "'";
    while (taken.count(name)) name += "'";
    taken.insert(name);
    fresh.insert(name);
    rename.bind(v, Term::var(name, v.sort));
  }
  RewriteRule out{rule.label, {}, apply_substitution(rule.lhs, rename), apply_substitution(rule.rhs, rename)};
  for (const auto& c : rule.conditions) out.conditions.push_back(apply_substitution(c, rename));
  return out;
}

Term* slot(Subdomain& d, const Position& p) {
  switch (p.part) {
    case Position::Part::kConclusionLhs: return &d.conclusion.lhs;
    case Position::Part::kConclusionRhs: return &d.conclusion.rhs;
    case Position::Part::kConstraintLhs: return &d.constraints.at(p.constraint).lhs;
    case Position::Part::kConstraintRhs: return &d.constraints.at(p.constraint).rhs;
  }
  return nullptr;
}

void scan(const ConditionalRewriteSystem& crs, const Term& t, Position& at, bool skip_root,
          std::vector<Position>& out) {
  if (t.is_var() || t.is_constructor_term()) return;
  bool innermost = std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return a.is_constructor_term(); });
  if (!skip_root && innermost && crs.is_defined(t.op())) out.push_back(at);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    at.path.push_back(i);
    scan(crs, t.arg(i), at, false, out);
    at.path.pop_back();
  }
}

}  // namespace

const Term& term_at(const Subdomain& d, const Position& p) {
  return slot(const_cast<Subdomain&>(d), p)->at(p.path);
}

std::string to_string(const Position& p) {
  std::string out;
  switch (p.part) {
    case Position::Part::kConclusionLhs: out = "conclusion.lhs"; break;
    case Position::Part::kConclusionRhs: out = "conclusion.rhs"; break;
    case Position::Part::kConstraintLhs: out = "constraint" + std::to_string(p.constraint) + ".lhs"; break;
    case Position::Part::kConstraintRhs: out = "constraint" + std::to_string(p.constraint) + ".rhs"; break;
  }
  for (auto i : p.path) out += "." + std::to_string(i);
  return out;
}

std::vector<Subdomain> axiom_domains(const Specification& spec) {
  std::vector<Subdomain> out;
  for (const ConditionalAxiom* ax : axioms_under_test(spec))
    out.push_back({ax->label, ax->label, ax->premises, ax->conclusion, {}});
  return out;
}

std::vector<Position> unfoldable_occurrences(const ConditionalRewriteSystem& crs, const Subdomain& d) {
  std::vector<Position> out;
  Position at;
  at.part = Position::Part::kConclusionLhs;
  scan(crs, d.conclusion.lhs, at, true, out);
  at.part = Position::Part::kConclusionRhs;
  scan(crs, d.conclusion.rhs, at, false, out);
  for (std::size_t i = 0; i < d.constraints.size(); ++i) {
    at.constraint = i;
    at.part = Position::Part::kConstraintLhs;
    scan(crs, d.constraints[i].lhs, at, false, out);
    at.part = Position::Part::kConstraintRhs;
    scan(crs, d.constraints[i].rhs, at, false, out);
  }
  return out;
}

std::vector<Position> unfoldable_occurrences(const Specification& spec, const Subdomain& d) {
  return unfoldable_occurrences(orient(spec), d);
}

UnfoldResult unfold(const ConditionalRewriteSystem& crs, const Subdomain& d, const Position& occ, const Fuel& fuel) {
  UnfoldResult result;
  const Term& target = term_at(d, occ);
  if (target.is_var() || !crs.is_defined(target.op())) {
    result.unfolded = false;
    result.skipped.push_back({d.id, "occurrence " + render_term(target) + " is not a defined operation"});
    return result;
  }
  const auto& idx = crs.rules_for(target.op());
  const std::set<std::string> roots = detail::root_variables(crs, d);
  const std::set<std::string> taken = taken_names(d, roots);

  // Siblings are renamed independently; the overlap check renames them apart.
  std::vector<RewriteRule> apart;
  std::set<std::string> all_taken = taken, unused;
  for (std::size_t k : idx) apart.push_back(rename_apart(crs.rules()[k], all_taken, unused));
  for (std::size_t i = 0; i < apart.size(); ++i) {
    for (std::size_t j = i + 1; j < apart.size(); ++j) {
      if (!apart[i].conditions.empty() || !apart[j].conditions.empty()) continue;
      if (detail::unify(apart[i].lhs, apart[j].lhs, {})) {
        result.unfolded = false;
        result.skipped.push_back({d.id, "overlapping unconditional rules " + apart[i].label + " and " +
                                            apart[j].label + " for " + target.op().name});
        return result;
      }
    }
  }

  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::set<std::string> rule_taken = taken, fresh;
    const RewriteRule rule = rename_apart(crs.rules()[idx[k]], rule_taken, fresh);
    auto sigma = detail::unify(target, rule.lhs, fresh);
    if (!sigma) continue;
    Subdomain child = d;
    child.id = d.id + "/" + std::to_string(k + 1);
    Term* s = slot(child, occ);
    *s = s->replace_at(occ.path, rule.rhs);
    for (const auto& c : rule.conditions) child.constraints.push_back(c);
    detail::apply_to_subdomain(child, *sigma, roots);
    if (auto why = detail::simplify(crs, child, fuel, roots)) {
      result.skipped.push_back({child.id, "infeasible: " + *why});
      continue;
    }
    result.children.push_back(std::move(child));
  }
  return result;
}

UnfoldResult unfold(const Specification& spec, const Subdomain& d, const Position& occ) {
  return unfold(orient(spec), d, occ);
}

DecomposeResult decompose(const ConditionalRewriteSystem& crs, const Hypotheses& hyp) {
  DecomposeResult result;
  result.leaves = axiom_domains(crs.source());
  for (std::size_t round = 0; round < hyp.unfold_depth; ++round) {
    std::vector<Subdomain> next;
    for (auto& leaf : result.leaves) {
      auto occs = unfoldable_occurrences(crs, leaf);
      if (occs.empty()) {
        next.push_back(std::move(leaf));
        continue;
      }
      UnfoldResult r = unfold(crs, leaf, occs.front(), hyp.fuel);
      result.skipped.insert(result.skipped.end(), r.skipped.begin(), r.skipped.end());
      if (!r.unfolded) {
        next.push_back(std::move(leaf));
        continue;
      }
      for (auto& c : r.children) next.push_back(std::move(c));
    }
    result.leaves = std::move(next);
  }
  return result;
}

DecomposeResult decompose(const Specification& spec, const Hypotheses& hyp) { return decompose(orient(spec), hyp); }

}  // namespace axiomtest
