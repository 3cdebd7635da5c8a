#include "axiomtest/core.hpp"

#include <algorithm>
#include <functional>

namespace axiomtest {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string describe(const Term& t) {
  if (t.is_var()) return t.var_name();
  std::string out = t.op().name;
  if (!t.args().empty()) {
    out += "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ", ";
      out += describe(t.arg(i));
    }
    out += ")";
  }
  return out;
}

}  // namespace

Term Term::var(std::string name, Sort sort) {
  auto n = std::make_shared<Node>();
  n->hash = mix(std::hash<std::string>{}(name), std::hash<std::string>{}(sort.name));
  n->name = std::move(name);
  n->sort = std::move(sort);
  n->ground = false;
  return Term(std::move(n));
}

Term Term::app(OpRef op, std::vector<Term> args) {
  if (!op) throw Error("Term::app: null operation");
  auto n = std::make_shared<Node>();
  n->sort = op->result_sort;
  n->defined_count = op->is_constructor ? 0 : 1;
  std::size_t h = std::hash<std::string>{}(op->name);
  for (const auto& a : args) {
    n->size += a.size();
    n->ground = n->ground && a.is_ground();
    n->defined_count += a.defined_count();
    h = mix(h, a.hash());
  }
  n->hash = mix(h, args.size());
  n->op = std::move(op);
  n->args = std::move(args);
  return Term(std::move(n));
}

const Term& Term::at(std::span<const std::size_t> path) const {
  const Term* cur = this;
  for (std::size_t i : path) cur = &cur->arg(i);
  return *cur;
}

Term Term::replace_at(std::span<const std::size_t> path, const Term& with) const {
  if (path.empty()) return with;
  std::vector<Term> args(node_->args.begin(), node_->args.end());
  args.at(path.front()) = args.at(path.front()).replace_at(path.subspan(1), with);
  return Term::app(node_->op, std::move(args));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.is_var() != b.is_var()) return false;
  if (a.is_var()) return a.var_name() == b.var_name() && a.sort() == b.sort();
  if (!a.op().same_profile(b.op())) return false;
  return std::equal(a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_var()) {
    if (auto c = a.var_name() <=> b.var_name(); c != 0) return c;
    return a.sort() <=> b.sort();
  }
  if (auto c = a.op().name <=> b.op().name; c != 0) return c;
  if (auto c = a.op().arg_sorts <=> b.op().arg_sorts; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(),
                                                b.args().begin(), b.args().end());
}

Sort well_sorted(const Term& t, const Signature& sig) {
  if (t.is_var()) return t.sort();
  const OpSymbol& op = t.op();
  if (!sig.find_op(op.name, op.arg_sorts))
    throw SortError("unknown operation '" + op.name + "' in " + describe(t));
  if (t.args().size() != op.arity())
    throw SortError("arity mismatch: '" + op.name + "' expects " + std::to_string(op.arity()) +
                    " arguments in " + describe(t));
  for (std::size_t i = 0; i < op.arity(); ++i) {
    Sort s = well_sorted(t.arg(i), sig);
    if (s != op.arg_sorts[i])
      throw SortError("sort mismatch at argument " + std::to_string(i + 1) + " of " + describe(t) +
                      ": expected " + op.arg_sorts[i].name + ", got " + s.name + " (" +
                      describe(t.arg(i)) + ")");
  }
  return op.result_sort;
}

bool is_ground(const Term& t) { return t.is_ground(); }

std::size_t term_size(const Term& t) { return t.size(); }

namespace {

void collect_vars(const Term& t, std::vector<VarDecl>& out, std::set<VarDecl>& seen) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    VarDecl v{t.var_name(), t.sort()};
    if (seen.insert(v).second) out.push_back(std::move(v));
    return;
  }
  for (const auto& a : t.args()) collect_vars(a, out, seen);
}

}  // namespace

std::vector<VarDecl> variables_in_order(const Term& t) {
  std::vector<VarDecl> out;
  std::set<VarDecl> seen;
  collect_vars(t, out, seen);
  return out;
}

std::set<VarDecl> variables_of(const Term& t) {
  auto v = variables_in_order(t);
  return {v.begin(), v.end()};
}

std::set<VarDecl> variables_of(const ConditionalAxiom& ax) {
  std::set<VarDecl> out;
  auto add = [&](const Equation& e) {
    out.merge(variables_of(e.lhs));
    out.merge(variables_of(e.rhs));
  };
  for (const auto& p : ax.premises) add(p);
  add(ax.conclusion);
  return out;
}

void Substitution::bind(const VarDecl& v, Term image) {
  if (image.sort() != v.sort)
    throw SortError("substitution for '" + v.name + "' of sort " + v.sort.name +
                    " has image of sort " + image.sort().name);
  map_.insert_or_assign(v.name, std::move(image));
}

const Term* Substitution::find(const std::string& name) const {
  auto it = map_.find(name);
  return it == map_.end() ? nullptr : &it->second;
}

Term apply_substitution(const Term& t, const Substitution& rho) {
  if (t.is_ground() || rho.empty()) return t;
  if (t.is_var()) {
    const Term* img = rho.find(t.var_name());
    return img ? *img : t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(apply_substitution(a, rho));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::app(t.op_ref(), std::move(args)) : t;
}

Equation apply_substitution(const Equation& e, const Substitution& rho) {
  return {apply_substitution(e.lhs, rho), apply_substitution(e.rhs, rho)};
}

Substitution compose(const Substitution& after, const Substitution& first) {
  Substitution out;
  for (const auto& [name, img] : first.entries())
    out.bind({name, img.sort()}, apply_substitution(img, after));
  for (const auto& [name, img] : after.entries())
    if (!first.contains(name)) out.bind({name, img.sort()}, img);
  return out;
}

}  // namespace axiomtest
