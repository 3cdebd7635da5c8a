#include "axiomtest/core.hpp"

#include <algorithm>

namespace axiomtest {

OpRef Signature::add_op(OpSymbol op) {
  auto ref = std::make_shared<const OpSymbol>(std::move(op));
  ops_.push_back(ref);
  return ref;
}

bool Signature::has_sort(const Sort& s) const {
  return std::find(sorts_.begin(), sorts_.end(), s) != sorts_.end();
}

bool Signature::is_observable(const Sort& s) const {
  return !observable_ || observable_->count(s) != 0;
}

std::set<Sort> Signature::observable_sorts() const {
  if (observable_) return *observable_;
  return {sorts_.begin(), sorts_.end()};
}

OpRef Signature::find_op(const std::string& name, std::span<const Sort> arg_sorts) const {
  for (const auto& op : ops_)
    if (op->name == name && std::equal(op->arg_sorts.begin(), op->arg_sorts.end(),
                                       arg_sorts.begin(), arg_sorts.end()))
      return op;
  return nullptr;
}

std::vector<OpRef> Signature::find_ops(const std::string& name, std::size_t arity) const {
  std::vector<OpRef> out;
  for (const auto& op : ops_)
    if (op->name == name && op->arity() == arity) out.push_back(op);
  return out;
}

std::optional<VarDecl> Signature::find_var(const std::string& name) const {
  for (const auto& v : vars_)
    if (v.name == name) return v;
  return std::nullopt;
}

std::vector<OpRef> Signature::constructors_of(const Sort& s) const {
  std::vector<OpRef> out;
  for (const auto& op : ops_)
    if (op->is_constructor && op->result_sort == s) out.push_back(op);
  return out;
}

std::vector<OpRef> Signature::ops_of(const Sort& s) const {
  std::vector<OpRef> out;
  for (const auto& op : ops_)
    if (op->result_sort == s) out.push_back(op);
  return out;
}

std::size_t Signature::op_index(const OpSymbol& op) const {
  for (std::size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i]->same_profile(op)) return i;
  return ops_.size();
}

std::string to_string(DefectKind kind) {
  switch (kind) {
    case DefectKind::kUninhabitedSort: return "uninhabited sort";
    case DefectKind::kDuplicateOperation: return "duplicate operation";
    case DefectKind::kDuplicateSort: return "duplicate sort";
    case DefectKind::kDuplicateVariable: return "duplicate variable";
    case DefectKind::kUndeclaredSort: return "undeclared sort";
    case DefectKind::kAmbiguousName: return "ambiguous name";
  }
  return "unknown defect";
}

std::vector<Defect> validate_signature(const Signature& sig) {
  std::vector<Defect> out;
  auto defect = [&](DefectKind k, const std::string& symbol, const std::string& detail) {
    out.push_back({k, symbol, to_string(k) + " '" + symbol + "'" + (detail.empty() ? "" : ": " + detail)});
  };

  std::set<Sort> seen_sorts;
  for (const auto& s : sig.sorts())
    if (!seen_sorts.insert(s).second) defect(DefectKind::kDuplicateSort, s.name, "");

  for (std::size_t i = 0; i < sig.ops().size(); ++i) {
    const OpSymbol& op = *sig.ops()[i];
    for (std::size_t j = 0; j < i; ++j)
      if (sig.ops()[j]->same_profile(op)) {
        defect(DefectKind::kDuplicateOperation, op.name, "declared more than once with the same argument sorts");
        break;
      }
    for (const auto& s : op.arg_sorts)
      if (!sig.has_sort(s)) defect(DefectKind::kUndeclaredSort, s.name, "used by operation '" + op.name + "'");
    if (!sig.has_sort(op.result_sort))
      defect(DefectKind::kUndeclaredSort, op.result_sort.name, "result of operation '" + op.name + "'");
  }

  std::set<std::string> seen_vars;
  for (const auto& v : sig.vars()) {
    if (!seen_vars.insert(v.name).second) defect(DefectKind::kDuplicateVariable, v.name, "");
    if (!sig.has_sort(v.sort)) defect(DefectKind::kUndeclaredSort, v.sort.name, "sort of variable '" + v.name + "'");
    if (!sig.find_ops(v.name, 0).empty())
      defect(DefectKind::kAmbiguousName, v.name, "variable shadows a constant of the same name");
  }

  for (const auto& s : sig.observable_sorts())
    if (!sig.has_sort(s)) defect(DefectKind::kUndeclaredSort, s.name, "declared observable");

  // Least fixpoint of sorts reachable by ground constructor terms.
  std::set<Sort> inhabited;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& op : sig.ops()) {
      if (!op->is_constructor || inhabited.count(op->result_sort)) continue;
      bool ok = std::all_of(op->arg_sorts.begin(), op->arg_sorts.end(),
                            [&](const Sort& s) { return inhabited.count(s) != 0; });
      if (ok) grew = inhabited.insert(op->result_sort).second || grew;
    }
  }
  for (const auto& s : seen_sorts)
    if (!inhabited.count(s)) defect(DefectKind::kUninhabitedSort, s.name, "no ground constructor term of this sort");

  return out;
}

const ConditionalAxiom* Specification::find_axiom(const std::string& label) const {
  for (const auto& ax : axioms)
    if (ax.label == label) return &ax;
  return nullptr;
}

std::vector<const ConditionalAxiom*> axioms_under_test(const Specification& spec) {
  std::set<Sort> own(spec.own_sorts.begin(), spec.own_sorts.end());
  std::vector<const ConditionalAxiom*> out;
  auto mentions = [&](const Term& t, auto&& self) -> bool {
    if (own.count(t.sort())) return true;
    if (t.is_var()) return false;
    for (const auto& s : t.op().arg_sorts)
      if (own.count(s)) return true;
    for (const auto& a : t.args())
      if (self(a, self)) return true;
    return false;
  };
  for (const auto& ax : spec.axioms) {
    bool hit = mentions(ax.conclusion.lhs, mentions) || mentions(ax.conclusion.rhs, mentions);
    for (const auto& p : ax.premises) hit = hit || mentions(p.lhs, mentions) || mentions(p.rhs, mentions);
    if (hit) out.push_back(&ax);
  }
  return out;
}

}  // namespace axiomtest
