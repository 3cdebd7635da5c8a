#include <sstream>

#include "axiomtest/parser.hpp"

namespace axiomtest {

namespace {

bool is_cons(const Term& t) { return t.is_app() && t.op().name == "::" && t.op().arity() == 2; }

// Length of a ground succ-tower over the constant 0, if `t` is one.
std::optional<unsigned long long> numeral_value(const Term& t) {
  unsigned long long n = 0;
  const Term* cur = &t;
  while (cur->is_app() && cur->op().name == "succ" && cur->op().arity() == 1 &&
         cur->op().arg_sorts[0] == cur->op().result_sort) {
    ++n;
    cur = &cur->arg(0);
  }
  if (cur->is_app() && cur->op().name == "0" && cur->op().is_constant() && cur->sort() == t.sort()) return n;
  return std::nullopt;
}

void render(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += t.var_name();
    return;
  }
  if (auto n = numeral_value(t)) {
    out += std::to_string(*n);
    return;
  }
  if (is_cons(t)) {
    const Term& head = t.arg(0);
    if (is_cons(head)) {
      out += "(";
      render(head, out);
      out += ")";
    } else {
      render(head, out);
    }
    out += " :: ";
    render(t.arg(1), out);
    return;
  }
  out += t.op().name;
  if (t.args().empty()) return;
  out += "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    render(t.arg(i), out);
  }
  out += ")";
}

std::string decl_name(const std::string& name) { return name == "::" ? "__::__" : name; }

void render_op(const OpSymbol& op, std::ostringstream& out) {
  out << "  " << decl_name(op.name) << " :";
  for (std::size_t i = 0; i < op.arg_sorts.size(); ++i) out << (i ? ", " : " ") << op.arg_sorts[i].name;
  out << " -> " << op.result_sort.name << "\n";
}

}  // namespace

std::string render_term(const Term& t) {
  std::string out;
  render(t, out);
  return out;
}

std::string render_equation(const Equation& e) { return render_term(e.lhs) + " = " + render_term(e.rhs); }

std::string render_axiom(const ConditionalAxiom& ax) {
  std::string out = "[" + ax.label + "] ";
  for (std::size_t i = 0; i < ax.premises.size(); ++i) {
    if (i) out += " & ";
    out += render_equation(ax.premises[i]);
  }
  if (!ax.premises.empty()) out += " => ";
  return out + render_equation(ax.conclusion);
}

std::string render_spec(const Specification& spec) {
  const Signature& sig = spec.signature;
  std::ostringstream out;
  out << "spec " << spec.name << "\n";
  out << "sorts";
  for (std::size_t i = 0; i < sig.sorts().size(); ++i) out << (i ? ", " : " ") << sig.sorts()[i].name;
  out << "\n";
  if (!sig.all_observable()) {
    out << "observable";
    bool first = true;
    for (const auto& s : sig.sorts())
      if (sig.is_observable(s)) {
        out << (first ? " " : ", ") << s.name;
        first = false;
      }
    out << "\n";
  }
  out << "constructors\n";
  for (const auto& op : sig.ops())
    if (op->is_constructor) render_op(*op, out);
  out << "ops\n";
  for (const auto& op : sig.ops())
    if (!op->is_constructor) render_op(*op, out);
  out << "vars\n";
  for (const auto& v : sig.vars()) out << "  " << v.name << " : " << v.sort.name << "\n";
  out << "axioms\n";
  for (const auto& ax : spec.axioms) out << "  " << render_axiom(ax) << "\n";
  out << "end\n";
  return out.str();
}

bool structurally_equal(const Specification& a, const Specification& b) {
  const Signature& x = a.signature;
  const Signature& y = b.signature;
  if (x.sorts() != y.sorts() || x.vars() != y.vars() || x.observable_sorts() != y.observable_sorts()) return false;
  if (x.ops().size() != y.ops().size() || a.axioms.size() != b.axioms.size()) return false;
  // Constructors and other operations are compared as two ordered lists,
  // the order the text format can express.
  auto split = [](const Signature& sig, bool constructors) {
    std::vector<OpRef> out;
    for (const auto& op : sig.ops())
      if (op->is_constructor == constructors) out.push_back(op);
    return out;
  };
  for (bool constructors : {true, false}) {
    auto px = split(x, constructors);
    auto py = split(y, constructors);
    if (px.size() != py.size()) return false;
    for (std::size_t i = 0; i < px.size(); ++i)
      if (!px[i]->same_profile(*py[i]) || px[i]->result_sort != py[i]->result_sort) return false;
  }
  for (std::size_t i = 0; i < a.axioms.size(); ++i) {
    const auto& p = a.axioms[i];
    const auto& q = b.axioms[i];
    if (p.label != q.label || p.premises != q.premises || !(p.conclusion == q.conclusion)) return false;
  }
  return true;
}

}  // namespace axiomtest
