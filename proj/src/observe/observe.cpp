#include "axiomtest/observe.hpp"

#include <algorithm>
#include <map>

#include "axiomtest/parser.hpp"

namespace axiomtest {

namespace {

bool has_hole(const Term& t) {
  if (t.is_var()) return t.var_name() == kHoleName;
  return std::any_of(t.args().begin(), t.args().end(), has_hole);
}

std::size_t count_holes(const Term& t) {
  if (t.is_var()) return t.var_name() == kHoleName ? 1 : 0;
  std::size_t n = 0;
  for (const auto& a : t.args()) n += count_holes(a);
  return n;
}

bool strict_subterms_unobservable(const Term& t, const Signature& sig) {
  for (const auto& a : t.args()) {
    if (!has_hole(a)) continue;
    if (sig.is_observable(a.sort())) return false;
    if (!strict_subterms_unobservable(a, sig)) return false;
  }
  return true;
}

std::string parameter_name(std::size_t i) { return i == 0 ? "x" : "x" + std::to_string(i); }

/// Renames parameters to x, x1, x2, ... in preorder.
Term canonical(const Term& body) {
  Substitution rename;
  std::size_t i = 0;
  for (const auto& v : variables_in_order(body))
    if (v.name != kHoleName) rename.bind(v, Term::var(parameter_name(i++), v.sort));
  return apply_substitution(body, rename);
}

struct Partial {
  Term body;
  std::size_t size;
};

}  // namespace

std::size_t context_size(const ObservableContext& c) { return c.body.size() - 1; }

ObservableContext make_context(const Term& body, const Sort& hole_sort) {
  ObservableContext c{body, hole_sort, body.sort(), {}};
  for (const auto& v : variables_in_order(body))
    if (v.name != kHoleName) c.parameters.push_back(v);
  return c;
}

bool is_minimal_context(const Term& body, const Signature& sig) {
  return count_holes(body) == 1 && sig.is_observable(body.sort()) && !body.is_var() &&
         strict_subterms_unobservable(body, sig);
}

Term plug(const ObservableContext& c, const Term& t) {
  Substitution s;
  s.bind({kHoleName, c.hole_sort}, t);
  return apply_substitution(c.body, s);
}

std::vector<ObservableContext> enumerate_minimal_contexts(const Specification& spec, const Sort& hole_sort,
                                                          const ObservationPlan& plan) {
  const Signature& sig = spec.signature;
  std::vector<ObservableContext> out;
  if (sig.is_observable(hole_sort)) return out;
  std::vector<Partial> frontier{{Term::var(kHoleName, hole_sort), 0}};
  std::size_t temp = 0;
  std::vector<Term> complete;
  while (!frontier.empty()) {
    std::vector<Partial> next;
    for (const auto& p : frontier) {
      for (const auto& op : sig.ops()) {
        std::size_t grown = p.size + op->arity();
        if (grown > plan.context_depth) continue;
        for (std::size_t i = 0; i < op->arity(); ++i) {
          if (op->arg_sorts[i] != p.body.sort()) continue;
          std::vector<Term> args;
          for (std::size_t k = 0; k < op->arity(); ++k)
            args.push_back(k == i ? p.body : Term::var("_p" + std::to_string(temp++), op->arg_sorts[k]));
          Term body = Term::app(op, std::move(args));
          if (sig.is_observable(op->result_sort))
            complete.push_back(canonical(body));
          else
            next.push_back({body, grown});
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(complete.begin(), complete.end(), [](const Term& a, const Term& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& body : complete)
    if (is_minimal_context(body, sig)) out.push_back(make_context(body, hole_sort));
  return out;
}

std::vector<TestCase> observe_test(const Specification& spec, const TestCase& tc,
                                   const std::vector<ObservableContext>& contexts, const ObservationPlan& plan) {
  const Signature& sig = spec.signature;
  if (sig.is_observable(tc.equation.sort())) return {tc};

  struct Source {
    const ObservableContext* context;
    std::vector<std::vector<Term>> candidates;
    std::size_t count = 1;
  };
  std::map<Sort, std::vector<Term>> by_sort;
  std::vector<Source> sources;
  for (const auto& c : contexts) {
    if (c.hole_sort != tc.equation.sort()) continue;
    Source s{&c, {}, 1};
    for (const auto& p : c.parameters) {
      auto it = by_sort.find(p.sort);
      if (it == by_sort.end())
        it = by_sort.emplace(p.sort, enumerate_constructor_terms(sig, p.sort, plan.parameter_bound)).first;
      s.candidates.push_back(it->second);
      s.count = it->second.empty() ? 0 : (s.count > SIZE_MAX / it->second.size() ? SIZE_MAX : s.count * it->second.size());
    }
    if (s.count > 0) sources.push_back(std::move(s));
  }

  std::vector<TestCase> out;
  for (std::size_t round = 0; out.size() < plan.contexts_per_test; ++round) {
    bool any = false;
    for (const auto& s : sources) {
      if (round >= s.count) continue;
      any = true;
      Substitution rho;
      std::size_t index = round;
      for (std::size_t k = s.context->parameters.size(); k-- > 0;) {
        rho.bind(s.context->parameters[k], s.candidates[k][index % s.candidates[k].size()]);
        index /= s.candidates[k].size();
      }
      ObservableContext inst = make_context(apply_substitution(s.context->body, rho), s.context->hole_sort);
      TestCase wrapped = tc;
      wrapped.id = tc.id + "@" + std::to_string(out.size());
      wrapped.equation = {plug(inst, tc.equation.lhs), plug(inst, tc.equation.rhs)};
      wrapped.context = render_term(inst.body);
      out.push_back(std::move(wrapped));
      if (out.size() >= plan.contexts_per_test) break;
    }
    if (!any) break;
  }
  return out;
}

TestSuite generate_observational(const Specification& spec, const Hypotheses& hyp, const ObservationPlan& plan) {
  hyp.validate();
  plan.validate();
  const Signature& sig = spec.signature;
  ConditionalRewriteSystem crs = orient(spec);
  TestSuite suite;
  suite.spec_name = spec.name;
  suite.spec_sha256 = spec_digest(spec);
  suite.mode = SuiteMode::kObservational;
  suite.hypotheses = hyp;
  suite.plan = plan;

  DecomposeResult dec = decompose(crs, hyp);
  suite.skipped = dec.skipped;
  std::map<Sort, std::vector<ObservableContext>> contexts;
  for (const auto& leaf : dec.leaves) {
    InstantiateResult r = instantiate(crs, leaf, hyp);
    if (r.unsat_within_bound()) {
      bool hidden_premise = false;
      if (const ConditionalAxiom* ax = spec.find_axiom(leaf.source_axiom))
        for (const auto& p : ax->premises) hidden_premise = hidden_premise || !sig.is_observable(p.sort());
      suite.skipped.push_back({leaf.id, hidden_premise ? "non-observable premise: context expansion forbidden"
                                                       : "unsat within bound (tried " + std::to_string(r.tried) +
                                                             ", unknown " + std::to_string(r.unknown) + ")"});
      continue;
    }
    for (const auto& tc : r.tests) {
      const Sort& s = tc.equation.sort();
      if (sig.is_observable(s)) {
        suite.tests.push_back(tc);
        continue;
      }
      auto it = contexts.find(s);
      if (it == contexts.end()) it = contexts.emplace(s, enumerate_minimal_contexts(spec, s, plan)).first;
      auto wrapped = observe_test(spec, tc, it->second, plan);
      if (wrapped.empty()) {
        suite.skipped.push_back({tc.id, "no observable context for sort " + s.name});
        continue;
      }
      for (auto& w : wrapped) suite.tests.push_back(std::move(w));
    }
  }
  return suite;
}

}  // namespace axiomtest
