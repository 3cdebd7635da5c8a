#include <limits>
#include <map>
#include <random>
#include <unordered_map>

#include "axiomtest/select.hpp"
#include "select_internal.hpp"

namespace axiomtest {

namespace {

constexpr std::size_t kMaxTries = 200000;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Uniform in [0, n); independent of the standard library's distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % n;
  }
}

void add_unique(std::vector<VarDecl>& out, const Term& t) {
  for (const auto& v : variables_in_order(t)) {
    bool seen = false;
    for (const auto& o : out) seen = seen || o.name == v.name;
    if (!seen) out.push_back(v);
  }
}

class Search {
 public:
  Search(const ConditionalRewriteSystem& crs, const Subdomain& d, const Hypotheses& hyp)
      : crs_(crs), d_(d), hyp_(hyp), roots_(detail::root_variables(crs, d)) {
    if (const ConditionalAxiom* ax = crs.source().find_axiom(d.source_axiom)) root_premises_ = ax->premises;
    vars_ = subdomain_variables(d);
    std::map<Sort, std::vector<Term>> by_sort;
    for (const auto& v : vars_) {
      auto it = by_sort.find(v.sort);
      if (it == by_sort.end())
        it = by_sort.emplace(v.sort, enumerate_constructor_terms(crs.source().signature, v.sort, hyp.regularity_bound)).first;
      candidates_.push_back(it->second);
    }
  }

  InstantiateResult run() {
    for (const auto& c : candidates_)
      if (c.empty()) return result_;
    if (hyp_.strategy == SelectionStrategy::kExhaustiveFirst)
      exhaustive();
    else
      random();
    return result_;
  }

 private:
  bool done() const {
    return result_.tests.size() >= hyp_.representatives_per_subdomain || result_.tried >= kMaxTries;
  }

  void exhaustive() {
    std::vector<std::size_t> digits(vars_.size(), 0);
    for (;;) {
      consider(digits);
      if (done()) return;
      std::size_t i = digits.size();
      while (i > 0) {
        --i;
        if (++digits[i] < candidates_[i].size()) break;
        digits[i] = 0;
        if (i == 0) return;
      }
      if (digits.empty()) return;
    }
  }

  void random() {
    std::mt19937_64 rng(hyp_.seed ^ fnv1a(d_.id));
    std::uint64_t space = 1;
    bool overflow = false;
    for (const auto& c : candidates_) {
      if (space > std::numeric_limits<std::uint64_t>::max() / c.size()) overflow = true;
      space *= c.size();
    }
    std::vector<std::size_t> digits(vars_.size(), 0);
    if (overflow) {
      // Too many tuples to index: draw each coordinate independently.
      while (!done()) {
        for (std::size_t i = 0; i < digits.size(); ++i) digits[i] = bounded(rng, candidates_[i].size());
        consider(digits);
      }
      return;
    }
    // Lazy Fisher-Yates over tuple indices: a uniform draw without repetition.
    std::unordered_map<std::uint64_t, std::uint64_t> swapped;
    auto value = [&](std::uint64_t k) {
      auto it = swapped.find(k);
      return it == swapped.end() ? k : it->second;
    };
    for (std::uint64_t i = 0; i < space && !done(); ++i) {
      std::uint64_t j = i + bounded(rng, space - i);
      std::uint64_t vi = value(i), vj = value(j);
      swapped[i] = vj;
      swapped[j] = vi;
      std::uint64_t index = vj;
      for (std::size_t k = digits.size(); k-- > 0;) {
        digits[k] = index % candidates_[k].size();
        index /= candidates_[k].size();
      }
      consider(digits);
    }
  }

  void consider(const std::vector<std::size_t>& digits) {
    ++result_.tried;
    Substitution rho;
    for (std::size_t i = 0; i < vars_.size(); ++i) rho.bind(vars_[i], candidates_[i][digits[i]]);

    for (const auto& c : d_.constraints)
      if (!check(apply_substitution(c, rho))) return;
    Substitution inst;
    const Substitution full = compose(rho, d_.binding);
    for (const auto& [name, img] : full.entries())
      if (roots_.count(name)) inst.bind({name, img.sort()}, img);
    for (const auto& p : root_premises_)
      if (!check(apply_substitution(p, inst))) return;

    ++result_.solutions;
    Equation eq = apply_substitution(d_.conclusion, rho);
    if (eq.lhs == eq.rhs && eq.lhs.is_constructor_term() && !hyp_.keep_tautologies) {
      ++result_.tautologies;
      return;
    }
    result_.tests.push_back({d_.id + "#" + std::to_string(result_.tests.size()), std::move(eq), d_.id,
                             d_.source_axiom, std::move(inst), std::nullopt});
  }

  bool check(const Equation& e) {
    if (!e.is_ground()) {
      ++result_.unknown;
      return false;
    }
    TriState v = holds(crs_, e, hyp_.fuel);
    if (v.is_unknown()) ++result_.unknown;
    return v.is_holds();
  }

  const ConditionalRewriteSystem& crs_;
  const Subdomain& d_;
  const Hypotheses& hyp_;
  std::set<std::string> roots_;
  std::vector<Equation> root_premises_;
  std::vector<VarDecl> vars_;
  std::vector<std::vector<Term>> candidates_;
  InstantiateResult result_;
};

}  // namespace

std::vector<VarDecl> subdomain_variables(const Subdomain& d) {
  std::vector<VarDecl> out;
  add_unique(out, d.conclusion.lhs);
  add_unique(out, d.conclusion.rhs);
  for (const auto& c : d.constraints) {
    add_unique(out, c.lhs);
    add_unique(out, c.rhs);
  }
  return out;
}

InstantiateResult instantiate(const ConditionalRewriteSystem& crs, const Subdomain& d, const Hypotheses& hyp) {
  hyp.validate();
  return Search(crs, d, hyp).run();
}

InstantiateResult instantiate(const Specification& spec, const Subdomain& d, const Hypotheses& hyp) {
  return instantiate(orient(spec), d, hyp);
}

}  // namespace axiomtest
