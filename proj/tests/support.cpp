#include "support.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace testing_support {

std::filesystem::path spec_dir() { return AXIOMTEST_TEST_SPEC_DIR; }
std::filesystem::path cli_path() { return AXIOMTEST_CLI_PATH; }
std::filesystem::path demo_iut_path() { return AXIOMTEST_IUT_PATH; }

Specification shipped(const std::string& file) { return load_spec(spec_dir() / file, {spec_dir()}); }
Specification containers() { return shipped("containers.spec"); }
Specification containers_obs() { return shipped("containers_obs.spec"); }

Term term(const Specification& spec, const std::string& text, std::vector<VarDecl> extra) {
  return parse_term(text, spec.signature, extra);
}

Equation equation(const Specification& spec, const std::string& text) {
  return parse_equation(text, spec.signature);
}

ModelValue model_eval(const Term& t) {
  using K = ModelValue::Kind;
  if (!t.is_app()) throw std::runtime_error("model_eval on a variable");
  const std::string& f = t.op().name;
  std::vector<ModelValue> a;
  for (const auto& arg : t.args()) a.push_back(model_eval(arg));
  ModelValue v;
  if (f == "true" || f == "false") {
    v.kind = K::kBool;
    v.b = f == "true";
  } else if (f == "0") {
    v.kind = K::kNat;
  } else if (f == "succ") {
    v = a[0];
    ++v.n;
  } else if (f == "[]") {
    v.kind = K::kContainer;
  } else if (f == "::") {
    v = a[1];
    v.items.insert(v.items.begin(), a[0].n);
  } else if (f == "eq") {
    v.kind = K::kBool;
    v.b = a[0].n == a[1].n;
  } else if (f == "notb") {
    v.kind = K::kBool;
    v.b = !a[0].b;
  } else if (f == "isin") {
    v.kind = K::kBool;
    for (auto i : a[1].items) v.b = v.b || i == a[0].n;
  } else if (f == "remove") {
    v = a[1];
    for (auto it = v.items.begin(); it != v.items.end(); ++it)
      if (*it == a[0].n) {
        v.items.erase(it);
        break;
      }
  } else {
    throw std::runtime_error("model_eval: unknown symbol " + f);
  }
  return v;
}

ModelValue model_of_constructor(const Term& t) {
  if (!t.is_constructor_term()) throw std::runtime_error("not a constructor term");
  return model_eval(t);
}

bool model_holds(const Equation& e) { return model_eval(e.lhs) == model_eval(e.rhs); }

namespace {

std::map<Sort, std::size_t> min_sizes(const Signature& sig) {
  std::map<Sort, std::size_t> m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& op : sig.ops()) {
      std::size_t total = 1;
      bool ok = true;
      for (const auto& s : op->arg_sorts) {
        auto it = m.find(s);
        if (it == m.end()) {
          ok = false;
          break;
        }
        total += it->second;
      }
      if (!ok) continue;
      auto it = m.find(op->result_sort);
      if (it == m.end() || total < it->second) {
        m[op->result_sort] = total;
        changed = true;
      }
    }
  }
  return m;
}

}  // namespace

Term random_ground_term(const Signature& sig, const Sort& sort, std::size_t max_size, std::mt19937_64& rng) {
  static thread_local std::map<const Signature*, std::map<Sort, std::size_t>> cache;
  auto& mins = cache[&sig];
  if (mins.empty()) mins = min_sizes(sig);
  std::vector<OpRef> fits;
  for (const auto& op : sig.ops_of(sort)) {
    std::size_t need = 1;
    for (const auto& s : op->arg_sorts) need += mins.at(s);
    if (need <= max_size) fits.push_back(op);
  }
  if (fits.empty()) throw std::runtime_error("no term of sort " + sort.name + " fits");
  OpRef op = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
  std::size_t budget = max_size - 1;
  std::size_t reserved = 0;
  for (const auto& s : op->arg_sorts) reserved += mins.at(s);
  std::vector<Term> args;
  for (std::size_t i = 0; i < op->arity(); ++i) {
    const Sort& s = op->arg_sorts[i];
    reserved -= mins.at(s);
    std::size_t cap = budget - reserved;
    std::size_t size = std::uniform_int_distribution<std::size_t>(mins.at(s), cap)(rng);
    Term a = random_ground_term(sig, s, size, rng);
    budget -= a.size();
    args.push_back(std::move(a));
  }
  return Term::app(op, std::move(args));
}

TermCounts count_terms(const Signature& sig, std::size_t bound) {
  TermCounts out;
  for (bool constructors : {false, true}) {
    // table[s][n]: number of terms of sort s with exactly n nodes.
    std::map<Sort, std::vector<std::uint64_t>> table;
    for (const auto& s : sig.sorts()) table[s].assign(bound + 1, 0);
    for (std::size_t n = 1; n <= bound; ++n) {
      for (const auto& op : sig.ops()) {
        if (constructors && !op->is_constructor) continue;
        // ways[k]: argument tuples so far using k nodes in total
        std::vector<std::uint64_t> ways(n, 0);
        ways[0] = 1;
        for (const auto& s : op->arg_sorts) {
          std::vector<std::uint64_t> next(n, 0);
          for (std::size_t used = 0; used < n; ++used)
            for (std::size_t k = 1; used + k < n; ++k) next[used + k] += ways[used] * table[s][k];
          ways = next;
        }
        table[op->result_sort][n] += ways[n - 1];
      }
    }
    std::uint64_t total = 0;
    for (const auto& [s, row] : table)
      for (auto c : row) total += c;
    (constructors ? out.constructor_only : out.all) = total;
  }
  return out;
}

std::uint64_t count_small_containers(std::size_t bound) {
  // A list of k elements from {0 (1 node), succ(0) (2 nodes)} uses
  // 1 + k + (element nodes) nodes.
  std::uint64_t count = 0;
  std::vector<std::size_t> sizes{0};  // element-node totals of the lists built so far
  for (std::size_t k = 0;; ++k) {
    bool any = false;
    for (auto s : sizes)
      if (1 + k + s <= bound) {
        ++count;
        any = true;
      }
    if (!any) break;
    std::vector<std::size_t> next;
    for (auto s : sizes) {
      next.push_back(s + 1);
      next.push_back(s + 2);
    }
    sizes = next;
  }
  return count;
}

namespace {

bool alpha_term(const Term& a, const Term& b, std::map<std::string, std::string>& fwd,
                std::map<std::string, std::string>& bwd) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    if (a.sort() != b.sort()) return false;
    auto f = fwd.find(a.var_name());
    auto g = bwd.find(b.var_name());
    if (f == fwd.end() && g == bwd.end()) {
      fwd[a.var_name()] = b.var_name();
      bwd[b.var_name()] = a.var_name();
      return true;
    }
    return f != fwd.end() && g != bwd.end() && f->second == b.var_name() && g->second == a.var_name();
  }
  if (!a.op().same_profile(b.op())) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.arg(i), b.arg(i), fwd, bwd)) return false;
  return true;
}

bool match_into(const Term& pat, const Term& t, std::map<std::string, Term>& out) {
  if (pat.is_var()) {
    auto [it, fresh] = out.emplace(pat.var_name(), t);
    return (fresh && pat.sort() == t.sort()) || it->second == t;
  }
  if (!t.is_app() || !pat.op().same_profile(t.op())) return false;
  for (std::size_t i = 0; i < pat.args().size(); ++i)
    if (!match_into(pat.arg(i), t.arg(i), out)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> match_equation(const Equation& pattern, const Equation& ground) {
  std::map<std::string, Term> m;
  if (!match_into(pattern.lhs, ground.lhs, m) || !match_into(pattern.rhs, ground.rhs, m)) return std::nullopt;
  Substitution rho;
  for (const auto& [name, image] : m) rho.bind({name, image.sort()}, image);
  return rho;
}

bool alpha_equivalent(const std::vector<Equation>& a, const std::vector<Equation>& b) {
  if (a.size() != b.size()) return false;
  std::map<std::string, std::string> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_term(a[i].lhs, b[i].lhs, fwd, bwd) || !alpha_term(a[i].rhs, b[i].rhs, fwd, bwd)) return false;
  return true;
}

std::set<std::string> solutions(const Specification& spec, const Subdomain& d, std::size_t bound) {
  const ConditionalAxiom* root = spec.find_axiom(d.source_axiom);
  if (!root) throw std::runtime_error("unknown axiom " + d.source_axiom);
  std::set<VarDecl> roots = variables_of(*root);

  std::set<VarDecl> free;
  auto add = [&](const Term& t) {
    for (const auto& v : variables_of(t)) free.insert(v);
  };
  add(d.conclusion.lhs);
  add(d.conclusion.rhs);
  for (const auto& c : d.constraints) {
    add(c.lhs);
    add(c.rhs);
  }
  for (const auto& [name, img] : d.binding.entries()) add(img);
  for (const auto& r : roots)
    if (!d.binding.contains(r.name)) free.insert(r);

  std::vector<VarDecl> vars(free.begin(), free.end());
  std::vector<std::vector<Term>> cand;
  for (const auto& v : vars) cand.push_back(enumerate_constructor_terms(spec.signature, v.sort, bound));

  std::set<std::string> out;
  std::vector<std::size_t> digits(vars.size(), 0);
  for (;;) {
    Substitution rho;
    for (std::size_t i = 0; i < vars.size(); ++i) rho.bind(vars[i], cand[i][digits[i]]);
    bool ok = true;
    std::string key;
    for (const auto& r : roots) {
      const Term* img = d.binding.find(r.name);
      Term value = img ? apply_substitution(*img, rho) : *rho.find(r.name);
      if (value.size() > bound) ok = false;
      key += r.name + "=" + render_term(value) + ";";
    }
    for (std::size_t i = 0; ok && i < d.constraints.size(); ++i)
      ok = model_holds(apply_substitution(d.constraints[i], rho));
    if (ok) out.insert(key);
    std::size_t i = digits.size();
    bool more = false;
    while (i > 0) {
      --i;
      if (++digits[i] < cand[i].size()) {
        more = true;
        break;
      }
      digits[i] = 0;
    }
    if (!more) break;
  }
  return out;
}

CommandResult run_command(const std::string& command) {
  CommandResult r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("axiomtest_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
