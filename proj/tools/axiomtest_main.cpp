#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "axiomtest/harness.hpp"
#include "axiomtest/observe.hpp"
#include "axiomtest/parser.hpp"
#include "axiomtest/rewrite.hpp"
#include "axiomtest/select.hpp"

namespace {

using namespace axiomtest;

constexpr int kOk = 0;
constexpr int kFailures = 1;
constexpr int kUsage = 2;
constexpr int kProtocol = 3;

struct Common {
  std::vector<std::string> path;
  std::size_t max_steps = 10000;
  std::size_t max_condition_depth = 8;

  Fuel fuel() const { return {max_steps, max_condition_depth}; }

  SearchPath search_path() const {
    SearchPath out(path.begin(), path.end());
    if (const char* env = std::getenv("AXIOMTEST_PATH")) {
      std::stringstream ss(env);
      std::string item;
      while (std::getline(ss, item, ':'))
        if (!item.empty()) out.emplace_back(item);
    }
    out.push_back(shipped_spec_dir());
    return out;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--path", c.path, "Extra directory searched for imported specifications");
  cmd->add_option("--fuel", c.max_steps, "Rewrite steps allowed per evaluated term")->check(CLI::PositiveNumber);
  cmd->add_option("--condition-depth", c.max_condition_depth, "Nesting allowed for condition evaluation")
      ->check(CLI::PositiveNumber);
}

std::string read_text(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot read '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& file, const std::string& text) {
  if (file.empty() || file == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write '" + file + "'");
  out << text;
}

int cmd_check(const std::string& file, std::size_t bound, const Common& c) {
  Specification spec = load_spec(file, c.search_path());
  bool clean = true;
  std::cout << "spec " << spec.name << ": " << spec.signature.sorts().size() << " sorts, "
            << spec.signature.ops().size() << " operations, " << spec.axioms.size() << " axioms ("
            << axioms_under_test(spec).size() << " under test)\n";

  auto defects = validate_signature(spec.signature);
  std::cout << "signature: " << (defects.empty() ? "ok" : std::to_string(defects.size()) + " defect(s)") << "\n";
  for (const auto& d : defects) std::cout << "  " << to_string(d.kind) << ": " << d.message << "\n";
  clean = clean && defects.empty();

  ConditionalRewriteSystem crs = orient(spec);
  std::cout << "orientation: " << crs.rules().size() << " rules, " << crs.defects().size() << " defect(s)\n";
  for (const auto& d : crs.defects()) std::cout << "  [" << d.label << "] " << to_string(d.kind) << ": " << d.message << "\n";
  clean = clean && !crs.partial();

  CompletenessReport comp = check_constructor_completeness(spec, bound, c.fuel());
  std::cout << "constructor completeness (bound " << bound << ", " << comp.terms_checked
            << " terms): " << (comp.complete() ? "complete" : "incomplete") << "\n";
  for (const auto& t : comp.condition1_witnesses) std::cout << "  no constructor normal form: " << render_term(t) << "\n";
  for (const auto& w : comp.condition2_witnesses) std::cout << "  constructor term rewritten: " << w << "\n";
  clean = clean && comp.complete();

  ConfluenceReport conf = check_ground_confluence(spec, bound, c.fuel());
  std::cout << "ground confluence (bound " << bound << ", " << conf.terms_checked
            << " terms): " << (conf.confluent() ? "confluent" : "not confluent") << "\n";
  for (const auto& d : conf.discrepancies)
    std::cout << "  " << render_term(d.term) << " -> " << render_term(d.first) << " / " << render_term(d.second) << "\n";
  clean = clean && conf.confluent();

  std::cout << (clean ? "clean" : "problems found") << "\n";
  return clean ? kOk : kFailures;
}

struct GenOptions {
  std::string spec;
  std::string output;
  Hypotheses hyp;
  std::string strategy = "seeded-random";
  bool observable_mode = false;
  ObservationPlan plan;
  std::size_t normal_form_bound = 0;
};

int cmd_gen(GenOptions& g, const Common& c) {
  Specification spec = load_spec(g.spec, c.search_path());
  g.hyp.strategy = parse_strategy(g.strategy);
  g.hyp.fuel = c.fuel();
  TestSuite suite;
  if (g.normal_form_bound > 0)
    suite = normal_form_tests(spec, g.normal_form_bound, c.fuel(), g.hyp.keep_tautologies);
  else if (g.observable_mode)
    suite = generate_observational(spec, g.hyp, g.plan);
  else
    suite = generate(spec, g.hyp);
  write_text(g.output, suite_to_json(suite));
  if (!g.output.empty() && g.output != "-")
    std::cout << "wrote " << suite.tests.size() << " tests (" << suite.skipped.size() << " skipped) to " << g.output
              << "\n";
  return kOk;
}

int cmd_contexts(const std::string& file, const std::string& sort_name, const ObservationPlan& plan, const Common& c) {
  Specification spec = load_spec(file, c.search_path());
  Sort sort{sort_name};
  if (!spec.signature.has_sort(sort)) throw Error("unknown sort '" + sort_name + "'");
  if (spec.signature.is_observable(sort)) {
    std::cout << kHoleName << "\n";
    return kOk;
  }
  auto contexts = enumerate_minimal_contexts(spec, sort, plan);
  for (const auto& ctx : contexts) std::cout << render_term(ctx.body) << "\n";
  if (contexts.empty()) std::cerr << "no observable context for sort " << sort_name << "\n";
  return kOk;
}

Specification spec_for_suite(const std::string& suite_file, const std::string& spec_file, const std::string& text,
                             const Common& c) {
  SearchPath path = c.search_path();
  if (!spec_file.empty()) return load_spec(spec_file, path);
  std::string name = suite_spec_name(text);
  path.insert(path.begin(), std::filesystem::path(suite_file).parent_path());
  auto found = resolve_spec_file(name, path);
  if (!found) throw Error("cannot find specification '" + name + "'; use --spec");
  return load_spec(*found, path);
}

int cmd_run(const std::string& suite_file, const std::string& spec_file, const std::string& iut, std::size_t jobs,
            const std::string& output, int timeout_ms, const Common& c) {
  std::string text = read_text(suite_file);
  Specification spec = spec_for_suite(suite_file, spec_file, text, c);
  TestSuite suite = suite_from_json(text, spec.signature);
  if (suite.spec_sha256 != spec_digest(spec))
    std::cerr << "warning: suite was generated from a different version of " << spec.name << "\n";
  auto adapter = iut.rfind("exec:", 0) == 0 ? make_external_adapter(spec, iut.substr(5), timeout_ms)
                                            : make_adapter(iut, spec, c.fuel(), c.search_path());
  RunReport report = run_suite(*adapter, suite, jobs);
  for (const auto& r : report.results)
    std::cout << to_string(r.verdict.kind) << " " << r.test.id << " " << render_equation(r.test.equation)
              << (r.verdict.kind == VerdictKind::kPass ? "" : "  " + to_string(r.verdict)) << "\n";
  const RunSummary& s = report.summary;
  std::cout << s.pass << "/" << s.total << " pass, " << s.fail << " fail, " << s.error << " error, " << s.inconclusive
            << " inconclusive\n";
  if (!output.empty()) write_text(output, report_to_json(report));
  return s.all_pass() ? kOk : kFailures;
}

int cmd_obscheck(const std::string& file, const std::string& a, const std::string& b, std::size_t bound,
                 int timeout_ms, const Common& c) {
  Specification spec = load_spec(file, c.search_path());
  auto make = [&](const std::string& iut) {
    return iut.rfind("exec:", 0) == 0 ? make_external_adapter(spec, iut.substr(5), timeout_ms)
                                      : make_adapter(iut, spec, c.fuel(), c.search_path());
  };
  auto ia = make(a);
  auto ib = make(b);
  ObsEquivReport report = obs_equiv(*ia, *ib, spec, bound);
  for (const auto& d : report.disagreements)
    std::cout << render_term(d.term) << ": " << d.a_value << " vs " << d.b_value << "\n";
  std::cout << (report.equivalent() ? "observationally equivalent" : "observationally different") << " at bound "
            << bound << " (" << report.terms_checked << " terms, " << report.disagreements.size()
            << " disagreement(s))\n";
  return report.equivalent() ? kOk : kFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Specification-based test generation and execution for algebraic data types"};
  app.require_subcommand(1);
  Common common;

  std::string check_spec;
  std::size_t check_bound = 6;
  auto* check = app.add_subcommand("check", "Validate, orient and desk-check a specification");
  check->add_option("spec", check_spec, "Specification file")->required();
  check->add_option("--bound", check_bound, "Term size bound for the desk checks")->check(CLI::PositiveNumber);
  add_common(check, common);

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a test suite");
  gen->add_option("spec", gen_opts.spec, "Specification file")->required();
  gen->add_option("--depth", gen_opts.hyp.unfold_depth, "Unfolding rounds");
  gen->add_option("--bound", gen_opts.hyp.regularity_bound, "Size bound per instantiated variable")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opts.hyp.seed, "Seed of the random selection");
  gen->add_option("--reps", gen_opts.hyp.representatives_per_subdomain, "Tests per subdomain")
      ->check(CLI::PositiveNumber);
  gen->add_option("--strategy", gen_opts.strategy, "exhaustive-first or seeded-random")
      ->check(CLI::IsMember({"exhaustive-first", "seeded-random"}));
  gen->add_flag("--keep-tautologies", gen_opts.hyp.keep_tautologies, "Keep tests with identical constructor sides");
  gen->add_flag("--observable-mode", gen_opts.observable_mode, "Wrap non-observable tests into contexts");
  gen->add_option("--ctx-depth", gen_opts.plan.context_depth, "Maximum context size")->check(CLI::PositiveNumber);
  gen->add_option("--ctx-per-test", gen_opts.plan.contexts_per_test, "Contexts applied per test")
      ->check(CLI::PositiveNumber);
  gen->add_option("--param-bound", gen_opts.plan.parameter_bound, "Size bound of context parameters")
      ->check(CLI::PositiveNumber);
  gen->add_option("--normal-form-bound", gen_opts.normal_form_bound,
                  "Emit t = normal form of t for every ground term up to this size instead");
  gen->add_option("-o,--output", gen_opts.output, "Suite file (standard output when omitted)");
  add_common(gen, common);

  std::string ctx_spec, ctx_sort;
  ObservationPlan ctx_plan;
  auto* contexts = app.add_subcommand("contexts", "List the minimal observable contexts of a sort");
  contexts->add_option("spec", ctx_spec, "Specification file")->required();
  contexts->add_option("--sort", ctx_sort, "Hole sort")->required();
  contexts->add_option("--depth", ctx_plan.context_depth, "Maximum context size")->check(CLI::PositiveNumber);
  add_common(contexts, common);

  std::string run_suite_file, run_spec, run_iut, run_output;
  std::size_t jobs = 1;
  int timeout_ms = 5000;
  auto* run = app.add_subcommand("run", "Run a suite against an implementation");
  run->add_option("suite", run_suite_file, "Suite file")->required();
  run->add_option("--iut", run_iut, "reference, mutant:ID or exec:CMD")->required();
  run->add_option("--spec", run_spec, "Specification file (located from the suite when omitted)");
  run->add_option("-j,--jobs", jobs, "Parallel sessions")->check(CLI::PositiveNumber);
  run->add_option("-o,--output", run_output, "Report file");
  run->add_option("--timeout", timeout_ms, "Milliseconds allowed per external request")->check(CLI::PositiveNumber);
  add_common(run, common);

  std::string obs_spec, iut_a, iut_b;
  std::size_t obs_bound = 6;
  auto* obscheck = app.add_subcommand("obscheck", "Compare two implementations on observable terms");
  obscheck->add_option("spec", obs_spec, "Specification file")->required();
  obscheck->add_option("--iut-a", iut_a, "First implementation")->required();
  obscheck->add_option("--iut-b", iut_b, "Second implementation")->required();
  obscheck->add_option("--bound", obs_bound, "Term size bound")->check(CLI::PositiveNumber);
  obscheck->add_option("--timeout", timeout_ms, "Milliseconds allowed per external request")
      ->check(CLI::PositiveNumber);
  add_common(obscheck, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(check_spec, check_bound, common);
    if (*gen) return cmd_gen(gen_opts, common);
    if (*contexts) return cmd_contexts(ctx_spec, ctx_sort, ctx_plan, common);
    if (*run) return cmd_run(run_suite_file, run_spec, run_iut, jobs, run_output, timeout_ms, common);
    if (*obscheck) return cmd_obscheck(obs_spec, iut_a, iut_b, obs_bound, timeout_ms, common);
  } catch (const HandshakeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kProtocol;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
