#include <json.hpp>

#include "axiomtest/harness.hpp"
#include "axiomtest/parser.hpp"

namespace axiomtest {

namespace {

using Json = nlohmann::ordered_json;

Json hypotheses_json(const Hypotheses& h) {
  return Json{{"unfold_depth", h.unfold_depth},
              {"regularity_bound", h.regularity_bound},
              {"representatives_per_subdomain", h.representatives_per_subdomain},
              {"seed", h.seed},
              {"strategy", to_string(h.strategy)},
              {"keep_tautologies", h.keep_tautologies},
              {"fuel", {{"max_steps", h.fuel.max_steps}, {"max_condition_depth", h.fuel.max_condition_depth}}}};
}

Hypotheses hypotheses_from(const Json& j) {
  Hypotheses h;
  h.unfold_depth = j.at("unfold_depth").get<std::size_t>();
  h.regularity_bound = j.at("regularity_bound").get<std::size_t>();
  h.representatives_per_subdomain = j.at("representatives_per_subdomain").get<std::size_t>();
  h.seed = j.at("seed").get<std::uint64_t>();
  h.strategy = parse_strategy(j.at("strategy").get<std::string>());
  h.keep_tautologies = j.value("keep_tautologies", false);
  if (j.contains("fuel")) {
    h.fuel.max_steps = j["fuel"].at("max_steps").get<std::size_t>();
    h.fuel.max_condition_depth = j["fuel"].at("max_condition_depth").get<std::size_t>();
  }
  return h;
}

Json plan_json(const std::optional<ObservationPlan>& p) {
  if (!p) return nullptr;
  return Json{{"context_depth", p->context_depth},
              {"contexts_per_test", p->contexts_per_test},
              {"parameter_bound", p->parameter_bound}};
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Json test_json(const TestCase& tc) {
  return Json{{"id", tc.id},
              {"sort", tc.equation.sort().name},
              {"lhs", render_term(tc.equation.lhs)},
              {"rhs", render_term(tc.equation.rhs)},
              {"axiom", tc.source_axiom},
              {"subdomain", tc.subdomain_id},
              {"context", optional_string(tc.context)}};
}

Json header_json(const TestSuite& suite) {
  return Json{{"mode", to_string(suite.mode)},
              {"hypotheses", hypotheses_json(suite.hypotheses)},
              {"plan", plan_json(suite.plan)},
              {"normal_form_bound", suite.normal_form_bound ? Json(*suite.normal_form_bound) : Json(nullptr)}};
}

Json skipped_json(const std::vector<SkipRecord>& skipped) {
  Json out = Json::array();
  for (const auto& s : skipped) out.push_back({{"subdomain", s.subdomain_id}, {"reason", s.reason}});
  return out;
}

}  // namespace

std::string suite_to_json(const TestSuite& suite) {
  Json j;
  j["spec"] = {{"name", suite.spec_name}, {"sha256", suite.spec_sha256}};
  const Json header = header_json(suite);
  for (const auto& [k, v] : header.items()) j[k] = v;
  Json tests = Json::array();
  for (const auto& tc : suite.tests) tests.push_back(test_json(tc));
  j["tests"] = std::move(tests);
  j["skipped"] = skipped_json(suite.skipped);
  return j.dump(2) + "\n";
}

std::string suite_spec_name(const std::string& text) {
  try {
    return Json::parse(text).at("spec").at("name").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed suite document: ") + e.what());
  }
}

TestSuite suite_from_json(const std::string& text, const Signature& sig) {
  try {
    Json j = Json::parse(text);
    TestSuite suite;
    suite.spec_name = j.at("spec").at("name").get<std::string>();
    suite.spec_sha256 = j.at("spec").at("sha256").get<std::string>();
    std::string mode = j.value("mode", "axioms");
    suite.mode = mode == "observational" ? SuiteMode::kObservational
                 : mode == "normal-form" ? SuiteMode::kNormalForm
                                         : SuiteMode::kAxioms;
    suite.hypotheses = hypotheses_from(j.at("hypotheses"));
    if (j.contains("plan") && !j["plan"].is_null()) {
      ObservationPlan p;
      p.context_depth = j["plan"].at("context_depth").get<std::size_t>();
      p.contexts_per_test = j["plan"].at("contexts_per_test").get<std::size_t>();
      p.parameter_bound = j["plan"].at("parameter_bound").get<std::size_t>();
      suite.plan = p;
    }
    if (j.contains("normal_form_bound") && !j["normal_form_bound"].is_null())
      suite.normal_form_bound = j["normal_form_bound"].get<std::size_t>();
    for (const auto& t : j.at("tests")) {
      Equation eq{parse_term(t.at("lhs").get<std::string>(), sig), parse_term(t.at("rhs").get<std::string>(), sig)};
      if (eq.lhs.sort() != eq.rhs.sort()) throw Error("test " + t.at("id").get<std::string>() + " is ill-sorted");
      std::optional<std::string> context;
      if (t.contains("context") && !t["context"].is_null()) context = t["context"].get<std::string>();
      suite.tests.push_back({t.at("id").get<std::string>(), std::move(eq), t.at("subdomain").get<std::string>(),
                             t.at("axiom").get<std::string>(), {}, std::move(context)});
    }
    if (j.contains("skipped"))
      for (const auto& s : j["skipped"])
        suite.skipped.push_back({s.at("subdomain").get<std::string>(), s.at("reason").get<std::string>()});
    return suite;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed suite document: ") + e.what());
  }
}

std::string report_to_json(const RunReport& report) {
  Json j;
  j["suite"] = {{"spec", report.spec_name}, {"sha256", report.suite_sha256}};
  j["iut"] = report.iut;
  j["assumptions"] = Json::array({"the IUT is deterministic",
                                  "every IUT value is denoted by a ground constructor term",
                                  "equality of observable values is decided correctly"});
  const Json header = header_json(report.suite_header);
  for (const auto& [k, v] : header.items()) j[k] = v;
  j["summary"] = {{"total", report.summary.total},
                  {"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"error", report.summary.error},
                  {"inconclusive", report.summary.inconclusive},
                  {"all_pass", report.summary.all_pass()}};
  Json tests = Json::array();
  for (const auto& r : report.results) {
    Json t = test_json(r.test);
    t["verdict"] = to_string(r.verdict.kind);
    t["reason"] = r.verdict.kind == VerdictKind::kInconclusive ? Json(to_string(r.verdict.reason)) : Json(nullptr);
    t["message"] = r.verdict.message.empty() ? Json(nullptr) : Json(r.verdict.message);
    t["lhs_value"] = r.verdict.lhs_value ? Json(render_term(*r.verdict.lhs_value)) : Json(nullptr);
    t["rhs_value"] = r.verdict.rhs_value ? Json(render_term(*r.verdict.rhs_value)) : Json(nullptr);
    t["ms"] = r.ms;
    tests.push_back(std::move(t));
  }
  j["tests"] = std::move(tests);
  return j.dump(2) + "\n";
}

}  // namespace axiomtest
