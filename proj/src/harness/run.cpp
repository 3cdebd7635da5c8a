#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "axiomtest/harness.hpp"
#include "axiomtest/parser.hpp"

namespace axiomtest {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kPass: return "pass";
    case VerdictKind::kFail: return "fail";
    case VerdictKind::kError: return "error";
    case VerdictKind::kInconclusive: return "inconclusive";
  }
  return "error";
}

std::string to_string(InconclusiveReason r) {
  switch (r) {
    case InconclusiveReason::kFuel: return "fuel";
    case InconclusiveReason::kProtocol: return "protocol";
    case InconclusiveReason::kOpaqueComparison: return "opaque-comparison";
  }
  return "protocol";
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::kPass: return "Pass";
    case VerdictKind::kFail: return "Fail(" + render_term(*v.lhs_value) + ", " + render_term(*v.rhs_value) + ")";
    case VerdictKind::kError: return "Error(" + v.message + ")";
    case VerdictKind::kInconclusive: return "Inconclusive(" + to_string(v.reason) + ")";
  }
  return "Error";
}

Verdict run_test(IutSession& session, const Signature& sig, const TestCase& tc) {
  EvalOutcome sides[2] = {session.eval(tc.equation.lhs), session.eval(tc.equation.rhs)};
  bool opaque = false;
  for (const auto& s : sides) {
    switch (s.kind) {
      case EvalOutcome::Kind::kValue: break;
      case EvalOutcome::Kind::kError: return Verdict::error(s.message);
      case EvalOutcome::Kind::kFuel: return Verdict::inconclusive(InconclusiveReason::kFuel, s.message);
      case EvalOutcome::Kind::kProtocol: return Verdict::inconclusive(InconclusiveReason::kProtocol, s.message);
      case EvalOutcome::Kind::kOpaque: opaque = true; break;
    }
  }
  if (opaque) {
    if (sig.is_observable(tc.equation.sort()))
      return Verdict::error("IUT refused to show a value of observable sort " + tc.equation.sort().name);
    return Verdict::inconclusive(InconclusiveReason::kOpaqueComparison,
                                 "values of sort " + tc.equation.sort().name + " are not observable");
  }
  if (*sides[0].value == *sides[1].value) return Verdict::pass(*sides[0].value, *sides[1].value);
  return Verdict::fail(*sides[0].value, *sides[1].value);
}

Verdict run_test(const IutAdapter& adapter, const TestCase& tc) {
  auto session = adapter.open();
  return run_test(*session, adapter.spec().signature, tc);
}

RunReport run_suite(const IutAdapter& adapter, const TestSuite& suite, std::size_t parallelism) {
  RunReport report;
  report.spec_name = suite.spec_name;
  report.suite_sha256 = suite.spec_sha256;
  report.iut = adapter.describe();
  report.suite_header = suite;
  report.suite_header.tests.clear();
  std::vector<std::optional<TestResult>> slots(suite.tests.size());

  std::size_t workers = std::max<std::size_t>(1, std::min(parallelism, std::max<std::size_t>(1, suite.tests.size())));
  std::vector<std::unique_ptr<IutSession>> sessions;
  if (!suite.tests.empty())
    for (std::size_t w = 0; w < workers; ++w) sessions.push_back(adapter.open());

  const Signature& sig = adapter.spec().signature;
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t w) {
    for (std::size_t i = next++; i < suite.tests.size(); i = next++) {
      const TestCase& tc = suite.tests[i];
      auto start = std::chrono::steady_clock::now();
      Verdict v;
      try {
        if (!sessions[w] || !sessions[w]->alive()) sessions[w] = adapter.open();
        v = run_test(*sessions[w], sig, tc);
      } catch (const std::exception& e) {
        v = Verdict::error(e.what());
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      slots[i] = TestResult{tc, std::move(v), ms};
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < sessions.size(); ++w) threads.emplace_back(work, w);
  if (!sessions.empty()) work(0);
  for (auto& t : threads) t.join();

  for (auto& slot : slots) report.results.push_back(std::move(*slot));
  for (const auto& r : report.results) {
    ++report.summary.total;
    switch (r.verdict.kind) {
      case VerdictKind::kPass: ++report.summary.pass; break;
      case VerdictKind::kFail: ++report.summary.fail; break;
      case VerdictKind::kError: ++report.summary.error; break;
      case VerdictKind::kInconclusive: ++report.summary.inconclusive; break;
    }
  }
  return report;
}

ObsEquivReport obs_equiv(const IutAdapter& a, const IutAdapter& b, const Specification& spec,
                         std::size_t size_bound) {
  ObsEquivReport report;
  auto sa = a.open();
  auto sb = b.open();
  auto show = [](const EvalOutcome& o) {
    switch (o.kind) {
      case EvalOutcome::Kind::kValue: return render_term(*o.value);
      case EvalOutcome::Kind::kOpaque: return std::string("OPAQUE");
      case EvalOutcome::Kind::kFuel: return std::string("fuel exhausted");
      case EvalOutcome::Kind::kError:
      case EvalOutcome::Kind::kProtocol: return "ERROR " + o.message;
    }
    return std::string("ERROR");
  };
  TermEnumerator terms(spec.signature, false);
  for (const auto& s : spec.signature.sorts()) {
    if (!spec.signature.is_observable(s)) continue;
    for (const auto& t : terms.up_to(s, size_bound)) {
      ++report.terms_checked;
      if (!sa->alive()) sa = a.open();
      if (!sb->alive()) sb = b.open();
      EvalOutcome va = sa->eval(t);
      EvalOutcome vb = sb->eval(t);
      bool same = va.kind == EvalOutcome::Kind::kValue && vb.kind == EvalOutcome::Kind::kValue && *va.value == *vb.value;
      if (!same) report.disagreements.push_back({t, show(va), show(vb)});
    }
  }
  return report;
}

}  // namespace axiomtest
