// Running test suites against implementations under test (IUTs).
//
// Wire protocol spoken with external IUTs, one line per message:
//   -> HELLO axiomtest/1        <- OK <iut-name>
//   -> EVAL <term>              <- VALUE <term> | OPAQUE | ERROR <message>
//   -> BYE                      (then end of input)
#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axiomtest/select.hpp"

namespace axiomtest {

/// The IUT could not be started or did not complete the handshake.
class HandshakeError : public Error {
 public:
  using Error::Error;
};

struct EvalOutcome {
  enum class Kind { kValue, kOpaque, kError, kFuel, kProtocol };
  Kind kind = Kind::kError;
  std::optional<Term> value;
  std::string message;
};

class IutSession {
 public:
  virtual ~IutSession() = default;
  virtual const std::string& name() const = 0;
  virtual EvalOutcome eval(const Term& t) = 0;
  /// False once the session can no longer answer (crash, timeout).
  virtual bool alive() const { return true; }
};

class IutAdapter {
 public:
  virtual ~IutAdapter() = default;
  /// Starts a session; throws HandshakeError on failure.
  virtual std::unique_ptr<IutSession> open() const = 0;
  virtual std::string describe() const = 0;
  /// Specification whose signature reads and writes IUT terms.
  virtual const Specification& spec() const = 0;
};

std::unique_ptr<IutAdapter> make_reference_adapter(const Specification& spec, const Fuel& fuel = {});
std::unique_ptr<IutAdapter> make_mutant_adapter(const Specification& spec, const std::string& mutation_id,
                                                const Fuel& fuel = {}, const SearchPath& search_path = {});
/// Runs `command` through /bin/sh. `timeout_ms` bounds the handshake and
/// every request.
std::unique_ptr<IutAdapter> make_external_adapter(const Specification& spec, const std::string& command,
                                                  int timeout_ms = 5000);
/// Parses `reference`, `mutant:ID` or `exec:CMD`.
std::unique_ptr<IutAdapter> make_adapter(const std::string& iut, const Specification& spec, const Fuel& fuel = {},
                                         const SearchPath& search_path = {});

enum class VerdictKind { kPass, kFail, kError, kInconclusive };
enum class InconclusiveReason { kFuel, kProtocol, kOpaqueComparison };

struct Verdict {
  VerdictKind kind = VerdictKind::kPass;
  InconclusiveReason reason = InconclusiveReason::kProtocol;
  std::optional<Term> lhs_value;
  std::optional<Term> rhs_value;
  std::string message;

  static Verdict pass(Term l, Term r) { return {VerdictKind::kPass, {}, std::move(l), std::move(r), {}}; }
  static Verdict fail(Term l, Term r) { return {VerdictKind::kFail, {}, std::move(l), std::move(r), {}}; }
  static Verdict error(std::string msg) { return {VerdictKind::kError, {}, {}, {}, std::move(msg)}; }
  static Verdict inconclusive(InconclusiveReason r, std::string msg) {
    return {VerdictKind::kInconclusive, r, {}, {}, std::move(msg)};
  }
};

std::string to_string(VerdictKind k);
std::string to_string(InconclusiveReason r);
/// `Pass`, `Fail(l, r)`, `Error(msg)` or `Inconclusive(reason)`.
std::string to_string(const Verdict& v);

Verdict run_test(IutSession& session, const Signature& sig, const TestCase& tc);
Verdict run_test(const IutAdapter& adapter, const TestCase& tc);

struct TestResult {
  TestCase test;
  Verdict verdict;
  double ms = 0;
};

struct RunSummary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t error = 0;
  std::size_t inconclusive = 0;

  bool all_pass() const { return pass == total; }
  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct RunReport {
  std::string spec_name;
  std::string suite_sha256;
  std::string iut;
  TestSuite suite_header;  // tests left empty; keeps the hypothesis ledger
  std::vector<TestResult> results;  // suite order
  RunSummary summary;
};

/// Opens `parallelism` sessions up front (a handshake failure throws before
/// any test runs), then distributes tests over them.
RunReport run_suite(const IutAdapter& adapter, const TestSuite& suite, std::size_t parallelism = 1);

struct Disagreement {
  Term term;
  std::string a_value;
  std::string b_value;
};

struct ObsEquivReport {
  std::vector<Disagreement> disagreements;
  std::size_t terms_checked = 0;

  bool equivalent() const { return disagreements.empty(); }
};

/// Compares both IUTs on every ground term of observable sort with size <=
/// size_bound.
ObsEquivReport obs_equiv(const IutAdapter& a, const IutAdapter& b, const Specification& spec,
                         std::size_t size_bound);

std::string suite_to_json(const TestSuite& suite);
/// Terms are read with `sig`. Throws Error on malformed documents.
TestSuite suite_from_json(const std::string& text, const Signature& sig);
/// Spec name recorded in a suite document.
std::string suite_spec_name(const std::string& text);
std::string report_to_json(const RunReport& report);

}  // namespace axiomtest
