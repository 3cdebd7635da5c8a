// Textual specification format and term syntax.
//
//   spec    ::= "spec" IDENT ("imports" IDENT ("," IDENT)*)? "sorts" sortdecl+
//               ("observable" IDENT ("," IDENT)*)? "constructors" opdecl+
//               ("ops" opdecl*)? ("vars" vardecl*)? "axioms" axiom* "end"
//   opdecl  ::= IDENT ":" (IDENT ("," IDENT)*)? "->" IDENT
//   vardecl ::= IDENT ("," IDENT)* ":" IDENT
//   axiom   ::= ("override")? "[" IDENT "]" (eq ("&" eq)* "=>")? eq
//   eq      ::= term "=" term
//   term    ::= IDENT | NAT | IDENT "(" term ("," term)* ")" | term "::" term
//
// `--` starts a comment. `[]` and `__::__` (or `::`) are accepted as
// operation names; decimal literals abbreviate succ-towers over 0.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "axiomtest/core.hpp"

namespace axiomtest {

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& detail() const { return detail_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string detail_;
  std::vector<std::string> expected_;
};

/// Import resolution failures: missing file, cycle, signature clash.
class SpecError : public Error {
 public:
  using Error::Error;
};

using SearchPath = std::vector<std::filesystem::path>;

/// Finds `<name>.spec`, its lowercase form, or its snake_case form
/// (`NatBool` -> `nat_bool.spec`) in the search path.
std::optional<std::filesystem::path> resolve_spec_file(const std::string& name,
                                                       const SearchPath& search_path);

/// Parses a specification and flattens its imports into one signature and
/// axiom list (imported material first).
Specification parse_spec(std::string_view text, const SearchPath& search_path,
                         const std::string& file = "<input>");
/// Reads `file`; its directory is searched first for imports.
Specification load_spec(const std::filesystem::path& file, const SearchPath& search_path = {});

/// `extra_vars` extends the signature's variables (context holes, parameters).
Term parse_term(std::string_view text, const Signature& sig, std::span<const VarDecl> extra_vars = {});
Equation parse_equation(std::string_view text, const Signature& sig, std::span<const VarDecl> extra_vars = {});

/// Prefix form with `::` infix (right associative) and decimal numerals for
/// ground succ-towers over 0.
std::string render_term(const Term& t);
std::string render_equation(const Equation& e);
std::string render_axiom(const ConditionalAxiom& ax);
/// Renders a flattened specification without imports.
std::string render_spec(const Specification& spec);

/// Same sorts, variables, constructors and other operations (each list in
/// order) and same axioms; provenance is ignored.
bool structurally_equal(const Specification& a, const Specification& b);

}  // namespace axiomtest
