// Shared helpers and independent oracles for the test suites.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "axiomtest/core.hpp"
#include "axiomtest/harness.hpp"
#include "axiomtest/observe.hpp"
#include "axiomtest/parser.hpp"
#include "axiomtest/rewrite.hpp"
#include "axiomtest/select.hpp"

namespace testing_support {

using namespace axiomtest;

std::filesystem::path spec_dir();
std::filesystem::path cli_path();
std::filesystem::path demo_iut_path();

Specification containers();
Specification containers_obs();
Specification shipped(const std::string& file);

Term term(const Specification& spec, const std::string& text, std::vector<VarDecl> extra = {});
Equation equation(const Specification& spec, const std::string& text);

/// Semantic value of a Containers-signature ground term, computed directly
/// from the intended meaning of each symbol (no rewriting).
struct ModelValue {
  enum class Kind { kBool, kNat, kContainer } kind = Kind::kBool;
  bool b = false;
  std::uint64_t n = 0;
  std::vector<std::uint64_t> items;

  friend bool operator==(const ModelValue&, const ModelValue&) = default;
};

ModelValue model_eval(const Term& t);
/// Model value of a constructor term, read structurally.
ModelValue model_of_constructor(const Term& t);
bool model_holds(const Equation& e);

/// Random ground term of `sort` with at most `max_size` nodes over every
/// operation of the signature.
Term random_ground_term(const Signature& sig, const Sort& sort, std::size_t max_size, std::mt19937_64& rng);

/// Number of ground terms of every sort with size <= bound, counted by a
/// size recurrence over the signature (all terms, constructor terms).
struct TermCounts {
  std::uint64_t all = 0;
  std::uint64_t constructor_only = 0;
};
TermCounts count_terms(const Signature& sig, std::size_t bound);

/// Containers with elements in {0, succ(0)} and node count <= bound.
std::uint64_t count_small_containers(std::size_t bound);

/// Syntactic matching of a pattern equation onto a ground equation.
std::optional<Substitution> match_equation(const Equation& pattern, const Equation& ground);

/// Variable renaming bijection making the two lists equal.
bool alpha_equivalent(const std::vector<Equation>& a, const std::vector<Equation>& b);

/// Ground instantiations of the root axiom variables (each image of size <=
/// bound) that lie in the subdomain, decided with the semantic model.
std::set<std::string> solutions(const Specification& spec, const Subdomain& d, std::size_t bound);

struct CommandResult {
  int exit_code = -1;
  std::string output;
};
/// Runs through /bin/sh, capturing standard output.
CommandResult run_command(const std::string& command);

std::filesystem::path temp_dir(const std::string& tag);
void write_file(const std::filesystem::path& p, const std::string& text);
std::string read_file(const std::filesystem::path& p);

}  // namespace testing_support
