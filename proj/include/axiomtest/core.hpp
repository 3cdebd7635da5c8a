// Sorted first-order term algebra: signatures, terms, substitutions and
// ground constructor-term enumeration.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <tuple>
#include <string>
#include <unordered_map>
#include <vector>

namespace axiomtest {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SortError : public Error {
 public:
  using Error::Error;
};

struct Sort {
  std::string name;

  auto operator<=>(const Sort&) const = default;
};

struct OpSymbol {
  std::string name;
  std::vector<Sort> arg_sorts;
  Sort result_sort;
  bool is_constructor = false;

  std::size_t arity() const { return arg_sorts.size(); }
  bool is_constant() const { return arg_sorts.empty(); }
  /// Two symbols denote the same operation when name and argument sorts agree.
  bool same_profile(const OpSymbol& other) const {
    return name == other.name && arg_sorts == other.arg_sorts;
  }
};

using OpRef = std::shared_ptr<const OpSymbol>;

struct VarDecl {
  std::string name;
  Sort sort;

  auto operator<=>(const VarDecl&) const = default;
};

/// Sorts, operations (declaration order is significant for enumeration),
/// observable sorts and the globally scoped variables of a specification.
class Signature {
 public:
  void add_sort(Sort s) { sorts_.push_back(std::move(s)); }
  OpRef add_op(OpSymbol op);
  void add_var(VarDecl v) { vars_.push_back(std::move(v)); }
  void set_observable(std::set<Sort> obs) { observable_ = std::move(obs); }
  /// Drops the explicit observable set: every sort becomes observable.
  void clear_observable() { observable_.reset(); }

  const std::vector<Sort>& sorts() const { return sorts_; }
  const std::vector<OpRef>& ops() const { return ops_; }
  const std::vector<VarDecl>& vars() const { return vars_; }

  bool has_sort(const Sort& s) const;
  bool is_observable(const Sort& s) const;
  bool all_observable() const { return !observable_.has_value(); }
  std::set<Sort> observable_sorts() const;

  /// Resolves an operation by name and argument sorts.
  OpRef find_op(const std::string& name, std::span<const Sort> arg_sorts) const;
  /// All operations with the given name and arity, in declaration order.
  std::vector<OpRef> find_ops(const std::string& name, std::size_t arity) const;
  std::optional<VarDecl> find_var(const std::string& name) const;

  std::vector<OpRef> constructors_of(const Sort& s) const;
  std::vector<OpRef> ops_of(const Sort& s) const;
  /// Position of the op in declaration order; used for deterministic ordering.
  std::size_t op_index(const OpSymbol& op) const;

 private:
  std::vector<Sort> sorts_;
  std::vector<OpRef> ops_;
  std::vector<VarDecl> vars_;
  std::optional<std::set<Sort>> observable_;
};

enum class DefectKind {
  kUninhabitedSort,
  kDuplicateOperation,
  kDuplicateSort,
  kDuplicateVariable,
  kUndeclaredSort,
  kAmbiguousName,
};

struct Defect {
  DefectKind kind;
  std::string symbol;
  std::string message;
};

std::string to_string(DefectKind kind);

/// Empty iff every signature invariant holds.
std::vector<Defect> validate_signature(const Signature& sig);

/// Immutable, shared term: either a sorted variable or an operation
/// application. Size, groundness and hash are cached on construction.
class Term {
 public:
  static Term var(std::string name, Sort sort);
  static Term app(OpRef op, std::vector<Term> args = {});

  bool is_var() const { return node_->op == nullptr; }
  bool is_app() const { return node_->op != nullptr; }
  const std::string& var_name() const { return node_->name; }
  const OpSymbol& op() const { return *node_->op; }
  const OpRef& op_ref() const { return node_->op; }
  std::span<const Term> args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  const Sort& sort() const { return node_->sort; }

  /// Node count: every symbol and variable occurrence counts one.
  std::size_t size() const { return node_->size; }
  bool is_ground() const { return node_->ground; }
  /// True when every operation occurring in the term is a constructor.
  bool is_constructor_term() const { return node_->defined_count == 0; }
  /// Number of non-constructor operation occurrences.
  std::size_t defined_count() const { return node_->defined_count; }
  std::size_t hash() const { return node_->hash; }

  /// Subterm at a path of argument indices.
  const Term& at(std::span<const std::size_t> path) const;
  /// Copy with the subterm at `path` replaced.
  Term replace_at(std::span<const std::size_t> path, const Term& with) const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    std::string name;
    OpRef op;
    std::vector<Term> args;
    Sort sort;
    std::size_t size = 1;
    std::size_t defined_count = 0;
    bool ground = true;
    std::size_t hash = 0;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Returns the sort of `t`, checking arity, argument sorts and that every
/// operation belongs to `sig`. Throws SortError naming the ill-typed subterm.
Sort well_sorted(const Term& t, const Signature& sig);

bool is_ground(const Term& t);
std::set<VarDecl> variables_of(const Term& t);
/// Variables in order of first (preorder) occurrence.
std::vector<VarDecl> variables_in_order(const Term& t);
std::size_t term_size(const Term& t);

class Substitution {
 public:
  /// Throws SortError when the image sort differs from the variable sort.
  void bind(const VarDecl& v, Term image);
  const Term* find(const std::string& name) const;
  bool contains(const std::string& name) const { return map_.count(name) != 0; }
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& entries() const { return map_; }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<std::string, Term> map_;
};

/// Simultaneous replacement; unbound variables stay in place.
Term apply_substitution(const Term& t, const Substitution& rho);
/// `after ∘ first`: applying the result equals applying `first` then `after`.
Substitution compose(const Substitution& after, const Substitution& first);

struct Equation {
  Term lhs;
  Term rhs;

  const Sort& sort() const { return lhs.sort(); }
  bool is_ground() const { return lhs.is_ground() && rhs.is_ground(); }
  friend bool operator==(const Equation&, const Equation&) = default;
};

Equation apply_substitution(const Equation& e, const Substitution& rho);

struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ConditionalAxiom {
  std::string label;
  std::vector<Equation> premises;
  Equation conclusion;
  /// Name of the specification whose text declares the axiom.
  std::string origin;
  SourceSpan span;
};

std::set<VarDecl> variables_of(const ConditionalAxiom& ax);

/// A flattened positive conditional specification.
struct Specification {
  std::string name;
  Signature signature;
  std::vector<ConditionalAxiom> axioms;
  std::vector<std::string> imports;
  /// Sorts declared by the top-level specification text itself.
  std::vector<Sort> own_sorts;
  /// Labels of imported axioms replaced through `override`.
  std::vector<std::string> overrides;

  const ConditionalAxiom* find_axiom(const std::string& label) const;
};

/// Axioms that mention at least one sort declared by the top-level spec.
/// Axioms living entirely over imported sorts belong to the imported basic
/// types and are used for evaluation only.
std::vector<const ConditionalAxiom*> axioms_under_test(const Specification& spec);

/// Lazily built, cached ground-term tables. Terms of one exact size are
/// ordered by operation declaration order, then lexicographically on the
/// children (each child list being itself in this order).
class TermEnumerator {
 public:
  /// `constructors_only` restricts to constructor terms; `max_defined`
  /// bounds the number of non-constructor occurrences per term.
  TermEnumerator(const Signature& sig, bool constructors_only,
                 std::optional<std::size_t> max_defined = std::nullopt);

  const std::vector<Term>& exactly(const Sort& s, std::size_t size);
  /// Terms of size 1..max_size, ordered by size first.
  std::vector<Term> up_to(const Sort& s, std::size_t max_size);

 private:
  const std::vector<Term>& exactly(const Sort& s, std::size_t size, std::size_t budget);

  const Signature& sig_;
  bool constructors_only_;
  std::optional<std::size_t> max_defined_;
  std::map<std::tuple<Sort, std::size_t, std::size_t>, std::vector<Term>> cache_;
};

/// Exhaustive, duplicate-free ground constructor terms of sort `s`,
/// ordered by size then structure.
std::vector<Term> enumerate_constructor_terms(const Signature& sig, const Sort& s,
                                              std::size_t max_size);

/// Ground terms over the whole signature with at most `max_defined`
/// non-constructor occurrences (unbounded when empty).
std::vector<Term> enumerate_ground_terms(const Signature& sig, const Sort& s,
                                         std::size_t max_size,
                                         std::optional<std::size_t> max_defined = std::nullopt);

}  // namespace axiomtest
