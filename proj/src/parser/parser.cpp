#include "axiomtest/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "lexer.hpp"

namespace axiomtest {

namespace {

std::string format_error(const SourceSpan& span, const std::string& message,
                         const std::vector<std::string>& expected) {
  std::string out = span.file + ":" + std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out += i + 1 == expected.size() ? " or " : ", ";
      out += expected[i];
    }
    out += ")";
  }
  return out;
}

}  // namespace

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : Error(format_error(span, message, expected)),
      span_(std::move(span)),
      detail_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

using detail::Tok;
using detail::Token;

const std::set<std::string> kKeywords = {"spec", "imports", "sorts", "observable", "constructors",
                                         "ops",  "vars",    "axioms", "end",       "override"};

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(std::string_view kw) const { return at(Tok::kIdent) && peek().text == kw; }
  bool at_any_keyword() const { return at(Tok::kIdent) && kKeywords.count(peek().text); }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected = {}) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.span, what + ", found " + found, std::move(expected));
  }
  const Token& expect(Tok k) {
    if (!at(k)) fail("unexpected token", {detail::describe(k)});
    return next();
  }
  void expect_keyword(const std::string& kw) {
    if (!at_keyword(kw)) fail("unexpected token", {"'" + kw + "'"});
    next();
  }
  const Token& expect_name(const std::string& what) {
    if (!at(Tok::kIdent) || at_any_keyword()) fail("unexpected token", {what});
    return next();
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

OpRef resolve_op(const Signature& sig, const Token& at, const std::string& name, const std::vector<Term>& args) {
  std::vector<Sort> sorts;
  for (const auto& a : args) sorts.push_back(a.sort());
  if (auto op = sig.find_op(name, sorts)) return op;
  std::string profile;
  for (std::size_t i = 0; i < sorts.size(); ++i) profile += (i ? ", " : "") + sorts[i].name;
  if (sig.find_ops(name, args.size()).empty() && sig.find_ops(name, 0).empty() &&
      std::none_of(sig.ops().begin(), sig.ops().end(), [&](const OpRef& o) { return o->name == name; }))
    throw ParseError(at.span, "unknown symbol '" + name + "'");
  throw ParseError(at.span, "no operation '" + name + "' with argument sorts (" + profile + ")");
}

class TermParser {
 public:
  TermParser(TokenStream& ts, const Signature& sig, std::span<const VarDecl> extra)
      : ts_(ts), sig_(sig), extra_(extra) {}

  Term term() {
    Term lhs = primary();
    if (!ts_.at(Tok::kCons)) return lhs;
    const Token& op_tok = ts_.next();
    Term rhs = term();
    std::vector<Term> args{lhs, rhs};
    OpRef op = resolve_op(sig_, op_tok, "::", args);
    return Term::app(std::move(op), std::move(args));
  }

  Equation equation() {
    Term lhs = term();
    const Token& eq_tok = ts_.expect(Tok::kEquals);
    Term rhs = term();
    if (lhs.sort() != rhs.sort())
      throw ParseError(eq_tok.span, "equation sides have different sorts (" + lhs.sort().name + " and " +
                                        rhs.sort().name + ")");
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  Term primary() {
    if (ts_.at(Tok::kLParen)) {
      ts_.next();
      Term t = term();
      ts_.expect(Tok::kRParen);
      return t;
    }
    if (ts_.at(Tok::kNat)) return numeral(ts_.next());
    if (!ts_.at(Tok::kIdent) || ts_.at_any_keyword()) ts_.fail("expected a term", {"identifier", "numeral", "'('"});
    const Token& name = ts_.next();
    if (ts_.at(Tok::kLParen)) {
      ts_.next();
      std::vector<Term> args;
      args.push_back(term());
      while (ts_.at(Tok::kComma)) {
        ts_.next();
        args.push_back(term());
      }
      if (!ts_.at(Tok::kRParen)) ts_.fail("unexpected token", {"','", "')'"});
      ts_.next();
      OpRef op = resolve_op(sig_, name, name.text, args);
      return Term::app(std::move(op), std::move(args));
    }
    for (const auto& v : extra_)
      if (v.name == name.text) return Term::var(v.name, v.sort);
    if (auto v = sig_.find_var(name.text)) return Term::var(v->name, v->sort);
    auto constants = sig_.find_ops(name.text, 0);
    if (constants.empty()) throw ParseError(name.span, "unknown symbol '" + name.text + "'");
    if (constants.size() > 1) throw ParseError(name.span, "ambiguous constant '" + name.text + "'");
    return Term::app(constants.front());
  }

  Term numeral(const Token& tok) {
    auto zeros = sig_.find_ops("0", 0);
    if (zeros.empty()) throw ParseError(tok.span, "numeral requires a constant '0'");
    Term t = Term::app(zeros.front());
    unsigned long long n = 0;
    try {
      n = std::stoull(tok.text);
    } catch (const std::exception&) {
      throw ParseError(tok.span, "numeral out of range");
    }
    if (n == 0) return t;
    std::vector<Sort> arg{t.sort()};
    OpRef succ = sig_.find_op("succ", arg);
    if (!succ) throw ParseError(tok.span, "numeral requires 'succ : " + t.sort().name + " -> " + t.sort().name + "'");
    for (unsigned long long i = 0; i < n; ++i) t = Term::app(succ, {t});
    return t;
  }

  TokenStream& ts_;
  const Signature& sig_;
  std::span<const VarDecl> extra_;
};

struct Named {
  std::string name;
  SourceSpan span;
};

struct RawOp {
  Named name;
  std::vector<std::string> args;
  std::string result;
  bool constructor = false;
};

struct RawVar {
  Named name;
  std::string sort;
};

struct RawAxiom {
  bool is_override = false;
  Named label;
  std::vector<Token> tokens;
};

struct RawSpec {
  Named name;
  std::vector<Named> imports;
  std::vector<Named> sorts;
  std::optional<std::vector<Named>> observable;
  std::vector<RawOp> ops;
  std::vector<RawVar> vars;
  std::vector<RawAxiom> axioms;
};

std::vector<Named> name_list(TokenStream& ts, const std::string& what) {
  std::vector<Named> out;
  const Token& first = ts.expect_name(what);
  out.push_back({first.text, first.span});
  while (ts.at(Tok::kComma)) {
    ts.next();
    const Token& t = ts.expect_name(what);
    out.push_back({t.text, t.span});
  }
  return out;
}

bool at_op_name(const TokenStream& ts) {
  return (ts.at(Tok::kIdent) && !ts.at_any_keyword()) || ts.at(Tok::kNat) || ts.at(Tok::kCons);
}

RawOp op_decl(TokenStream& ts, bool constructor) {
  RawOp op;
  op.constructor = constructor;
  if (!at_op_name(ts)) ts.fail("unexpected token", {"operation name"});
  const Token& n = ts.next();
  op.name = {n.text, n.span};
  ts.expect(Tok::kColon);
  if (!ts.at(Tok::kArrow)) {
    for (auto& s : name_list(ts, "sort name")) op.args.push_back(s.name);
  }
  ts.expect(Tok::kArrow);
  op.result = ts.expect_name("sort name").text;
  return op;
}

// Collects an axiom's tokens; terms are resolved once the signature is complete.
RawAxiom axiom_decl(TokenStream& ts) {
  RawAxiom ax;
  if (ts.at_keyword("override")) {
    ts.next();
    ax.is_override = true;
  }
  ts.expect(Tok::kLBracket);
  const Token& label = ts.expect_name("axiom label");
  ax.label = {label.text, label.span};
  ts.expect(Tok::kRBracket);
  while (!ts.at(Tok::kEnd) && !ts.at(Tok::kLBracket) && !ts.at_keyword("end") && !ts.at_keyword("override"))
    ax.tokens.push_back(ts.next());
  if (ax.tokens.empty()) ts.fail("empty axiom", {"equation"});
  ax.tokens.push_back({Tok::kEnd, "", ts.peek().span});
  return ax;
}

RawSpec parse_raw(std::string_view text, const std::string& file) {
  TokenStream ts(detail::tokenize(text, file));
  RawSpec raw;
  ts.expect_keyword("spec");
  const Token& name = ts.expect_name("specification name");
  raw.name = {name.text, name.span};
  if (ts.at_keyword("imports")) {
    ts.next();
    raw.imports = name_list(ts, "specification name");
  }
  ts.expect_keyword("sorts");
  do {
    for (auto& s : name_list(ts, "sort name")) raw.sorts.push_back(std::move(s));
    if (ts.at(Tok::kComma)) ts.next();
  } while (ts.at(Tok::kIdent) && !ts.at_any_keyword());
  if (ts.at_keyword("observable")) {
    ts.next();
    raw.observable = name_list(ts, "sort name");
  }
  ts.expect_keyword("constructors");
  do {
    raw.ops.push_back(op_decl(ts, true));
  } while (at_op_name(ts));
  if (ts.at_keyword("ops")) {
    ts.next();
    while (at_op_name(ts)) raw.ops.push_back(op_decl(ts, false));
  }
  if (ts.at_keyword("vars")) {
    ts.next();
    while (ts.at(Tok::kIdent) && !ts.at_any_keyword()) {
      auto names = name_list(ts, "variable name");
      ts.expect(Tok::kColon);
      std::string sort = ts.expect_name("sort name").text;
      for (auto& n : names) raw.vars.push_back({std::move(n), sort});
    }
  }
  ts.expect_keyword("axioms");
  while (ts.at(Tok::kLBracket) || ts.at_keyword("override")) raw.axioms.push_back(axiom_decl(ts));
  ts.expect_keyword("end");
  if (!ts.at(Tok::kEnd)) ts.fail("trailing input after 'end'", {"end of input"});
  return raw;
}

ConditionalAxiom build_axiom(const RawAxiom& raw, const Signature& sig, const std::string& origin) {
  TokenStream ts(raw.tokens);
  TermParser tp(ts, sig, {});
  std::vector<Equation> premises;
  Equation conclusion = tp.equation();
  if (ts.at(Tok::kAmp) || ts.at(Tok::kImplies)) {
    premises.push_back(std::move(conclusion));
    while (ts.at(Tok::kAmp)) {
      ts.next();
      premises.push_back(tp.equation());
    }
    ts.expect(Tok::kImplies);
    conclusion = tp.equation();
  }
  if (!ts.at(Tok::kEnd)) ts.fail("unexpected token", {"'&'", "'=>'", "next axiom", "'end'"});
  return ConditionalAxiom{raw.label.name, std::move(premises), std::move(conclusion), origin, raw.label.span};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw SpecError("cannot read '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Flattener {
 public:
  explicit Flattener(SearchPath path) : path_(std::move(path)) {}

  Specification flatten(const RawSpec& raw, const SearchPath& local) {
    if (std::find(stack_.begin(), stack_.end(), raw.name.name) != stack_.end()) {
      std::string cycle;
      for (const auto& s : stack_) cycle += s + " -> ";
      throw SpecError("import cycle: " + cycle + raw.name.name);
    }
    stack_.push_back(raw.name.name);

    Specification spec;
    spec.name = raw.name.name;
    std::optional<std::set<Sort>> observable;
    std::set<std::string> imported_ops;  // profiles contributed by imports

    for (const auto& imp : raw.imports) {
      spec.imports.push_back(imp.name);
      SearchPath sp = local;
      sp.insert(sp.end(), path_.begin(), path_.end());
      auto file = resolve_spec_file(imp.name, sp);
      if (!file) throw SpecError(format_error(imp.span, "cannot find imported specification '" + imp.name + "'", {}));
      RawSpec sub_raw = parse_raw(read_file(*file), file->string());
      SearchPath sub_local{file->parent_path()};
      Specification sub = flatten(sub_raw, sub_local);
      merge(spec, sub, observable);
    }

    Signature& sig = spec.signature;
    std::set<Sort> imported_sorts(sig.sorts().begin(), sig.sorts().end());
    for (const auto& s : raw.sorts) {
      Sort sort{s.name};
      spec.own_sorts.push_back(sort);
      if (!imported_sorts.count(sort)) sig.add_sort(sort);
    }
    std::size_t imported_op_count = sig.ops().size();
    for (const auto& op : raw.ops) {
      OpSymbol sym{op.name.name, {}, Sort{op.result}, op.constructor};
      for (const auto& a : op.args) sym.arg_sorts.push_back(Sort{a});
      bool skip = false;
      for (std::size_t i = 0; i < imported_op_count; ++i) {
        const OpSymbol& existing = *sig.ops()[i];
        if (!existing.same_profile(sym)) continue;
        if (existing.result_sort != sym.result_sort || existing.is_constructor != sym.is_constructor)
          throw SpecError(format_error(op.name.span, "signature clash: '" + sym.name +
                                                         "' redeclared with a different result sort or constructor flag", {}));
        skip = true;
      }
      if (!skip) sig.add_op(std::move(sym));
    }
    std::size_t imported_var_count = sig.vars().size();
    for (const auto& v : raw.vars) {
      bool skip = false;
      for (std::size_t i = 0; i < imported_var_count; ++i) {
        const VarDecl& existing = sig.vars()[i];
        if (existing.name != v.name.name) continue;
        if (existing.sort.name != v.sort)
          throw SpecError(format_error(v.name.span, "signature clash: variable '" + v.name.name +
                                                        "' redeclared with sort " + v.sort, {}));
        skip = true;
      }
      if (!skip) sig.add_var({v.name.name, Sort{v.sort}});
    }
    if (raw.observable) {
      if (!observable) observable.emplace();
      for (const auto& s : *raw.observable) observable->insert(Sort{s.name});
    }
    if (observable) sig.set_observable(*observable);

    for (const auto& rax : raw.axioms) {
      ConditionalAxiom ax = build_axiom(rax, sig, spec.name);
      auto it = std::find_if(spec.axioms.begin(), spec.axioms.end(),
                             [&](const ConditionalAxiom& a) { return a.label == ax.label; });
      if (rax.is_override) {
        if (it == spec.axioms.end() || it->origin == spec.name)
          throw ParseError(rax.label.span, "override of unknown imported axiom '" + ax.label + "'");
        *it = std::move(ax);
        spec.overrides.push_back(rax.label.name);
      } else {
        if (it != spec.axioms.end()) throw ParseError(rax.label.span, "duplicate axiom label '" + ax.label + "'");
        spec.axioms.push_back(std::move(ax));
      }
    }

    stack_.pop_back();
    return spec;
  }

 private:
  static void merge(Specification& into, const Specification& sub, std::optional<std::set<Sort>>& observable) {
    Signature& sig = into.signature;
    for (const auto& s : sub.signature.sorts())
      if (!sig.has_sort(s)) sig.add_sort(s);
    for (const auto& op : sub.signature.ops()) {
      OpRef existing = sig.find_op(op->name, op->arg_sorts);
      if (!existing) {
        sig.add_op(*op);
      } else if (existing->result_sort != op->result_sort || existing->is_constructor != op->is_constructor) {
        throw SpecError("signature clash: '" + op->name + "' imported with conflicting declarations");
      }
    }
    for (const auto& v : sub.signature.vars()) {
      auto existing = sig.find_var(v.name);
      if (!existing) {
        sig.add_var(v);
      } else if (existing->sort != v.sort) {
        throw SpecError("signature clash: variable '" + v.name + "' imported with sorts " + existing->sort.name +
                        " and " + v.sort.name);
      }
    }
    if (!sub.signature.all_observable()) {
      if (!observable) observable.emplace();
      observable->merge(sub.signature.observable_sorts());
    }
    for (const auto& ax : sub.axioms) {
      const ConditionalAxiom* existing = into.find_axiom(ax.label);
      if (!existing) {
        into.axioms.push_back(ax);
      } else if (existing->origin != ax.origin) {
        throw SpecError("duplicate axiom label '" + ax.label + "' imported from " + existing->origin + " and " +
                        ax.origin);
      }
    }
  }

  SearchPath path_;
  std::vector<std::string> stack_;
};

std::string snake_case(const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i > 0 && name[i - 1] != '_') out += '_';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::optional<std::filesystem::path> resolve_spec_file(const std::string& name, const SearchPath& search_path) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::vector<std::string> candidates{name + ".spec", lower + ".spec", snake_case(name) + ".spec"};
  for (const auto& dir : search_path)
    for (const auto& c : candidates) {
      std::error_code ec;
      auto p = dir / c;
      if (std::filesystem::is_regular_file(p, ec)) return p;
    }
  return std::nullopt;
}

Specification parse_spec(std::string_view text, const SearchPath& search_path, const std::string& file) {
  RawSpec raw = parse_raw(text, file);
  Flattener f(search_path);
  return f.flatten(raw, {});
}

Specification load_spec(const std::filesystem::path& file, const SearchPath& search_path) {
  SearchPath sp{file.parent_path().empty() ? std::filesystem::path(".") : file.parent_path()};
  sp.insert(sp.end(), search_path.begin(), search_path.end());
  return parse_spec(read_file(file), sp, file.string());
}

Term parse_term(std::string_view text, const Signature& sig, std::span<const VarDecl> extra_vars) {
  TokenStream ts(detail::tokenize(text, "<term>"));
  TermParser tp(ts, sig, extra_vars);
  Term t = tp.term();
  if (!ts.at(Tok::kEnd)) ts.fail("trailing input after term", {"end of input"});
  return t;
}

Equation parse_equation(std::string_view text, const Signature& sig, std::span<const VarDecl> extra_vars) {
  TokenStream ts(detail::tokenize(text, "<equation>"));
  TermParser tp(ts, sig, extra_vars);
  Equation e = tp.equation();
  if (!ts.at(Tok::kEnd)) ts.fail("trailing input after equation", {"end of input"});
  return e;
}

}  // namespace axiomtest
