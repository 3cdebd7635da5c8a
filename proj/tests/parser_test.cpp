#include <gtest/gtest.h>

#include "support.hpp"

using namespace testing_support;

namespace {

const Specification& spec() {
  static const Specification s = containers();
  return s;
}

const char* kTinyBase = R"(
spec Tiny
sorts T
constructors
  a : -> T
  b : -> T
ops
  f : T -> T
vars
  v : T
axioms
  [f_a] f(a) = b
  [f_b] f(b) = a
end
)";

}  // namespace

TEST(ParseSpec, ContainersShape) {
  EXPECT_EQ(spec().name, "Containers");
  EXPECT_EQ(spec().signature.sorts().size(), 3u);
  EXPECT_EQ(spec().own_sorts, std::vector<Sort>{Sort{"Container"}});
  auto axs = axioms_under_test(spec());
  ASSERT_EQ(axs.size(), 6u);
  for (auto* ax : axs) EXPECT_EQ(ax->origin, "Containers");
  EXPECT_EQ(spec().find_axiom("eq_zero_zero")->origin, "NatBool");
}

TEST(ParseSpec, ContainersGolden) {
  // Each axiom rendered back, premises joined by " & ".
  const std::vector<std::string> golden = {
      "[isin_empty] isin(x, []) = false",
      "[isin_1] eq(x, y) = true => isin(x, y :: c) = true",
      "[isin_2] eq(x, y) = false => isin(x, y :: c) = isin(x, c)",
      "[remove_empty] remove(x, []) = []",
      "[remove_1] eq(x, y) = true => remove(x, y :: c) = c",
      "[remove_2] eq(x, y) = false => remove(x, y :: c) = y :: remove(x, c)",
  };
  auto axs = axioms_under_test(spec());
  ASSERT_EQ(axs.size(), golden.size());
  for (std::size_t i = 0; i < golden.size(); ++i) EXPECT_EQ(render_axiom(*axs[i]), golden[i]);
}

TEST(ParseSpec, AxiomSpansPointIntoFile) {
  const auto* ax = spec().find_axiom("isin_1");
  ASSERT_NE(ax, nullptr);
  EXPECT_GT(ax->span.line, 1u);
  EXPECT_GE(ax->span.column, 1u);
}

TEST(ParseSpec, RenderRoundTrip) {
  for (const char* file : {"nat_bool.spec", "containers.spec", "containers_obs.spec"}) {
    auto s = shipped(file);
    auto again = parse_spec(render_spec(s), {});
    EXPECT_TRUE(structurally_equal(s, again)) << file;
    EXPECT_EQ(render_spec(again), render_spec(s));
  }
}

TEST(ParseSpec, SyntaxErrorHasSpan) {
  const std::string text = "spec Bad\nsorts T\nconstructors\n  a : -> T\naxioms\n  axiom isin(x = y\nend\n";
  try {
    parse_spec(text, {});
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 6u);
    EXPECT_FALSE(e.detail().empty());
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ParseSpec, ImportCycleIsRejected) {
  auto dir = temp_dir("cycle");
  write_file(dir / "a.spec", "spec A imports B\nsorts S\nconstructors\n  s : -> S\naxioms\nend\n");
  write_file(dir / "b.spec", "spec B imports A\nsorts U\nconstructors\n  u : -> U\naxioms\nend\n");
  EXPECT_THROW(load_spec(dir / "a.spec"), SpecError);
}

TEST(ParseSpec, MissingImportIsRejected) {
  EXPECT_THROW(parse_spec("spec A imports Nowhere\nsorts S\nconstructors\n  s : -> S\naxioms\nend\n", {}),
               SpecError);
}

TEST(ParseSpec, ConstructorFlagClashIsRejected) {
  auto dir = temp_dir("clash");
  write_file(dir / "tiny.spec", kTinyBase);
  const char* clash = "spec Clash imports Tiny\nsorts T\nconstructors\n  f : T -> T\naxioms\nend\n";
  EXPECT_THROW(parse_spec(clash, {dir}), SpecError);
}

TEST(ParseSpec, DuplicateLabelIsRejected) {
  const char* text =
      "spec D\nsorts T\nconstructors\n  a : -> T\nops\n  f : T -> T\naxioms\n  [l] f(a) = a\n  [l] f(a) = a\nend\n";
  EXPECT_THROW(parse_spec(text, {}), ParseError);
}

TEST(ParseSpec, SnakeCaseImportResolution) {
  auto p = resolve_spec_file("NatBool", {spec_dir()});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->filename(), "nat_bool.spec");
}

TEST(ParseSpec, OverrideReplacesImportedAxiom) {
  auto m = load_mutation("M3");
  const auto* ax = m.find_axiom("isin_1");
  ASSERT_NE(ax, nullptr);
  EXPECT_EQ(render_equation(ax->conclusion), "isin(x, y :: c) = false");
  EXPECT_EQ(m.overrides, std::vector<std::string>{"isin_1"});
}

TEST(ParseTerm, ObservationalTestTerm) {
  Term t = term(spec(), "isin(3, remove(3, []))");
  EXPECT_EQ(t.sort(), Sort{"Bool"});
  EXPECT_EQ(t.op().name, "isin");
  EXPECT_EQ(t.arg(1).op().name, "remove");
}

TEST(ParseTerm, NumeralSugar) {
  EXPECT_EQ(term(spec(), "2"), term(spec(), "succ(succ(0))"));
  EXPECT_EQ(render_term(term(spec(), "succ(succ(0))")), "2");
}

TEST(ParseTerm, ConsIsRightAssociative) {
  EXPECT_EQ(term(spec(), "0 :: 1 :: []"), term(spec(), "0 :: (1 :: [])"));
  EXPECT_EQ(render_term(term(spec(), "(0 :: (1 :: []))")), "0 :: 1 :: []");
}

TEST(ParseTerm, UnknownSymbolAndSortErrors) {
  EXPECT_THROW(term(spec(), "frobnicate(0)"), ParseError);
  EXPECT_THROW(term(spec(), "isin([], 0)"), ParseError);
  EXPECT_THROW(term(spec(), "isin(0, []"), ParseError);
}

TEST(ParseTerm, RoundTripOverEnumeratedTerms) {
  std::size_t checked = 0;
  for (const auto& s : spec().signature.sorts())
    for (const auto& t : enumerate_ground_terms(spec().signature, s, 7)) {
      ASSERT_EQ(term(spec(), render_term(t)), t) << render_term(t);
      ++checked;
    }
  EXPECT_GE(checked, 100u);
}

TEST(ParseTerm, ExtraVariables) {
  std::vector<VarDecl> extra{{"z", Sort{"Container"}}};
  Term t = term(spec(), "isin(x, z)", extra);
  EXPECT_EQ(t.arg(1).var_name(), "z");
}

TEST(ParseEquation, SortsMustAgree) {
  EXPECT_THROW(equation(spec(), "isin(0, []) = []"), ParseError);
  auto e = equation(spec(), "remove(0, 0 :: []) = []");
  EXPECT_EQ(e.sort(), Sort{"Container"});
}
