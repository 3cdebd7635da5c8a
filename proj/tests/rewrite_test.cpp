#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace testing_support;

namespace {

const Specification& spec() {
  static const Specification s = containers();
  return s;
}

const ConditionalRewriteSystem& crs() {
  static const ConditionalRewriteSystem r = orient(spec());
  return r;
}

Specification with_nat_bool(const std::string& body) { return parse_spec(body, {spec_dir()}); }

bool has_orient_defect(const ConditionalRewriteSystem& r, OrientDefectKind k, const std::string& label) {
  return std::any_of(r.defects().begin(), r.defects().end(),
                     [&](const OrientDefect& d) { return d.kind == k && d.label == label; });
}

}  // namespace

TEST(Orient, ContainersHasNoDefects) {
  EXPECT_FALSE(crs().partial());
  std::vector<std::string> labels;
  for (const auto& r : crs().rules())
    if (r.lhs.op().name == "isin" || r.lhs.op().name == "remove") labels.push_back(r.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"isin_empty", "isin_1", "isin_2", "remove_empty", "remove_1",
                                              "remove_2"}));
  EXPECT_EQ(crs().rules().size(), spec().axioms.size());
}

TEST(Orient, ConstructorHeadedLhs) {
  auto s = with_nat_bool(
      "spec Comm imports NatBool\nsorts L\nconstructors\n  nil : -> L\n  cons : Nat, L -> L\nvars\n  a, b : Nat\n"
      "  l : L\naxioms\n  [comm] cons(a, cons(b, l)) = cons(b, cons(a, l))\nend\n");
  auto r = orient(s);
  EXPECT_TRUE(r.partial());
  EXPECT_TRUE(has_orient_defect(r, OrientDefectKind::kConstructorHeadedLhs, "comm"));
}

TEST(Orient, ExtraVariable) {
  auto s = with_nat_bool("spec Extra imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  g : U -> Nat\n"
                         "vars\n  a : Nat\naxioms\n  [g_u] g(u) = a\nend\n");
  EXPECT_TRUE(has_orient_defect(orient(s), OrientDefectKind::kExtraVariable, "g_u"));
}

TEST(Orient, NonOrientableLhs) {
  auto s = with_nat_bool("spec Nest imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  g : Nat -> Nat\n"
                         "vars\n  a : Nat\naxioms\n  [g_g] g(g(a)) = a\nend\n");
  EXPECT_TRUE(has_orient_defect(orient(s), OrientDefectKind::kNonOrientable, "g_g"));
}

TEST(Normalize, RemoveExample) {
  auto r = normalize(crs(), term(spec(), "remove(0, 0 :: 0 :: [])"));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.term, term(spec(), "0 :: []"));
  EXPECT_GT(r.steps, 0u);
}

TEST(Normalize, ConstructorTermsAreFixpoints) {
  for (const auto& s : spec().signature.sorts())
    for (const auto& t : enumerate_constructor_terms(spec().signature, s, 7)) {
      auto r = normalize(crs(), t);
      ASSERT_TRUE(r.ok());
      EXPECT_EQ(r.term, t);
      EXPECT_EQ(r.steps, 0u);
    }
}

TEST(Normalize, IsinThroughTwoElements) {
  // Oracle first: the semantic model says 1 is not in {0, 3}.
  const Term t = term(spec(), "isin(1, 0 :: 3 :: [])");
  ASSERT_FALSE(model_eval(t).b);
  auto r = normalize(crs(), t);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.term, term(spec(), "false"));
}

TEST(Normalize, AgreesWithModelOnRandomTerms) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 400; ++i) {
    const Sort& s = spec().signature.sorts()[i % 3];
    Term t = random_ground_term(spec().signature, s, 14, rng);
    auto r = normalize(crs(), t);
    ASSERT_TRUE(r.ok()) << render_term(t);
    ASSERT_TRUE(r.term.is_constructor_term()) << render_term(t);
    EXPECT_EQ(model_of_constructor(r.term), model_eval(t)) << render_term(t);
  }
}

TEST(Normalize, FuelExhaustionIsAStatus) {
  auto r = normalize(crs(), term(spec(), "remove(0, 0 :: 0 :: [])"), Fuel{1, 8});
  EXPECT_EQ(r.status, NormalStatus::kFuelExhausted);
}

TEST(Normalize, LoopingRuleRunsOutOfFuel) {
  auto s = with_nat_bool("spec Loop imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  g : U -> U\n"
                         "axioms\n  [g_u] g(u) = g(u)\nend\n");
  auto r = normalize(orient(s), term(s, "g(u)"), Fuel{50, 8});
  EXPECT_EQ(r.status, NormalStatus::kFuelExhausted);
}

TEST(Normalize, FalseConditionNeverFires) {
  auto s = with_nat_bool("spec Guard imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  g : Nat -> Nat\n"
                         "vars\n  a : Nat\naxioms\n  [g_zero] eq(a, 0) = true => g(a) = 0\nend\n");
  auto r = normalize(orient(s), term(s, "g(1)"));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.term, term(s, "g(1)"));
  EXPECT_EQ(normalize(orient(s), term(s, "g(0)")).term, term(s, "0"));
}

TEST(Holds, Examples) {
  EXPECT_TRUE(holds(crs(), equation(spec(), "eq(0, 0) = true")).is_holds());
  EXPECT_TRUE(holds(crs(), equation(spec(), "true = false")).is_fails());
  auto u = holds(crs(), equation(spec(), "remove(0, 0 :: 0 :: []) = 0 :: []"), Fuel{1, 8});
  EXPECT_EQ(u, TriState::unknown(UnknownReason::kFuelExhausted));
}

TEST(Holds, StuckTermIsUnknown) {
  auto s = with_nat_bool("spec Part imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  g : Nat -> Nat\n"
                         "axioms\nend\n");
  EXPECT_EQ(holds(orient(s), equation(s, "g(0) = 0")), TriState::unknown(UnknownReason::kStuckTerm));
}

TEST(Holds, SymmetricOnRandomEquations) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Sort& s = spec().signature.sorts()[i % 3];
    Equation e{random_ground_term(spec().signature, s, 9, rng), random_ground_term(spec().signature, s, 9, rng)};
    Equation swapped{e.rhs, e.lhs};
    auto a = holds(crs(), e);
    EXPECT_EQ(a, holds(crs(), swapped));
    EXPECT_EQ(a.is_holds(), model_holds(e)) << render_equation(e);
  }
}

TEST(Completeness, ContainersAtBoundSix) {
  auto rep = check_constructor_completeness(spec(), 6);
  EXPECT_TRUE(rep.complete());
  EXPECT_GT(rep.terms_checked, 0u);
}

TEST(Completeness, MissingRemoveAxiomsLeaveWitness) {
  auto s = with_nat_bool(
      "spec NoRemove imports NatBool\nsorts Container\nconstructors\n  [] : -> Container\n"
      "  __::__ : Nat, Container -> Container\nops\n  remove : Nat, Container -> Container\naxioms\nend\n");
  auto rep = check_constructor_completeness(s, 4);
  EXPECT_FALSE(rep.complete());
  auto& w = rep.condition1_witnesses;
  EXPECT_NE(std::find(w.begin(), w.end(), term(s, "remove(0, [])")), w.end());
}

TEST(Completeness, ConstructorOnlySpecIsVacuouslyComplete) {
  auto s = parse_spec("spec C\nsorts T\nconstructors\n  a : -> T\n  b : T -> T\naxioms\nend\n", {});
  EXPECT_TRUE(check_constructor_completeness(s, 5).complete());
  EXPECT_TRUE(check_ground_confluence(s, 5).confluent());
}

TEST(Confluence, ContainersAtBoundSix) {
  auto rep = check_ground_confluence(spec(), 6);
  EXPECT_TRUE(rep.confluent());
  EXPECT_GT(rep.terms_checked, 0u);
}

TEST(Confluence, OverlappingRulesAreReported) {
  auto s = with_nat_bool("spec Over imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  f : Nat -> Nat\n"
                         "vars\n  a : Nat\naxioms\n  [f0] f(a) = 0\n  [f1] f(a) = 1\nend\n");
  auto rep = check_ground_confluence(s, 3);
  ASSERT_FALSE(rep.confluent());
  bool saw = false;
  for (const auto& d : rep.discrepancies) saw = saw || d.term == term(s, "f(0)");
  EXPECT_TRUE(saw);
}

TEST(ReferenceEval, ThrowsOnStuckAndFuel) {
  EXPECT_EQ(reference_eval(spec(), term(spec(), "remove(2, 1 :: 2 :: [])")), term(spec(), "1 :: []"));
  EXPECT_THROW(reference_eval(crs(), term(spec(), "remove(0, 0 :: 0 :: [])"), Fuel{1, 8}), EvalError);
  auto s = with_nat_bool("spec Part imports NatBool\nsorts U\nconstructors\n  u : -> U\nops\n  g : Nat -> Nat\n"
                         "axioms\nend\n");
  EXPECT_THROW(reference_eval(s, term(s, "g(0)")), EvalError);
}

TEST(Mutants, CatalogIsShipped) {
  EXPECT_EQ(mutation_catalog(), (std::vector<std::string>{"M0", "M1", "M2", "M3", "M4", "M5"}));
  for (const auto& id : mutation_catalog()) EXPECT_NO_THROW(load_mutation(id));
  EXPECT_THROW(load_mutation("M9"), SpecError);
  EXPECT_THROW(mutant_eval(spec(), "M9", term(spec(), "[]")), SpecError);
}

TEST(Mutants, M1DropsHead) {
  EXPECT_EQ(mutant_eval(spec(), "M1", term(spec(), "remove(1, 0 :: [])")), term(spec(), "[]"));
}

TEST(Mutants, M2RemovesEveryDuplicate) {
  EXPECT_EQ(mutant_eval(spec(), "M2", term(spec(), "remove(0, 0 :: 0 :: [])")), term(spec(), "[]"));
  EXPECT_EQ(reference_eval(spec(), term(spec(), "remove(0, 0 :: 0 :: [])")), term(spec(), "0 :: []"));
}

TEST(Mutants, M0MatchesReference) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Term t = random_ground_term(spec().signature, Sort{"Container"}, 12, rng);
    EXPECT_EQ(mutant_eval(spec(), "M0", t), reference_eval(spec(), t));
  }
}

TEST(Mutants, EachAltersItsRule) {
  EXPECT_EQ(mutant_eval(spec(), "M3", term(spec(), "isin(1, 1 :: [])")), term(spec(), "false"));
  EXPECT_EQ(mutant_eval(spec(), "M4", term(spec(), "remove(1, 1 :: [])")), term(spec(), "1 :: []"));
  EXPECT_EQ(mutant_eval(spec(), "M5", term(spec(), "remove(1, [])")), term(spec(), "0 :: []"));
}

TEST(Mutants, ApplyMutationRejectsUnknownLabel) {
  auto patch = parse_spec(
      "spec P imports Containers\nsorts Container\nconstructors\n  [] : -> Container\naxioms\n"
      "  override [remove_1] remove(x, y :: c) = c\nend\n",
      {spec_dir()});
  auto mutated = apply_mutation(spec(), patch);
  EXPECT_TRUE(mutated.find_axiom("remove_1")->premises.empty());
  Specification broken = patch;
  broken.overrides.push_back("no_such_axiom");
  EXPECT_THROW(apply_mutation(spec(), broken), SpecError);
}
