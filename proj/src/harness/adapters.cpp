#include <memory>

#include "axiomtest/harness.hpp"
#include "harness_internal.hpp"

namespace axiomtest {

namespace {

class RewritingSession : public IutSession {
 public:
  RewritingSession(std::shared_ptr<const ConditionalRewriteSystem> crs, std::string name, Fuel fuel)
      : crs_(std::move(crs)), name_(std::move(name)), fuel_(fuel) {}

  const std::string& name() const override { return name_; }

  EvalOutcome eval(const Term& t) override {
    NormalizeResult r = normalize(*crs_, t, fuel_);
    if (!r.ok()) return {EvalOutcome::Kind::kFuel, std::nullopt, "fuel exhausted"};
    if (!r.term.is_constructor_term())
      return {EvalOutcome::Kind::kError, std::nullopt, "stuck term " + render_term(r.term)};
    return {EvalOutcome::Kind::kValue, r.term, {}};
  }

 private:
  std::shared_ptr<const ConditionalRewriteSystem> crs_;
  std::string name_;
  Fuel fuel_;
};

class RewritingAdapter : public IutAdapter {
 public:
  RewritingAdapter(const Specification& spec, const Specification& evaluated, std::string name, Fuel fuel)
      : spec_(spec), crs_(std::make_shared<const ConditionalRewriteSystem>(orient(evaluated))),
        name_(std::move(name)), fuel_(fuel) {}

  std::unique_ptr<IutSession> open() const override {
    return std::make_unique<RewritingSession>(crs_, name_, fuel_);
  }
  std::string describe() const override { return name_; }
  const Specification& spec() const override { return spec_; }

 private:
  Specification spec_;
  std::shared_ptr<const ConditionalRewriteSystem> crs_;
  std::string name_;
  Fuel fuel_;
};

}  // namespace

std::unique_ptr<IutAdapter> make_reference_adapter(const Specification& spec, const Fuel& fuel) {
  return std::make_unique<RewritingAdapter>(spec, spec, "reference", fuel);
}

std::unique_ptr<IutAdapter> make_mutant_adapter(const Specification& spec, const std::string& mutation_id,
                                                const Fuel& fuel, const SearchPath& search_path) {
  Specification mutated = apply_mutation(spec, load_mutation(mutation_id, search_path));
  return std::make_unique<RewritingAdapter>(spec, mutated, "mutant:" + mutation_id, fuel);
}

std::unique_ptr<IutAdapter> make_adapter(const std::string& iut, const Specification& spec, const Fuel& fuel,
                                         const SearchPath& search_path) {
  if (iut == "reference") return make_reference_adapter(spec, fuel);
  if (iut.rfind("mutant:", 0) == 0) return make_mutant_adapter(spec, iut.substr(7), fuel, search_path);
  if (iut.rfind("exec:", 0) == 0 && iut.size() > 5) return make_external_adapter(spec, iut.substr(5));
  throw Error("unknown IUT '" + iut + "' (expected reference, mutant:ID or exec:CMD)");
}

}  // namespace axiomtest
