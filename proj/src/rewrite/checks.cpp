#include <algorithm>

#include "axiomtest/rewrite.hpp"
#include "rewrite_internal.hpp"

namespace axiomtest {

CompletenessReport check_constructor_completeness(const Specification& spec, std::size_t size_bound,
                                                  const Fuel& fuel) {
  ConditionalRewriteSystem crs = orient(spec);
  CompletenessReport report;
  for (const auto& d : crs.defects())
    if (d.kind == OrientDefectKind::kConstructorHeadedLhs) report.condition2_witnesses.push_back(d.label + ": " + d.message);

  TermEnumerator terms(spec.signature, false, 1);
  for (const auto& s : spec.signature.sorts()) {
    for (const auto& t : terms.up_to(s, size_bound)) {
      if (t.defined_count() != 1) continue;
      ++report.terms_checked;
      NormalizeResult r = normalize(crs, t, fuel);
      if (!r.ok() || !r.term.is_constructor_term()) report.condition1_witnesses.push_back(t);
    }
  }
  return report;
}

ConfluenceReport check_ground_confluence(const Specification& spec, std::size_t size_bound, const Fuel& fuel) {
  ConditionalRewriteSystem crs = orient(spec);
  ConfluenceReport report;
  TermEnumerator terms(spec.signature, false, 2);
  for (const auto& s : spec.signature.sorts()) {
    for (const auto& t : terms.up_to(s, size_bound)) {
      if (t.is_constructor_term()) continue;
      ++report.terms_checked;
      NormalizeResult left = normalize(crs, t, fuel, Strategy::kInnermostLeftmost);
      NormalizeResult right = normalize(crs, t, fuel, Strategy::kInnermostRightmost);
      if (!left.ok() || !right.ok()) continue;
      if (!(left.term == right.term)) {
        report.discrepancies.push_back({t, left.term, right.term});
        continue;
      }
      // Every rule applicable at the root (arguments already normal) must
      // lead to the same normal form.
      detail::Engine engine(crs, fuel, Strategy::kInnermostLeftmost);
      try {
        Term reduced = engine.normalize_args(t, 0);
        const auto& idx = crs.rules_for(reduced.op());
        for (std::size_t k = 0; k < idx.size(); ++k) {
          auto next = engine.apply_rule(crs.rules()[idx[k]], reduced, 0);
          if (!next) continue;
          Term nf = engine.normalize(*next, 0);
          if (!(nf == left.term)) {
            report.discrepancies.push_back({t, left.term, nf});
            break;
          }
        }
      } catch (const detail::OutOfFuel&) {
      }
    }
  }
  return report;
}

}  // namespace axiomtest
