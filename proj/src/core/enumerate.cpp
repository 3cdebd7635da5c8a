#include "axiomtest/core.hpp"

#include <limits>

namespace axiomtest {

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Calls `fn` with every composition of `total` into `parts` positive
// summands, in lexicographic order.
template <typename Fn>
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& acc, Fn&& fn) {
  if (parts == 0) {
    if (total == 0) fn(acc);
    return;
  }
  if (total < parts) return;
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    acc.push_back(first);
    compositions(total - first, parts - 1, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

TermEnumerator::TermEnumerator(const Signature& sig, bool constructors_only,
                               std::optional<std::size_t> max_defined)
    : sig_(sig), constructors_only_(constructors_only), max_defined_(max_defined) {}

const std::vector<Term>& TermEnumerator::exactly(const Sort& s, std::size_t size) {
  std::size_t budget = constructors_only_ ? 0 : max_defined_.value_or(kUnbounded);
  return exactly(s, size, budget);
}

const std::vector<Term>& TermEnumerator::exactly(const Sort& s, std::size_t size, std::size_t budget) {
  auto key = std::make_tuple(s, size, budget);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  std::vector<Term> out;
  if (size >= 1) {
    for (const auto& op : sig_.ops()) {
      if (op->result_sort != s) continue;
      if (!op->is_constructor && (constructors_only_ || budget == 0)) continue;
      std::size_t own = op->is_constructor ? 0 : 1;
      std::size_t rest = budget == kUnbounded ? kUnbounded : budget - own;
      if (op->is_constant()) {
        if (size == 1) out.push_back(Term::app(op));
        continue;
      }
      std::vector<std::size_t> acc;
      compositions(size - 1, op->arity(), acc, [&](const std::vector<std::size_t>& sizes) {
        std::vector<const std::vector<Term>*> lists;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
          const auto& l = exactly(op->arg_sorts[i], sizes[i], rest);
          if (l.empty()) return;
          lists.push_back(&l);
        }
        std::vector<std::size_t> idx(lists.size(), 0);
        while (true) {
          std::size_t used = 0;
          std::vector<Term> args;
          args.reserve(lists.size());
          for (std::size_t i = 0; i < lists.size(); ++i) {
            args.push_back((*lists[i])[idx[i]]);
            used += args.back().defined_count();
          }
          if (rest == kUnbounded || used <= rest) out.push_back(Term::app(op, std::move(args)));
          std::size_t k = lists.size();
          while (k > 0) {
            --k;
            if (++idx[k] < lists[k]->size()) break;
            idx[k] = 0;
            if (k == 0) return;
          }
        }
      });
    }
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

std::vector<Term> TermEnumerator::up_to(const Sort& s, std::size_t max_size) {
  std::vector<Term> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto& l = exactly(s, n);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::vector<Term> enumerate_constructor_terms(const Signature& sig, const Sort& s, std::size_t max_size) {
  TermEnumerator e(sig, true);
  return e.up_to(s, max_size);
}

std::vector<Term> enumerate_ground_terms(const Signature& sig, const Sort& s, std::size_t max_size,
                                         std::optional<std::size_t> max_defined) {
  TermEnumerator e(sig, false, max_defined);
  return e.up_to(s, max_size);
}

}  // namespace axiomtest
