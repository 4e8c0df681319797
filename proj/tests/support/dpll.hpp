#pragma once

// Test-only DPLL SAT oracle: an implementation-independent ground truth for
// satisfiability and certificates. Exponential worst case, fine for the
// uf20/uf50-sized fixtures used in tests.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cobisat/cnf.hpp"

namespace cobisat::testing {

namespace detail {

enum : std::int8_t { kUnassigned = -1 };

inline bool dpll_recurse(const CnfFormula& f, std::vector<std::int8_t>& a) {
  // Unit propagation to fixpoint.
  bool changed = true;
  std::vector<std::pair<int, std::int8_t>> propagated;
  const auto undo = [&] {
    for (const auto& [var, _] : propagated) a[var] = kUnassigned;
  };
  while (changed) {
    changed = false;
    for (const Clause& clause : f.clauses) {
      int unassigned = -1;
      int unassigned_count = 0;
      bool satisfied = false;
      for (const Literal& lit : clause) {
        if (a[lit.var] == kUnassigned) {
          unassigned = lit.negated ? -(lit.var + 1) : lit.var + 1;
          ++unassigned_count;
        } else if ((a[lit.var] == 1) != lit.negated) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned_count == 0) {
        undo();
        return false;  // conflict
      }
      if (unassigned_count == 1) {
        const int var = std::abs(unassigned) - 1;
        a[var] = unassigned > 0 ? 1 : 0;
        propagated.emplace_back(var, a[var]);
        changed = true;
      }
    }
  }

  // Branch on the unassigned variable occurring in the most clauses.
  std::vector<int> occurrences(f.num_vars, 0);
  for (const Clause& clause : f.clauses) {
    for (const Literal& lit : clause) {
      if (a[lit.var] == kUnassigned) ++occurrences[lit.var];
    }
  }
  int branch = -1;
  for (int v = 0; v < f.num_vars; ++v) {
    if (a[v] == kUnassigned && (branch < 0 || occurrences[v] > occurrences[branch])) {
      branch = v;
    }
  }
  if (branch < 0) return true;  // every clause satisfied

  for (const std::int8_t value : {std::int8_t{1}, std::int8_t{0}}) {
    a[branch] = value;
    if (dpll_recurse(f, a)) return true;
  }
  a[branch] = kUnassigned;
  undo();
  return false;
}

}  // namespace detail

/// Returns a satisfying assignment, or nullopt if the formula is
/// unsatisfiable.
inline std::optional<std::vector<std::uint8_t>> dpll_solve(
    const CnfFormula& f) {
  std::vector<std::int8_t> a(f.num_vars, detail::kUnassigned);
  if (!detail::dpll_recurse(f, a)) return std::nullopt;
  std::vector<std::uint8_t> result(f.num_vars);
  for (int v = 0; v < f.num_vars; ++v) {
    result[v] = a[v] == 1 ? 1 : 0;  // unconstrained variables default false
  }
  return result;
}

}  // namespace cobisat::testing
