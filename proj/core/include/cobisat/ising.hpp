#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace cobisat {

/// Spin vector; every entry is -1 or +1.
using SpinState = std::vector<std::int8_t>;

/// Throws std::invalid_argument unless `state` has length `expected` and
/// contains only +/-1 entries.
void validate_spins(const SpinState& state, int expected);

/// Ising model over N spins with the single-count energy convention
///
///   H(s) = -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i + constant.
///
/// Couplings are stored once per unordered pair under the key (i, j) with
/// i < j; there are no self-couplings.
struct IsingModel {
  int num_spins = 0;
  std::map<std::pair<int, int>, double> couplings;
  std::vector<double> fields;
  double constant = 0.0;

  /// Coupling accumulator; normalizes the key to i < j.
  void add_coupling(int i, int j, double value);

  double coupling(int i, int j) const;
};

/// Evaluates H(s) including the constant term. Validates the state.
double ising_energy(const IsingModel& model, const SpinState& state);

/// Debug export. Grammar (whitespace-separated, one record per line):
///   lines starting with '#' are comments (spin count and constant),
///   "i j J" (three numbers)  -- coupling J_ij with i < j,
///   "i h"   (two numbers)    -- nonzero local field h_i.
void write_edge_list(const IsingModel& model, std::ostream& out);

}  // namespace cobisat
