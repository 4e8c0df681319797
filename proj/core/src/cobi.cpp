#include "cobisat/cobi.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cobisat {

namespace {
constexpr int kExhaustiveLimit = 22;
}

void AnnealSchedule::validate() const {
  if (sweeps < 1) throw std::invalid_argument("anneal: sweeps < 1");
  if (!(t_end > 0.0) || !(t_start >= t_end)) {
    throw std::invalid_argument("anneal: need t_start >= t_end > 0");
  }
}

double flip_delta(const Subproblem& sub, const SpinState& state, int i) {
  const int k = sub.size();
  double local = sub.h_local[i];
  for (int j = 0; j < k; ++j) {
    local += sub.j_local[i * k + j] * state[j];
  }
  return 2.0 * state[i] * local;
}

SubsolveResult solve_exhaustive(const Subproblem& sub) {
  const int k = sub.size();
  if (k > kExhaustiveLimit) {
    throw std::invalid_argument("solve_exhaustive: " + std::to_string(k) +
                                " spins exceeds enumeration guard of " +
                                std::to_string(kExhaustiveLimit));
  }

  // Enumerate states in lexicographic order (spin 0 is the most significant
  // digit, -1 < +1), applying single-flip deltas per binary increment.
  // Strict improvement keeps the first, i.e. lexicographically smallest,
  // minimizer.
  SpinState state(k, -1);
  double energy = sub.energy(state);
  SpinState best_state = state;
  double best_energy = energy;

  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t g = 1; g < total; ++g) {
    std::uint64_t flipped = g ^ (g - 1);
    while (flipped != 0) {
      const int bit = std::countr_zero(flipped);
      flipped &= flipped - 1;
      const int i = k - 1 - bit;
      energy += flip_delta(sub, state, i);
      state[i] = static_cast<std::int8_t>(-state[i]);
    }
    if (energy < best_energy) {
      best_energy = energy;
      best_state = state;
    }
  }
  return {best_state, best_energy};
}

SubsolveResult solve_anneal(const Subproblem& sub,
                            const AnnealSchedule& schedule,
                            const SpinState& init, Rng& rng) {
  schedule.validate();
  const int k = sub.size();
  validate_spins(init, k);

  SpinState state = init;
  // Cached local fields: local[i] = h'_i + sum_j J_ij s_j, so a flip of i
  // costs 2 s_i local[i] and an accepted flip updates the cache in O(k).
  std::vector<double> local(k);
  for (int i = 0; i < k; ++i) {
    local[i] = sub.h_local[i];
    for (int j = 0; j < k; ++j) local[i] += sub.j_local[i * k + j] * state[j];
  }
  double energy = sub.energy(state);

  SpinState best_state = state;
  double best_energy = energy;

  const double ratio = schedule.t_end / schedule.t_start;
  for (int sweep = 0; sweep < schedule.sweeps; ++sweep) {
    const double t =
        schedule.sweeps > 1
            ? schedule.t_start *
                  std::pow(ratio, static_cast<double>(sweep) /
                                      (schedule.sweeps - 1))
            : schedule.t_start;
    for (int i = 0; i < k; ++i) {
      const double delta = 2.0 * state[i] * local[i];
      if (delta > 0.0 && rng.uniform01() >= std::exp(-delta / t)) continue;
      const double old = state[i];
      state[i] = static_cast<std::int8_t>(-state[i]);
      energy += delta;
      for (int j = 0; j < k; ++j) {
        local[j] -= 2.0 * sub.j_local[j * k + i] * old;
      }
      if (energy <= best_energy) {
        best_energy = energy;
        best_state = state;
      }
    }
  }
  return {best_state, best_energy};
}

}  // namespace cobisat
