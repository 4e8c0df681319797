#pragma once

#include "cobisat/decompose.hpp"
#include "cobisat/rng.hpp"

namespace cobisat {

/// Budget for the emulated chip: one sweep proposes one flip per spin, and
/// temperature decays geometrically from t_start to t_end across sweeps.
struct AnnealSchedule {
  int sweeps = 500;
  double t_start = 3.0;
  double t_end = 0.05;

  void validate() const;
};

struct SubsolveResult {
  SpinState state;
  double energy = 0.0;
};

/// Energy change of flipping local spin i, computed from the cached row
/// scan the annealer uses internally.
double flip_delta(const Subproblem& sub, const SpinState& state, int i);

/// Exact minimizer by enumeration; the testing stand-in for the chip.
/// Ties break to the lexicographically smallest state (-1 before +1).
/// Guarded to subproblems of at most 22 spins.
SubsolveResult solve_exhaustive(const Subproblem& sub);

/// Metropolis single-spin-flip annealer emulating the chip's fixed time
/// budget. Flips are proposed in index order within each sweep. Returns the
/// best state observed over the whole run (ties keep the latest visit, so
/// equal-energy plateaus drift), hence the result is never worse than
/// `init`. Fully determined by (sub, schedule, init, rng seed).
SubsolveResult solve_anneal(const Subproblem& sub,
                            const AnnealSchedule& schedule,
                            const SpinState& init, Rng& rng);

}  // namespace cobisat
