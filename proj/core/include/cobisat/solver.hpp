#pragma once

#include <cstdint>
#include <vector>

#include "cobisat/chancellor.hpp"
#include "cobisat/cnf.hpp"
#include "cobisat/cobi.hpp"
#include "cobisat/csr.hpp"
#include "cobisat/decompose.hpp"
#include "cobisat/ising.hpp"
#include "cobisat/rng.hpp"

namespace cobisat {

enum class SubsolverKind { kAnneal, kExhaustive };

struct SolveConfig {
  int capacity = 50;        // chip size; must fit one clause gadget
  int max_iters = 5000;
  std::uint64_t seed = 0;
  AnnealSchedule schedule;
  SubsolverKind subsolver = SubsolverKind::kAnneal;

  /// Also SAT-check the random initial state before the first iteration.
  /// Off by default: the hardware flow validates only after feedback.
  bool check_initial = false;

  /// Start each subproblem from a random state instead of the warm start
  /// (the restriction of the current global state).
  bool cold_init = false;

  /// Warm-started annealing with best-seen results makes the global energy
  /// non-increasing, so the refinement can park on a plateau it cannot
  /// leave. After this many iterations without improving the best global
  /// energy, one subproblem is annealed from a cold initialization instead,
  /// which lets the written-back block raise the energy and hop basins.
  /// 0 disables; ignored by the exhaustive subsolver (which has no
  /// initialization).
  int stagnation_window = 25;

  void validate() const;
};

struct IterationRecord {
  int start_var = 0;
  int subproblem_size = 0;  // 0 when the start variable exceeded the budget
  double sub_energy = 0.0;
};

struct RunReport {
  bool satisfied = false;
  int iterations_used = 0;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  std::vector<double> energy_trace;           // global energy after feedback
  std::vector<std::uint8_t> assignment;       // present iff satisfied
  std::vector<IterationRecord> per_iteration;
};

/// Formula encoded for decomposition: QUBO, its Ising form and the CSR view
/// of the coupling graph. Shareable across seeds (immutable after build).
struct EncodedProblem {
  int num_vars = 0;
  QuboProblem qubo;
  IsingModel model;
  CsrGraph graph;
};

EncodedProblem encode(const CnfFormula& formula);

/// Uniform random +/-1 state of model.num_spins spins.
SpinState initialize(const IsingModel& model, Rng& rng);

/// Writes the subproblem result back: s_global[global_ids[i]] = sub[i].
void feedback(SpinState& s_global, const SpinState& sub_state,
              const std::vector<int>& global_ids);

/// The refinement loop: per iteration, BFS-select from a random start
/// variable, clamp and extract, solve on the emulated chip (warm-started),
/// feed the result back, then SAT-check the decoded variable spins.
/// Terminates on satisfaction or after max_iters. Reported SAT results are
/// re-verified through evaluate(); energies alone are never trusted.
RunReport run(const EncodedProblem& encoded, const CnfFormula& formula,
              const SolveConfig& config);
RunReport run(const CnfFormula& formula, const SolveConfig& config);

}  // namespace cobisat
