#include "cobisat/solver.hpp"
#include <algorithm>

#include <stdexcept>
#include <string>

namespace cobisat {

void SolveConfig::validate() const {
  if (capacity < 4) {
    throw std::invalid_argument("capacity must be >= 4 (one clause gadget)");
  }
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (stagnation_window < 0) {
    throw std::invalid_argument("stagnation_window must be >= 0");
  }
  schedule.validate();
}

EncodedProblem encode(const CnfFormula& formula) {
  EncodedProblem enc;
  enc.num_vars = formula.num_vars;
  enc.qubo = build_qubo(formula);
  enc.model = qubo_to_ising(enc.qubo);
  enc.graph = build_csr(enc.model);
  return enc;
}

SpinState initialize(const IsingModel& model, Rng& rng) {
  SpinState state(model.num_spins);
  for (auto& s : state) s = static_cast<std::int8_t>(rng.random_spin());
  return state;
}

void feedback(SpinState& s_global, const SpinState& sub_state,
              const std::vector<int>& global_ids) {
  if (sub_state.size() != global_ids.size()) {
    throw std::invalid_argument("feedback: result/id length mismatch");
  }
  for (std::size_t i = 0; i < global_ids.size(); ++i) {
    const int g = global_ids[i];
    if (g < 0 || g >= static_cast<int>(s_global.size())) {
      throw std::out_of_range("feedback: global id " + std::to_string(g) +
                              " out of range");
    }
    s_global[g] = sub_state[i];
  }
}

namespace {

std::vector<std::uint8_t> decode_vars(const SpinState& s_global,
                                      int num_vars) {
  std::vector<std::uint8_t> x(num_vars);
  for (int i = 0; i < num_vars; ++i) x[i] = s_global[i] > 0 ? 1 : 0;
  return x;
}

SpinState restriction(const SpinState& s_global,
                      const std::vector<int>& global_ids) {
  SpinState local(global_ids.size());
  for (std::size_t i = 0; i < global_ids.size(); ++i) {
    local[i] = s_global[global_ids[i]];
  }
  return local;
}

}  // namespace

RunReport run(const EncodedProblem& encoded, const CnfFormula& formula,
              const SolveConfig& config) {
  config.validate();
  const int n = formula.num_vars;

  RunReport report;
  Rng rng(config.seed);
  SpinState s_global = initialize(encoded.model, rng);
  report.initial_energy = ising_energy(encoded.model, s_global);

  // A formula with no clauses is satisfied by anything, including the
  // initial state; there is no coupling graph to traverse.
  if (formula.num_clauses() == 0 || config.check_initial) {
    const auto x = decode_vars(s_global, n);
    if (evaluate(formula, x).satisfied) {
      report.satisfied = true;
      report.iterations_used = 0;
      report.final_energy = report.initial_energy;
      report.assignment = x;
      return report;
    }
  }

  double best_energy = report.initial_energy;
  int stagnant_iters = 0;

  for (int iter = 1; iter <= config.max_iters; ++iter) {
    // GTU: BFS selection from a fresh random start variable.
    const int start = rng.below(n);
    const auto v_sub = bfs_select(encoded.graph, n, start, config.capacity);

    if (v_sub.empty()) {
      // Start variable's clause closure alone exceeds capacity; the
      // iteration performs no solve and the global state is unchanged.
      report.per_iteration.push_back({start, 0, 0.0});
    } else {
      // CLAMP/SUBQ then CORE then FEEDBACK.
      const Subproblem sub = extract_subproblem(
          encoded.model, encoded.graph, n, v_sub, s_global, config.capacity);
      SubsolveResult result;
      if (config.subsolver == SubsolverKind::kExhaustive) {
        result = solve_exhaustive(sub);
      } else {
        const bool kick = config.stagnation_window > 0 &&
                          stagnant_iters >= config.stagnation_window;
        SpinState init;
        if (config.cold_init || kick) {
          init.resize(sub.size());
          for (auto& v : init) v = static_cast<std::int8_t>(rng.random_spin());
        } else {
          init = restriction(s_global, sub.global_ids);
        }
        AnnealSchedule schedule = config.schedule;
        if (kick) {
          // A deliberately under-budgeted anneal: the returned block state
          // sits above the block optimum, so the write-back can raise the
          // global energy and hop out of a descent-closed basin.
          schedule.sweeps = std::max(1, config.schedule.sweeps / 16);
          stagnant_iters = 0;
        }
        result = solve_anneal(sub, schedule, init, rng);
      }
      feedback(s_global, result.state, sub.global_ids);
      report.per_iteration.push_back({start, sub.size(), result.energy});
    }

    report.energy_trace.push_back(ising_energy(encoded.model, s_global));
    if (report.energy_trace.back() < best_energy) {
      best_energy = report.energy_trace.back();
      stagnant_iters = 0;
    } else {
      ++stagnant_iters;
    }

    // SAT validation on the decoded variable spins (ancillas only shape
    // the energy, not satisfaction).
    const auto x = decode_vars(s_global, n);
    if (evaluate(formula, x).satisfied) {
      report.satisfied = true;
      report.iterations_used = iter;
      report.final_energy = report.energy_trace.back();
      report.assignment = x;
      return report;
    }
  }

  report.satisfied = false;
  report.iterations_used = config.max_iters;
  report.final_energy = report.energy_trace.back();
  return report;
}

RunReport run(const CnfFormula& formula, const SolveConfig& config) {
  return run(encode(formula), formula, config);
}

}  // namespace cobisat
