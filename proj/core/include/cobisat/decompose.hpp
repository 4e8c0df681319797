#pragma once

#include <vector>

#include "cobisat/csr.hpp"
#include "cobisat/ising.hpp"

namespace cobisat {

/// A clamped local problem extracted around a selected variable set.
/// global_ids lists the free spins: the selected variables first (in BFS
/// admission order), then their coupled ancillas in ascending order.
/// Couplings are dense (capacity is hardware-sized) and the local energy is
///
///   H_sub(t) = -sum_{i<j} j_local(i,j) t_i t_j - sum_i h_local[i] t_i,
///
/// with h_local the clamp-modified fields. For any assignment of the free
/// spins, H_global - H_sub is a constant (the clamped-only part).
struct Subproblem {
  std::vector<int> global_ids;
  std::vector<double> j_local;  // dense size*size, row-major, zero diagonal
  std::vector<double> h_local;
  int num_vars_selected = 0;
  int num_ancillas = 0;

  int size() const { return static_cast<int>(global_ids.size()); }
  double j(int i, int k) const { return j_local[i * size() + k]; }

  double energy(const SpinState& local_state) const;
};

/// BFS variable selection from `start`, restricted to the n variable spins.
/// Two variables are adjacent when directly coupled or coupled through a
/// shared clause ancilla (node >= n); neighbors are explored in ascending
/// index order, so the result is fully determined by `start`.
///
/// A variable is admitted only while the subproblem that would be shipped
/// (selected variables plus every ancilla coupled to them) still fits in
/// `capacity` spins. An over-budget variable is skipped, not marked
/// visited, so it is re-checked when reached from another parent; BFS
/// continues with the rest of the frontier and halts when it empties.
/// Returns variables in admission order; empty only if `start` itself
/// exceeds the budget.
std::vector<int> bfs_select(const CsrGraph& graph, int num_vars, int start,
                            int capacity);

/// Modified local fields for the free spins: folding every clamped neighbor
/// j (at its current global value) into the field,
///   h'_i = h_i + sum_{j not free} J_ij * s_global[j].
/// Returned in the order of `free_ids`.
std::vector<double> clamp(const IsingModel& model, const CsrGraph& graph,
                          const std::vector<int>& free_ids,
                          const SpinState& s_global);

/// Builds the subproblem for a selected variable set: free set is v_sub plus
/// all coupled ancillas (nodes >= num_vars), j_local the couplings internal
/// to the free set, and h_local the clamped fields. Unselected variables are
/// clamped, never dragged in. Throws std::invalid_argument if v_sub is
/// empty and std::length_error if the free set exceeds `capacity` (a
/// selection/extraction contract violation).
Subproblem extract_subproblem(const IsingModel& model, const CsrGraph& graph,
                              int num_vars, const std::vector<int>& v_sub,
                              const SpinState& s_global, int capacity);

}  // namespace cobisat
