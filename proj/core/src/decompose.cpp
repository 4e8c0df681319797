#include "cobisat/decompose.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace cobisat {

double Subproblem::energy(const SpinState& local_state) const {
  validate_spins(local_state, size());
  const int k = size();
  double e = 0.0;
  for (int i = 0; i < k; ++i) {
    for (int m = i + 1; m < k; ++m) {
      e -= j_local[i * k + m] * local_state[i] * local_state[m];
    }
    e -= h_local[i] * local_state[i];
  }
  return e;
}

namespace {

// Ancillas coupled to v that are not yet counted against the budget.
int marginal_ancillas(const CsrGraph& graph, int num_vars, int v,
                      const std::vector<char>& have_ancilla) {
  int fresh = 0;
  for (const int u : graph.row_cols(v)) {
    if (u >= num_vars && !have_ancilla[u]) ++fresh;
  }
  return fresh;
}

void count_ancillas(const CsrGraph& graph, int num_vars, int v,
                    std::vector<char>& have_ancilla, int& total) {
  for (const int u : graph.row_cols(v)) {
    if (u >= num_vars && !have_ancilla[u]) {
      have_ancilla[u] = 1;
      ++total;
    }
  }
}

}  // namespace

std::vector<int> bfs_select(const CsrGraph& graph, int num_vars, int start,
                            int capacity) {
  if (start < 0 || start >= num_vars) {
    throw std::out_of_range("bfs_select: start " + std::to_string(start) +
                            " out of range");
  }
  if (capacity < 1) throw std::invalid_argument("bfs_select: capacity < 1");

  std::vector<int> selected;
  std::vector<char> admitted(num_vars, 0);
  std::vector<char> have_ancilla(graph.num_nodes, 0);
  int ancilla_count = 0;
  std::deque<int> frontier;

  const auto try_admit = [&](int v) {
    const int fresh = marginal_ancillas(graph, num_vars, v, have_ancilla);
    if (static_cast<int>(selected.size()) + 1 + ancilla_count + fresh >
        capacity) {
      return;  // over budget; not marked visited, re-checked from other parents
    }
    admitted[v] = 1;
    selected.push_back(v);
    count_ancillas(graph, num_vars, v, have_ancilla, ancilla_count);
    frontier.push_back(v);
  };

  try_admit(start);
  std::vector<int> candidates;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop_front();

    // Variable neighbors of v: direct couplings plus two hops through a
    // clause ancilla, merged in ascending index order.
    candidates.clear();
    for (const int u : graph.row_cols(v)) {
      if (u < num_vars) {
        candidates.push_back(u);
      } else {
        for (const int w : graph.row_cols(u)) {
          if (w < num_vars && w != v) candidates.push_back(w);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    for (const int u : candidates) {
      if (!admitted[u]) try_admit(u);
    }
  }
  return selected;
}

std::vector<double> clamp(const IsingModel& model, const CsrGraph& graph,
                          const std::vector<int>& free_ids,
                          const SpinState& s_global) {
  validate_spins(s_global, model.num_spins);
  std::vector<char> is_free(model.num_spins, 0);
  for (const int g : free_ids) is_free[g] = 1;

  std::vector<double> modified(free_ids.size());
  for (std::size_t i = 0; i < free_ids.size(); ++i) {
    const int g = free_ids[i];
    double h = model.fields[g];
    const auto cols = graph.row_cols(g);
    const auto vals = graph.row_vals(g);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (!is_free[cols[k]]) h += vals[k] * s_global[cols[k]];
    }
    modified[i] = h;
  }
  return modified;
}

Subproblem extract_subproblem(const IsingModel& model, const CsrGraph& graph,
                              int num_vars, const std::vector<int>& v_sub,
                              const SpinState& s_global, int capacity) {
  if (v_sub.empty()) {
    throw std::invalid_argument("extract_subproblem: empty variable set");
  }

  Subproblem sub;
  sub.global_ids = v_sub;
  sub.num_vars_selected = static_cast<int>(v_sub.size());

  std::vector<char> seen(model.num_spins, 0);
  for (const int v : v_sub) seen[v] = 1;
  std::vector<int> ancillas;
  for (const int v : v_sub) {
    for (const int u : graph.row_cols(v)) {
      if (u >= num_vars && !seen[u]) {
        seen[u] = 1;
        ancillas.push_back(u);
      }
    }
  }
  std::sort(ancillas.begin(), ancillas.end());
  sub.global_ids.insert(sub.global_ids.end(), ancillas.begin(),
                        ancillas.end());
  sub.num_ancillas = static_cast<int>(ancillas.size());

  if (sub.size() > capacity) {
    throw std::length_error("extract_subproblem: free set of " +
                            std::to_string(sub.size()) +
                            " spins exceeds capacity " +
                            std::to_string(capacity));
  }

  std::vector<int> local_of(model.num_spins, -1);
  for (int i = 0; i < sub.size(); ++i) local_of[sub.global_ids[i]] = i;

  const int k = sub.size();
  sub.j_local.assign(static_cast<std::size_t>(k) * k, 0.0);
  for (int i = 0; i < k; ++i) {
    const int g = sub.global_ids[i];
    const auto cols = graph.row_cols(g);
    const auto vals = graph.row_vals(g);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const int lj = local_of[cols[c]];
      if (lj > i) {
        sub.j_local[i * k + lj] = vals[c];
        sub.j_local[lj * k + i] = vals[c];
      }
    }
  }
  sub.h_local = clamp(model, graph, sub.global_ids, s_global);
  return sub;
}

}  // namespace cobisat
