#include "cobisat/csr.hpp"

#include <stdexcept>
#include <string>

namespace cobisat {

std::span<const int> CsrGraph::row_cols(int v) const {
  if (v < 0 || v >= num_nodes) {
    throw std::out_of_range("csr row " + std::to_string(v) + " out of range");
  }
  return {col_idx.data() + row_ptr[v],
          static_cast<std::size_t>(row_ptr[v + 1] - row_ptr[v])};
}

std::span<const double> CsrGraph::row_vals(int v) const {
  if (v < 0 || v >= num_nodes) {
    throw std::out_of_range("csr row " + std::to_string(v) + " out of range");
  }
  return {values.data() + row_ptr[v],
          static_cast<std::size_t>(row_ptr[v + 1] - row_ptr[v])};
}

CsrGraph build_csr(const IsingModel& model) {
  CsrGraph graph;
  graph.num_nodes = model.num_spins;
  graph.row_ptr.assign(model.num_spins + 1, 0);

  for (const auto& [pair, value] : model.couplings) {
    (void)value;
    ++graph.row_ptr[pair.first + 1];
    ++graph.row_ptr[pair.second + 1];
  }
  for (int v = 0; v < model.num_spins; ++v) {
    graph.row_ptr[v + 1] += graph.row_ptr[v];
  }

  graph.col_idx.resize(graph.row_ptr[model.num_spins]);
  graph.values.resize(graph.row_ptr[model.num_spins]);

  // The coupling map iterates pairs (i, j), i < j, in lexicographic order,
  // so each row receives its columns in ascending order: row r sees the
  // mirrored entries (c, r) for c < r before its direct entries (r, c).
  std::vector<int> cursor(graph.row_ptr.begin(), graph.row_ptr.end() - 1);
  for (const auto& [pair, value] : model.couplings) {
    const auto [i, j] = pair;
    graph.col_idx[cursor[i]] = j;
    graph.values[cursor[i]] = value;
    ++cursor[i];
    graph.col_idx[cursor[j]] = i;
    graph.values[cursor[j]] = value;
    ++cursor[j];
  }
  return graph;
}

std::uint64_t storage_bits(const CsrGraph& graph) {
  const std::uint64_t distinct = static_cast<std::uint64_t>(graph.nnz()) / 2;
  return (static_cast<std::uint64_t>(graph.num_nodes) + 1 + 2 * distinct) * 32;
}

}  // namespace cobisat
