#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cobisat/ising.hpp"

namespace cobisat {

/// Compressed sparse row adjacency of the coupling graph. Each undirected
/// coupling is stored twice (both directions) so that traversal is
/// O(degree); column indices within a row are strictly increasing and the
/// mirrored values are bit-identical.
struct CsrGraph {
  int num_nodes = 0;
  std::vector<int> row_ptr;     // length num_nodes + 1
  std::vector<int> col_idx;     // length nnz
  std::vector<double> values;   // length nnz

  int nnz() const { return static_cast<int>(col_idx.size()); }
  int degree(int v) const { return row_ptr[v + 1] - row_ptr[v]; }

  /// Neighbor ids of v in ascending order.
  std::span<const int> row_cols(int v) const;
  /// Coupling values aligned with row_cols(v).
  std::span<const double> row_vals(int v) const;
};

CsrGraph build_csr(const IsingModel& model);

/// Storage accounting for the single-direction CSR layout: N+1 row pointers,
/// E column indices and E coupling values at 32 bits each, i.e.
/// (N + 1 + 2E) * 32 with E = nnz/2 distinct couplings. (The in-memory
/// layout above holds 2E index/value entries so both directions are
/// walkable; the reported figure counts each coupling once.)
std::uint64_t storage_bits(const CsrGraph& graph);

}  // namespace cobisat
