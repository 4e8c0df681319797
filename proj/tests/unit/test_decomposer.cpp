#include "cobisat/decompose.hpp"

#include <cmath>

#include "cobisat/chancellor.hpp"
#include "cobisat/solver.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cobisat;

namespace {

// All-variable model: every node counts as a variable (no ancillas), which
// lets tests drive selection/clamping with hand-built graphs.
IsingModel chain_model(int n, double j) {
  IsingModel model;
  model.num_spins = n;
  model.fields.assign(n, 0.0);
  for (int i = 0; i + 1 < n; ++i) model.add_coupling(i, i + 1, j);
  return model;
}

}  // namespace

TEST_SUITE_BEGIN("decomposer");

TEST_CASE("bfs on an isolated variable returns just the start") {
  IsingModel model;
  model.num_spins = 1;
  model.fields = {0.0};
  const auto g = build_csr(model);
  CHECK(bfs_select(g, 1, 0, 50) == std::vector<int>{0});
}

TEST_CASE("bfs respects capacity on a variable path") {
  const auto g = build_csr(chain_model(3, 1.0));
  CHECK(bfs_select(g, 3, 0, 2) == std::vector<int>{0, 1});
  CHECK(bfs_select(g, 3, 1, 2) == std::vector<int>{1, 0});  // ascending order
  CHECK(bfs_select(g, 3, 1, 3) == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(bfs_select(g, 3, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(bfs_select(g, 3, -1, 2), std::out_of_range);
}

TEST_CASE("bfs reaches variables coupled only through an ancilla") {
  // Two variables with no direct coupling, joined through node 2 (>= n).
  IsingModel model;
  model.num_spins = 3;
  model.fields.assign(3, 0.0);
  model.add_coupling(0, 2, 1.0);
  model.add_coupling(1, 2, 1.0);
  const auto g = build_csr(model);
  CHECK(bfs_select(g, 2, 0, 10) == std::vector<int>{0, 1});
}

TEST_CASE("bfs skips a variable whose ancilla closure exceeds the budget") {
  // Variable 1 drags in three fresh ancillas, variable 2 only one.
  IsingModel model;
  model.num_spins = 7;  // vars 0..2, ancillas 3..6
  model.fields.assign(7, 0.0);
  model.add_coupling(0, 1, 1.0);
  model.add_coupling(0, 2, 1.0);
  model.add_coupling(0, 3, 1.0);
  model.add_coupling(1, 4, 1.0);
  model.add_coupling(1, 5, 1.0);
  model.add_coupling(1, 6, 1.0);
  model.add_coupling(2, 4, 1.0);
  const auto g = build_csr(model);

  CHECK(bfs_select(g, 3, 0, 4) == std::vector<int>{0, 2});
  CHECK(bfs_select(g, 3, 0, 7) == std::vector<int>{0, 1, 2});
  // A start variable that cannot fit at all yields an empty selection.
  CHECK(bfs_select(g, 3, 1, 3).empty());
}

TEST_CASE("clamp with nothing clamped returns the original fields") {
  Rng rng(3);
  const auto model = testing::random_model(rng, 12, 0.4);
  const auto g = build_csr(model);
  std::vector<int> all(12);
  std::iota(all.begin(), all.end(), 0);
  const auto s = testing::random_state(rng, 12);
  CHECK(clamp(model, g, all, s) == model.fields);
}

TEST_CASE("clamp folds a single clamped neighbor into the field") {
  IsingModel model;
  model.num_spins = 2;
  model.fields = {0.0, 0.0};
  model.add_coupling(0, 1, 2.0);
  const auto g = build_csr(model);
  const auto modified = clamp(model, g, {0}, {+1, -1});
  REQUIRE(modified.size() == 1);
  CHECK(modified[0] == -2.0);
}

TEST_CASE("global energy minus subproblem energy is constant") {
  Rng rng(17);
  const auto model = testing::random_model(rng, 30, 0.25);
  const auto g = build_csr(model);
  SpinState s = testing::random_state(rng, 30);

  std::vector<int> free_ids;
  while (free_ids.size() < 8) {
    const int v = rng.below(30);
    if (std::find(free_ids.begin(), free_ids.end(), v) == free_ids.end()) {
      free_ids.push_back(v);
    }
  }
  const auto sub = extract_subproblem(model, g, 30, free_ids, s, 30);
  REQUIRE(sub.size() == 8);

  double reference = 0.0;
  for (int bits = 0; bits < 256; ++bits) {
    SpinState local(8);
    SpinState global = s;
    for (int i = 0; i < 8; ++i) {
      local[i] = (bits >> i) & 1 ? +1 : -1;
      global[free_ids[i]] = local[i];
    }
    const double k = ising_energy(model, global) - sub.energy(local);
    if (bits == 0) {
      reference = k;
    } else {
      CHECK(std::abs(k - reference) <= 1e-9);
    }
  }
}

TEST_CASE("extract pulls in exactly the coupled ancillas") {
  const auto f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
  const auto enc = encode(f);
  SpinState s(enc.model.num_spins, +1);
  const auto sub =
      extract_subproblem(enc.model, enc.graph, 3, {0, 1, 2}, s, 50);
  CHECK(sub.size() == 4);
  CHECK(sub.num_vars_selected == 3);
  CHECK(sub.num_ancillas == 1);
  CHECK(sub.global_ids == std::vector<int>{0, 1, 2, 3});

  // j_local mirrors the model couplings inside the free set.
  for (int i = 0; i < 4; ++i) {
    CHECK(sub.j(i, i) == 0.0);
    for (int j = 0; j < 4; ++j) {
      CHECK(sub.j(i, j) == sub.j(j, i));
      if (i < j) {
        CHECK(sub.j(i, j) ==
              enc.model.coupling(sub.global_ids[i], sub.global_ids[j]));
      }
    }
  }

  CHECK_THROWS_AS(extract_subproblem(enc.model, enc.graph, 3, {}, s, 50),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_subproblem(enc.model, enc.graph, 3, {0, 1, 2}, s, 3),
                  std::length_error);
}

TEST_CASE("uf20-01 subproblems: budget, connectivity, identity") {
  const auto f = testing::load_fixture("uf20/uf20-01.cnf");
  const auto enc = encode(f);
  Rng rng(23);
  SpinState s = testing::random_state(rng, enc.model.num_spins);

  for (int start = 0; start < f.num_vars; ++start) {
    const auto v_sub = bfs_select(enc.graph, f.num_vars, start, 50);
    REQUIRE_FALSE(v_sub.empty());
    CHECK(v_sub == bfs_select(enc.graph, f.num_vars, start, 50));

    const auto sub =
        extract_subproblem(enc.model, enc.graph, f.num_vars, v_sub, s, 50);
    CHECK(sub.size() <= 50);
    CHECK(sub.num_vars_selected + sub.num_ancillas == sub.size());

    // Connectivity oracle: union-find over selected variables, joined when
    // directly coupled or coupled through a shared ancilla.
    testing::UnionFind uf(enc.model.num_spins);
    for (const int v : v_sub) {
      for (std::size_t k = 0; k < enc.graph.row_cols(v).size(); ++k) {
        const int u = enc.graph.row_cols(v)[k];
        if (u < f.num_vars) {
          if (std::find(v_sub.begin(), v_sub.end(), u) != v_sub.end()) {
            uf.unite(v, u);
          }
        } else {
          uf.unite(v, u);  // hop through the ancilla
        }
      }
    }
    for (const int v : v_sub) CHECK(uf.same(v, v_sub.front()));
  }

  // Decomposition identity at 100 random free assignments, seed 7 pass.
  const auto v_sub = bfs_select(enc.graph, f.num_vars, 7, 50);
  const auto sub =
      extract_subproblem(enc.model, enc.graph, f.num_vars, v_sub, s, 50);
  SpinState global = s;
  SpinState local(sub.size());
  double reference = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    for (int i = 0; i < sub.size(); ++i) {
      local[i] = static_cast<std::int8_t>(rng.random_spin());
      global[sub.global_ids[i]] = local[i];
    }
    const double k = ising_energy(enc.model, global) - sub.energy(local);
    if (trial == 0) {
      reference = k;
    } else {
      CHECK(std::abs(k - reference) <= 1e-9);
    }
  }

  // h_local recomputed naively from the model.
  for (int i = 0; i < sub.size(); ++i) {
    const int gid = sub.global_ids[i];
    double expected = enc.model.fields[gid];
    for (int u = 0; u < enc.model.num_spins; ++u) {
      const bool in_sub = std::find(sub.global_ids.begin(),
                                    sub.global_ids.end(),
                                    u) != sub.global_ids.end();
      if (!in_sub) expected += enc.model.coupling(gid, u) * s[u];
    }
    CHECK(std::abs(sub.h_local[i] - expected) <= 1e-12);
  }
}

TEST_SUITE_END();
