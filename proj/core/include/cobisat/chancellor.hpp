#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cobisat/cnf.hpp"
#include "cobisat/ising.hpp"

namespace cobisat {

/// QUBO over N binaries:  E(x) = sum_{i<=j} Q_ij x_i x_j + constant.
/// Diagonal entries (i == i) are the linear coefficients. For formulas
/// encoded by build_qubo, binaries 0..n-1 are the SAT variables and
/// binaries n..n+m-1 are the per-clause ancillas.
struct QuboProblem {
  int num_binaries = 0;
  std::map<std::pair<int, int>, double> terms;
  double constant = 0.0;

  /// Accumulates a term; normalizes the key to i <= j.
  void add_term(int i, int j, double value);

  /// Drops terms whose coefficient accumulated to exactly zero.
  void prune_zeros();

  double energy(const std::vector<std::uint8_t>& x) const;
};

/// Appends the penalty for one clause, using ancilla binary `ancilla`.
///
/// With a, b, c the literal values (x or 1-x per negation) and w the ancilla,
/// the gadget is
///
///   1 - a - b - c + ab + ac + bc + w * (2 - a - b - c),
///
/// the quadratized form of (1-a)(1-b)(1-c): minimizing over w yields 0 when
/// the clause is satisfied and exactly 1 otherwise. Negated literals are
/// re-expanded into plain x terms before insertion.
void append_clause_penalty(QuboProblem& qubo, const Clause& clause,
                           int ancilla);

/// Encodes a 3SAT formula as a QUBO over n + m binaries (one ancilla per
/// clause). The minimum of E is 0 iff the formula is satisfiable.
QuboProblem build_qubo(const CnfFormula& formula);

/// Affine transform x_i = (s_i + 1) / 2. The result satisfies
/// H(s(x)) == E(x) exactly, and the coupling pattern of J equals the
/// off-diagonal pattern of Q.
IsingModel qubo_to_ising(const QuboProblem& qubo);

/// Completes a SAT-variable assignment (length num_vars) to a full binary
/// vector by setting each ancilla to its energy-minimizing value. Ancillas
/// couple only to their own clause's variables, so each is minimized
/// independently.
std::vector<std::uint8_t> minimize_ancillas(
    const QuboProblem& qubo, int num_vars,
    const std::vector<std::uint8_t>& x_vars);

}  // namespace cobisat
