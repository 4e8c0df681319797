#include "cobisat/chancellor.hpp"

#include <stdexcept>
#include <string>

namespace cobisat {
namespace {

// A literal value as an affine form p + q*x over one binary:
// x itself is (0, +1), its complement 1-x is (1, -1).
struct Affine {
  double p;
  double q;
  int index;
};

Affine literal_value(const Literal& lit) {
  return lit.negated ? Affine{1.0, -1.0, lit.var} : Affine{0.0, +1.0, lit.var};
}

void add_unary(QuboProblem& q, double c, const Affine& a) {
  q.constant += c * a.p;
  if (a.q != 0.0) q.add_term(a.index, a.index, c * a.q);
}

void add_pair(QuboProblem& q, double c, const Affine& a, const Affine& b) {
  q.constant += c * a.p * b.p;
  if (a.p != 0.0 && b.q != 0.0) q.add_term(b.index, b.index, c * a.p * b.q);
  if (b.p != 0.0 && a.q != 0.0) q.add_term(a.index, a.index, c * b.p * a.q);
  if (a.q != 0.0 && b.q != 0.0) q.add_term(a.index, b.index, c * a.q * b.q);
}

}  // namespace

void QuboProblem::add_term(int i, int j, double value) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= num_binaries) {
    throw std::out_of_range("qubo term (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range");
  }
  terms[{i, j}] += value;
}

void QuboProblem::prune_zeros() {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0.0; });
}

double QuboProblem::energy(const std::vector<std::uint8_t>& x) const {
  if (x.size() != static_cast<std::size_t>(num_binaries)) {
    throw std::invalid_argument("qubo energy: wrong vector length");
  }
  double e = constant;
  for (const auto& [pair, coeff] : terms) {
    if (x[pair.first] && x[pair.second]) e += coeff;
  }
  return e;
}

void append_clause_penalty(QuboProblem& qubo, const Clause& clause,
                           int ancilla) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (clause[i].var == clause[j].var) {
        throw std::invalid_argument("clause variables must be distinct");
      }
      if (clause[i].var == ancilla || clause[j].var == ancilla) {
        throw std::invalid_argument("ancilla index collides with a variable");
      }
    }
  }
  const Affine a = literal_value(clause[0]);
  const Affine b = literal_value(clause[1]);
  const Affine c = literal_value(clause[2]);
  const Affine w{0.0, +1.0, ancilla};

  qubo.constant += 1.0;
  add_unary(qubo, -1.0, a);
  add_unary(qubo, -1.0, b);
  add_unary(qubo, -1.0, c);
  add_pair(qubo, +1.0, a, b);
  add_pair(qubo, +1.0, a, c);
  add_pair(qubo, +1.0, b, c);
  add_unary(qubo, +2.0, w);
  add_pair(qubo, -1.0, a, w);
  add_pair(qubo, -1.0, b, w);
  add_pair(qubo, -1.0, c, w);
}

QuboProblem build_qubo(const CnfFormula& formula) {
  QuboProblem qubo;
  qubo.num_binaries = formula.num_vars + formula.num_clauses();
  for (int j = 0; j < formula.num_clauses(); ++j) {
    append_clause_penalty(qubo, formula.clauses[j], formula.num_vars + j);
  }
  // Opposite-sign literal pairs shared across clauses can cancel exactly.
  qubo.prune_zeros();
  return qubo;
}

IsingModel qubo_to_ising(const QuboProblem& qubo) {
  IsingModel model;
  model.num_spins = qubo.num_binaries;
  model.fields.assign(qubo.num_binaries, 0.0);
  model.constant = qubo.constant;

  // x_i = (s_i + 1)/2:
  //   Q_ii x_i       -> h_i -= Q_ii/2,            const += Q_ii/2
  //   Q_ij x_i x_j   -> J_ij -= Q_ij/4, h_{i,j} -= Q_ij/4, const += Q_ij/4
  // under H = -sum J s s - sum h s + const.
  for (const auto& [pair, coeff] : qubo.terms) {
    const auto [i, j] = pair;
    if (i == j) {
      model.fields[i] += -coeff / 2.0;
      model.constant += coeff / 2.0;
    } else {
      model.couplings[{i, j}] += -coeff / 4.0;
      model.fields[i] += -coeff / 4.0;
      model.fields[j] += -coeff / 4.0;
      model.constant += coeff / 4.0;
    }
  }
  return model;
}

std::vector<std::uint8_t> minimize_ancillas(
    const QuboProblem& qubo, int num_vars,
    const std::vector<std::uint8_t>& x_vars) {
  if (x_vars.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("minimize_ancillas: wrong vector length");
  }
  std::vector<std::uint8_t> x(qubo.num_binaries, 0);
  std::copy(x_vars.begin(), x_vars.end(), x.begin());

  // Effective linear coefficient of each ancilla given the variable part.
  std::vector<double> linear(qubo.num_binaries, 0.0);
  for (const auto& [pair, coeff] : qubo.terms) {
    const auto [i, j] = pair;
    if (j < num_vars) continue;
    if (i == j) {
      linear[j] += coeff;
    } else if (i < num_vars) {
      if (x[i]) linear[j] += coeff;
    } else {
      throw std::invalid_argument(
          "minimize_ancillas: ancilla-ancilla coupling present");
    }
  }
  for (int a = num_vars; a < qubo.num_binaries; ++a) {
    x[a] = linear[a] < 0.0 ? 1 : 0;
  }
  return x;
}

}  // namespace cobisat
