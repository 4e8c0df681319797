#include "cobisat/ising.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cobisat {

void validate_spins(const SpinState& state, int expected) {
  if (state.size() != static_cast<std::size_t>(expected)) {
    throw std::invalid_argument("spin state length " +
                                std::to_string(state.size()) + " != " +
                                std::to_string(expected));
  }
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] != -1 && state[i] != +1) {
      throw std::invalid_argument("spin " + std::to_string(i) +
                                  " is not +/-1");
    }
  }
}

void IsingModel::add_coupling(int i, int j, double value) {
  if (i == j) throw std::invalid_argument("self-coupling at " + std::to_string(i));
  if (i > j) std::swap(i, j);
  couplings[{i, j}] += value;
}

double IsingModel::coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  const auto it = couplings.find({i, j});
  return it == couplings.end() ? 0.0 : it->second;
}

double ising_energy(const IsingModel& model, const SpinState& state) {
  validate_spins(state, model.num_spins);
  double energy = model.constant;
  for (const auto& [pair, j] : model.couplings) {
    energy -= j * state[pair.first] * state[pair.second];
  }
  for (int i = 0; i < model.num_spins; ++i) {
    energy -= model.fields[i] * state[i];
  }
  return energy;
}

void write_edge_list(const IsingModel& model, std::ostream& out) {
  out << "# ising edge list\n";
  out << "# spins " << model.num_spins << '\n';
  out << "# constant " << model.constant << '\n';
  for (const auto& [pair, j] : model.couplings) {
    out << pair.first << ' ' << pair.second << ' ' << j << '\n';
  }
  for (int i = 0; i < model.num_spins; ++i) {
    if (model.fields[i] != 0.0) out << i << ' ' << model.fields[i] << '\n';
  }
}

}  // namespace cobisat
