// Regenerates the uf-profile fixtures under tests/data. The committed files
// were produced by this tool; rerun it only when the generation scheme
// changes, and re-commit the output.
//
//   make_fixtures <output-dir>
//
// Each instance is uniform random 3SAT (distinct variables per clause, no
// duplicate clauses), resampled until the DPLL oracle proves it
// satisfiable; the oracle's certificate is written next to it.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cobisat/cnf.hpp"
#include "cobisat/rng.hpp"
#include "dpll.hpp"
#include "test_util.hpp"

namespace {

using namespace cobisat;

void write_instance(const std::filesystem::path& dir, const std::string& name,
                    int num_vars, int num_clauses, std::uint64_t base_seed) {
  std::uint64_t seed = base_seed;
  for (;; ++seed) {
    Rng rng(seed);
    const CnfFormula f = testing::random_3sat(rng, num_vars, num_clauses);
    const auto cert = testing::dpll_solve(f);
    if (!cert) continue;
    if (!evaluate(f, *cert).satisfied) {
      std::cerr << "oracle certificate failed re-check\n";
      std::exit(1);
    }

    std::filesystem::create_directories(dir);
    std::ofstream cnf(dir / (name + ".cnf"));
    cnf << "c locally generated uniform random 3-SAT, " << num_vars
        << " vars / " << num_clauses << " clauses\n"
        << "c profile-compatible stand-in for SATLIB " << dir.filename().string()
        << "; generator seed " << seed << "\n"
        << "c satisfiable (verified by the bundled DPLL oracle)\n"
        << to_dimacs(f) << "%\n0\n";

    std::ofstream certificate(dir / (name + ".cert"));
    for (const auto v : *cert) certificate << (v ? '1' : '0');
    certificate << '\n';

    std::cout << name << ": seed " << seed << '\n';
    return;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 1;
  }
  const std::filesystem::path out = argv[1];
  // Base seeds are spaced so retries (unsatisfiable draws) cannot collide
  // across instances.
  write_instance(out / "uf20", "uf20-01", 20, 91, 20100);
  write_instance(out / "uf20", "uf20-02", 20, 91, 20200);
  write_instance(out / "uf20", "uf20-03", 20, 91, 20300);
  write_instance(out / "uf50", "uf50-01", 50, 218, 50100);
  write_instance(out / "uf50", "uf50-02", 50, 218, 50200);
  write_instance(out / "uf50", "uf50-03", 50, 218, 50300);
  return 0;
}
