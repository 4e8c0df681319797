#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobisat {

/// One literal of a 3-CNF clause. Variables are 0-based in memory and
/// 1-based in DIMACS text.
struct Literal {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// A validated 3SAT instance: every clause has exactly three distinct
/// variables (duplicate-variable and tautological clauses are rejected at
/// parse time).
struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a DIMACS CNF document. Accepts "c" comment lines anywhere, one
/// "p cnf <vars> <clauses>" header, and 0-terminated clauses that may span
/// lines. Tolerates CRLF line endings and the trailing "%" / "0" lines found
/// in SATLIB files. Clauses must have exactly 3 literals over distinct
/// variables in range.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

/// Serializes back to DIMACS; parse_dimacs(to_dimacs(f)) == f.
std::string to_dimacs(const CnfFormula& formula);

struct EvalResult {
  bool satisfied = false;
  int unsat_count = 0;
};

/// Counts clauses whose three literals are all false under `assignment`
/// (one 0/1 value per variable). Throws std::invalid_argument on length
/// mismatch.
EvalResult evaluate(const CnfFormula& formula,
                    const std::vector<std::uint8_t>& assignment);

}  // namespace cobisat
