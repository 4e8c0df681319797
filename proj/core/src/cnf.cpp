#include "cobisat/cnf.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace cobisat {
namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw ParseError("dimacs: line " + std::to_string(line_no) + ": " + msg);
}

void validate_clause(const Clause& clause, int num_vars, int clause_no,
                     int line_no) {
  for (const Literal& lit : clause) {
    if (lit.var < 0 || lit.var >= num_vars) {
      fail(line_no, "clause " + std::to_string(clause_no) +
                        ": variable out of range");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (clause[i].var == clause[j].var) {
        const bool tautology = clause[i].negated != clause[j].negated;
        fail(line_no, "clause " + std::to_string(clause_no) +
                          (tautology ? ": tautological clause (x and -x)"
                                     : ": variable repeated in clause"));
      }
    }
  }
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  bool saw_header = false;
  bool saw_percent = false;  // SATLIB files end with "%" then "0"
  int declared_clauses = 0;
  int line_no = 0;

  std::vector<int> pending;  // literals of the clause being read
  int pending_line = 0;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line

    if (first == "c" || first[0] == 'c') continue;

    if (first == "%") {
      saw_percent = true;
      continue;
    }

    if (first == "p") {
      if (saw_header) fail(line_no, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> formula.num_vars >> declared_clauses) ||
          fmt != "cnf" || formula.num_vars < 0 || declared_clauses < 0) {
        fail(line_no, "malformed header (expected \"p cnf <vars> <clauses>\")");
      }
      saw_header = true;
      continue;
    }

    // Clause data. A lone "0" after "%" is the SATLIB trailer.
    std::istringstream ts(line);
    int value = 0;
    while (ts >> value) {
      if (saw_percent) {
        if (value == 0) continue;
        fail(line_no, "literals after end-of-file marker");
      }
      if (!saw_header) fail(line_no, "clause data before header");
      if (value == 0) {
        if (pending.empty()) continue;  // stray terminator
        if (pending.size() != 3) {
          fail(pending_line, "clause " +
                                 std::to_string(formula.num_clauses() + 1) +
                                 " has " + std::to_string(pending.size()) +
                                 " literals (expected 3)");
        }
        Clause clause;
        for (int i = 0; i < 3; ++i) {
          clause[i] = Literal{std::abs(pending[i]) - 1, pending[i] < 0};
        }
        validate_clause(clause, formula.num_vars, formula.num_clauses() + 1,
                        pending_line);
        formula.clauses.push_back(clause);
        pending.clear();
      } else {
        if (pending.empty()) pending_line = line_no;
        pending.push_back(value);
      }
    }
    if (!ts.eof()) fail(line_no, "unexpected token");
  }

  if (!saw_header) throw ParseError("dimacs: missing \"p cnf\" header");
  if (!pending.empty()) {
    throw ParseError("dimacs: unterminated clause at end of input");
  }
  if (formula.num_clauses() != declared_clauses) {
    throw ParseError("dimacs: header declares " +
                     std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(formula.num_clauses()));
  }
  return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.num_vars << ' ' << formula.num_clauses() << '\n';
  for (const Clause& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

EvalResult evaluate(const CnfFormula& formula,
                    const std::vector<std::uint8_t>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(formula.num_vars)) {
    throw std::invalid_argument("evaluate: assignment length " +
                                std::to_string(assignment.size()) +
                                " != num_vars " +
                                std::to_string(formula.num_vars));
  }
  int unsat = 0;
  for (const Clause& clause : formula.clauses) {
    bool any = false;
    for (const Literal& lit : clause) {
      const bool value = assignment[lit.var] != 0;
      if (value != lit.negated) {
        any = true;
        break;
      }
    }
    if (!any) ++unsat;
  }
  return EvalResult{unsat == 0, unsat};
}

}  // namespace cobisat
