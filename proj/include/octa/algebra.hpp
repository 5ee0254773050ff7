#ifndef OCTA_ALGEBRA_HPP
#define OCTA_ALGEBRA_HPP

// Structure constants of the corrected ladder set {A±, B±, C±} together with
// the diagonal operators A, B, C, computed from graded commutators.

#include "octa/sweep.hpp"

#include <map>

namespace octa {

struct StructureTerm {
  Rational coeff;
  std::string generator;  // "A+", ..., "A", "B", "C", "D" or "1"
  friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

struct StructureEntry {
  std::string x, y;
  Shift shift{0, 0, 0};
  /// False when the commutator is not a constant combination of generators.
  bool closed = false;
  std::vector<StructureTerm> terms;  // empty and closed: the commutator vanishes
};

/// The nine generators in table order: A+ A- B+ B- C+ C- A B C.
std::vector<GradedOp> u3_generators();

/// Identifies a graded operator, sampled on the sectors, as a constant
/// combination of the generators.
StructureEntry identify(const GradedOp& op, const std::vector<ParamVector>& sectors);

/// All ordered pairs of u3_generators().
std::vector<StructureEntry> structure_table(const std::vector<ParamVector>& sectors,
                                            Exec exec = Exec::parallel);

/// {"X,Y": [["coeff", "generator"], ...]}; unclosed entries map to null.
nlohmann::json structure_table_json(const std::vector<StructureEntry>& table);

/// True when entry(X,Y) = -entry(Y,X) for every pair.
bool table_antisymmetric(const std::vector<StructureEntry>& table);

/// [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] on sector l, reduced.
DiffOp jacobi_residual(const GradedOp& x, const GradedOp& y, const GradedOp& z,
                       const ParamVector& l);

}  // namespace octa

#endif
