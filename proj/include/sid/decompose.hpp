#pragma once

// End-to-end decomposition of a three-variable table: pick a solver, close
// the atom system, and collect every cross-check around the result.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sid/blocks.hpp"

namespace sid {

enum class SolveMethod { Auto, Direct, Oracle, Formula };

SolveMethod parse_solve_method(std::string_view name);

struct Decomposition {
  AtomSet atoms;
  Residuals residuals;
  /// Oracle redundancy per target and the six synergy evaluations.
  SymmetryAudit audit;
  /// One verdict per anchor variable, in table order.
  std::array<PositivityVerdict, 3> positivity;
  /// Block-formula synergy with the first variable as anchor.
  FormulaBreakdown formula;
  bool formula_agrees = false;
  /// Diagnostics that do not invalidate the atoms.
  std::vector<std::string> notes;

  /// True when atoms are negative or a decomposition identity fails.
  bool flagged(double tol = kTolerance) const;
};

/// Throws NotApplicable when `Direct` is requested and no Shannon quantity
/// vanishes; solver errors propagate.
Decomposition decompose(const JointTable& table, SolveMethod method = SolveMethod::Auto,
                        double tol = kTolerance);

/// Atoms whose synergy is fixed by the block formula: Red = Syn + CoI.
AtomSet solve_atoms_formula(const JointTable& table, double tol = kTolerance);

}  // namespace sid
