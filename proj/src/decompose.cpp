#include "sid/decompose.hpp"

#include <cmath>
#include <cstdio>

#include "sid/direct.hpp"
#include "sid/oracle.hpp"

namespace sid {

SolveMethod parse_solve_method(std::string_view name) {
  if (name == "auto") return SolveMethod::Auto;
  if (name == "direct") return SolveMethod::Direct;
  if (name == "oracle") return SolveMethod::Oracle;
  if (name == "formula") return SolveMethod::Formula;
  throw Error(Errc::ParseError, "unknown method '" + std::string(name) + "'");
}

bool Decomposition::flagged(double tol) const {
  return !atoms.violations.empty() || residuals.max_abs() > tol;
}

AtomSet solve_atoms_formula(const JointTable& table, double tol) {
  require_three(table);
  const auto& v = table.variables();
  const Bits syn = synergy_formula(table, v[0].name);
  const Bits coi = co_information(table, v[0].name, v[1].name, v[2].name);
  Bits red = syn + coi;
  if (red < 0.0 && red >= -tol) red = 0.0;
  return atoms_from_redundancy(table, red, Method::Blocks, tol);
}

Decomposition decompose(const JointTable& table, SolveMethod method, double tol) {
  require_three(table);
  Decomposition d;
  const auto& v = table.variables();

  switch (method) {
    case SolveMethod::Direct: {
      auto atoms = try_direct(table, tol);
      if (!atoms) throw Error(Errc::NotApplicable, "no vanishing mutual information or conditional entropy");
      d.atoms = std::move(*atoms);
      break;
    }
    case SolveMethod::Oracle:
      d.atoms = solve_atoms_oracle(table, tol);
      break;
    case SolveMethod::Formula:
      d.atoms = solve_atoms_formula(table, tol);
      break;
    case SolveMethod::Auto:
      if (auto atoms = try_direct(table, tol)) {
        d.atoms = std::move(*atoms);
      } else {
        d.notes.push_back("direct method not applicable; used the redundancy oracle");
        d.atoms = solve_atoms_oracle(table, tol);
      }
      break;
  }

  d.residuals = residuals(table, d.atoms);
  d.audit = audit_symmetry(table, redundancy);
  if (d.audit.red_discrepancy > tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "oracle redundancy depends on the target: %.9f / %.9f / %.9f",
                  d.audit.red_by_target[0], d.audit.red_by_target[1], d.audit.red_by_target[2]);
    d.notes.emplace_back(buf);
  }
  for (std::size_t i = 0; i < 3; ++i) d.positivity[i] = positivity(table, v[i].name);

  d.formula = synergy_formula_breakdown(table, v[0].name);
  d.formula_agrees = std::abs(d.formula.value - d.atoms.syn) <= tol;
  if (!d.formula_agrees) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "block formula gives Syn=%.9f, solver gives Syn=%.9f",
                  d.formula.value, d.atoms.syn);
    d.notes.emplace_back(buf);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& pv = d.positivity[i];
    if (pv.syn_positive != (d.atoms.syn > tol))
      d.notes.push_back("synergistic blocks (anchor " + pv.anchor + ") " +
                        (pv.syn_positive ? "present" : "absent") + " but Syn is " +
                        (d.atoms.syn > tol ? "positive" : "zero"));
    for (const auto& [pair, positive] : pv.un_positive) {
      const Bits un = d.atoms.un.at(pair);
      if (positive != (un > tol))
        d.notes.push_back("unique blocks for " + pair.key() + " (anchor " + pv.anchor + ") " +
                          (positive ? "present" : "absent") + " but Un is " +
                          (un > tol ? "positive" : "zero"));
    }
  }
  return d;
}

}  // namespace sid
