#pragma once

// The atom algebra of a three-variable system.
//
// One redundancy value closes the system:
//   I(Xi;Xj)      = Red + Un(Xi,Xj)
//   I(Xk;Xi|Xj)   = Un(Xk,Xi) + Syn
//   H(Xi|Xj,Xk)   = Ext(Xi)
// Everything else in this header is derived from, or checked against, those
// relations.

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sid/shannon.hpp"

namespace sid {

enum class Method { Direct, Blocks, Oracle, Supplied };

std::string_view to_string(Method m) noexcept;

/// Unordered pair of variable names; (a, b) and (b, a) are the same key.
class VariablePair {
 public:
  VariablePair(std::string a, std::string b);

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }
  /// "a|b" with the names in sorted order.
  std::string key() const { return first_ + "|" + second_; }

  auto operator<=>(const VariablePair&) const = default;

 private:
  std::string first_;
  std::string second_;
};

struct AtomSet {
  std::array<std::string, 3> variables;
  Bits red = 0.0;
  std::map<VariablePair, Bits> un;
  Bits syn = 0.0;
  std::map<std::string, Bits> ext;
  Method method = Method::Supplied;
  /// Atoms below -tolerance, e.g. "Syn=-0.250000000".
  std::vector<std::string> violations;

  Bits unique(std::string_view a, std::string_view b) const;
  Bits external(std::string_view v) const;
};

/// Throws NotThreeVariables unless the table has exactly three variables.
void require_three(const JointTable& table);

/// Derives all atoms from `red`. Red must lie in [0, min pairwise MI] up to
/// `tol`. The six synergy evaluations must agree within `tol`; their mean is
/// stored. Negative atoms are recorded in `violations`, never clamped.
AtomSet atoms_from_redundancy(const JointTable& table, Bits red, Method method = Method::Supplied,
                              double tol = kTolerance);

/// H(123) - [sum Ext + sum Un + 2 Syn + Red]
Bits check_joint_entropy_decomposition(const JointTable& table, const AtomSet& atoms);
/// TC - [sum Un + Syn + 2 Red]
Bits check_total_correlation_decomposition(const JointTable& table, const AtomSet& atoms);
/// CoI - (Red - Syn)
Bits check_co_information(const JointTable& table, const AtomSet& atoms);

struct Residuals {
  Bits joint = 0.0;
  Bits tc = 0.0;
  Bits coi = 0.0;

  double max_abs() const;
};

Residuals residuals(const JointTable& table, const AtomSet& atoms);

/// Red(target : sources).
using RedundancySolver =
    std::function<Bits(const JointTable& table, std::string_view target, const VarSet& sources)>;

struct SymmetryAudit {
  /// Indexed by the target's position in the table.
  std::array<Bits, 3> red_by_target{};
  /// Syn = I(Xk;Xi|Xj) - Un(Xk,Xi) for each ordering (i, j, k), with Un
  /// taken from the redundancy computed for target Xj.
  std::array<Bits, 6> syn_by_permutation{};
  std::array<std::array<std::size_t, 3>, 6> permutations{};
  Bits red_discrepancy = 0.0;
  Bits syn_discrepancy = 0.0;
  Bits discrepancy = 0.0;
};

SymmetryAudit audit_symmetry(const JointTable& table, const RedundancySolver& solver);

}  // namespace sid
