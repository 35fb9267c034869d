#pragma once

// Set-intersection redundancy under the deterministic order
// Q <= X  iff  H(Q|X) = 0.
//
// Q is a deterministic function of every source exactly when it is constant
// on each connected component of the graph that links source values
// co-occurring with positive probability. The component labeling Q* is
// therefore the finest common function. Any other common function is a
// coarsening of Q*, and by data processing a coarsening cannot raise the
// mutual information with the target, so the supremum over Q is attained at
// Q*. No search is needed.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "sid/atoms.hpp"

namespace sid {

struct CommonPart {
  VarSet sources;
  /// (source name, value) -> component label in [0, label_count).
  std::map<std::pair<std::string, Symbol>, std::size_t> labeling;
  std::size_t label_count = 0;

  std::size_t label(const std::string& source, const Symbol& value) const;
};

/// Connected components over the co-occurrence graph of the sources' values.
/// Labels are numbered in order of first appearance along the table's
/// canonical cell order.
CommonPart common_part(const JointTable& table, const VarSet& sources);

/// Red(target : sources). With one source this is I(target; source); with more
/// it is I(Q*; target).
Bits redundancy(const JointTable& table, std::string_view target, const VarSet& sources);

/// Runs the redundancy with each variable as target, checks that the three
/// values agree within `tol` (throws SymmetryViolation with all three values
/// otherwise) and closes the system with their mean.
AtomSet solve_atoms_oracle(const JointTable& table, double tol = kTolerance);

}  // namespace sid
