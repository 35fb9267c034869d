#pragma once

#include <optional>

#include "sid/atoms.hpp"

namespace sid {

/// Closes the system from a vanishing Shannon quantity.
///
/// A zero pairwise mutual information forces Red = 0. Otherwise a zero
/// conditional entropy H(Xi|Xj) forces Syn = Un(Xi,Xk) = 0, so
/// Red = I(Xk;Xi). Every rule that fires is evaluated; they must agree within
/// `tol` or InconsistentZeros is thrown. The zero-MI rule is preferred when
/// several fire. Returns nullopt when no quantity vanishes.
std::optional<AtomSet> try_direct(const JointTable& table, double tol = kTolerance);

}  // namespace sid
