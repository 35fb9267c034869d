#pragma once

// Classical Shannon measures over a JointTable, in bits.
//
// Variable sets are given by name. Operations return raw values; negative
// floating-point dust is left for reports to clamp.

#include <string_view>

#include "sid/table.hpp"

namespace sid {

using Bits = double;

Bits entropy(const JointTable& table, const VarSet& over);
Bits conditional_entropy(const JointTable& table, const VarSet& of, const VarSet& given);
Bits mutual_information(const JointTable& table, const VarSet& a, const VarSet& b);
Bits conditional_mutual_information(const JointTable& table, const VarSet& a, const VarSet& b,
                                    const VarSet& given);

/// H(target | every other variable).
Bits external_information(const JointTable& table, std::string_view target);

/// Sum of marginal entropies minus the joint entropy.
Bits total_correlation(const JointTable& table, const VarSet& over);

/// H(123) + sum H(i) - sum H(ij); may be negative.
Bits co_information(const JointTable& table, std::string_view x1, std::string_view x2,
                    std::string_view x3);

/// Clamps values in [-tol, 0) to zero for display.
inline double clamp_dust(double v, double tol = kTolerance) { return (v < 0.0 && v >= -tol) ? 0.0 : v; }

}  // namespace sid
