#pragma once

// The four XOR case systems and a handful of small fixtures with known atoms.
//
// Six independent uniform micro bits a..f are spliced into 4-bit macro
// variables:
//   X1 = abcd  X2 = abef  X3 = cdef  X4 = aceh  X5 = abgh  X6 = abij
// with g = c^e, h = d^f, i = c^f, j = d^e. Case n is the system
// {X1, X2, X(n+2)}.

#include <string>
#include <utility>
#include <vector>

#include "sid/atoms.hpp"

namespace sid {

struct CaseSpec {
  std::vector<std::string> micro_bits;
  /// name -> XOR operands
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> derived_bits;
  /// macro name -> four bit names in splice order
  std::vector<std::pair<std::string, std::array<std::string, 4>>> macros;
};

/// The full construction (all six macros).
CaseSpec construction();
/// The construction restricted to the macros of case n (1..4).
CaseSpec case_spec(int n);

/// The 64 micro assignments mapped through `spec`, one row each.
SampleSet enumerate(const CaseSpec& spec);

/// Three macro variables, 64 equiprobable support points.
JointTable generate_case(int n);
/// The six micro bits a..f, uniform over 64 outcomes.
JointTable micro_table();
/// All six macro variables X1..X6 over the 64 outcomes.
JointTable appendix_table();

/// Published atoms of case n, with method Supplied.
AtomSet golden_atoms(int n);

const std::vector<std::string>& fixture_names();
/// xor_triple, copy_triple, independent_bits or partial_copy.
JointTable fixture(std::string_view name);
/// Known atoms of a fixture.
AtomSet fixture_atoms(std::string_view name);

}  // namespace sid
