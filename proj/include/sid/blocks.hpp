#pragma once

// Support-structure analysis of a three-variable table around an anchor value.
//
// Fix the anchor variable A at value a and let S_V(a) be the conditional
// support of each remaining variable V. Every support point with A != a is
// then classified by which of its two remaining coordinates fall inside their
// S_V(a):
//
//   both inside, pair never seen with a   -> synergistic block
//   both inside, pair also seen with a    -> external block
//   only one inside                       -> unique block of that variable
//   neither inside                        -> plain
//
// Points with A == a are yellow.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sid/atoms.hpp"

namespace sid {

enum class BlockTag { Yellow, Synergistic, Unique, External, Plain };

struct BlockReport {
  std::string anchor;
  Symbol value;
  /// The two non-anchor variables, in table order.
  std::array<std::string, 2> others;
  /// Conditional supports S_V(a) of `others`.
  std::array<std::vector<Symbol>, 2> supports;

  std::vector<Outcome> yellow;
  std::vector<Outcome> syn_blocks;
  /// Keyed by the variable that stays inside its conditional support.
  std::map<std::string, std::vector<Outcome>> unique_blocks;
  std::vector<Outcome> ext_blocks;

  /// Every support point in canonical order with its tag; for Unique the
  /// string holds the variable name.
  struct Row {
    Outcome outcome;
    double p;
    BlockTag tag;
    std::string unique_of;
  };
  std::vector<Row> rows;
};

std::string tag_label(const BlockReport::Row& row);

BlockReport classify_blocks(const JointTable& table, std::string_view anchor, std::string_view value);

struct PositivityVerdict {
  std::string anchor;
  bool syn_positive = false;
  /// Pairs (anchor, V) for both non-anchor variables.
  std::map<VariablePair, bool> un_positive;
};

PositivityVerdict positivity(const JointTable& table, std::string_view anchor);

struct FormulaBreakdown {
  std::string anchor;
  Bits value = 0.0;
  /// Sum of P(x) * log term over the support, before subtracting H(A | rest).
  Bits log_term = 0.0;
  Bits conditional_entropy = 0.0;
  /// Per anchor value: the probability-weighted contribution and the
  /// conditional mean log factor (contribution / P(A = a)).
  std::map<Symbol, Bits> contribution;
  std::map<Symbol, Bits> log_factor;
};

/// Synergy estimate from block structure with `anchor` in the role of X1:
///   sum P(x1,x2,x3) log2( P(X2=x2, X3 in S3) / P(x1,x2)
///                       * P(X3=x3, X2 in S2) / P(x1,x3)
///                       * P(x1) / P(X2 in S2, X3 in S3) )  - H(X1 | X2, X3)
/// with S2, S3 the conditional supports at x1.
Bits synergy_formula(const JointTable& table, std::string_view anchor);
FormulaBreakdown synergy_formula_breakdown(const JointTable& table, std::string_view anchor);

}  // namespace sid
