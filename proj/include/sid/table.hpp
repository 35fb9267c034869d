#pragma once

// Exact discrete joint distributions over named finite-alphabet variables.
//
// A JointTable stores only positive-probability outcomes. Symbols are opaque
// strings; internally every outcome is a tuple of alphabet indices ("codes")
// and cells are kept sorted by code so that iteration order is canonical.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sid/error.hpp"

namespace sid {

/// Identity tolerance in bits, shared by every check in the library.
inline constexpr double kTolerance = 1e-9;

using Symbol = std::string;
using Outcome = std::vector<Symbol>;
using VarSet = std::vector<std::string>;
using Assignment = std::vector<std::pair<std::string, Symbol>>;

struct Variable {
  std::string name;
  std::vector<Symbol> alphabet;
};

class JointTable {
 public:
  using Code = std::vector<std::uint32_t>;

  struct Cell {
    Code code;
    double p;
  };

  /// Builds a table from coded cells. Cells with zero mass are dropped,
  /// duplicate codes are merged and the result is normalized. Throws on
  /// negative mass, out-of-alphabet codes, or (unless `normalize`) a total
  /// that deviates from one by more than kTolerance.
  static JointTable from_cells(std::vector<Variable> variables, std::vector<Cell> cells,
                               bool normalize = false);

  std::size_t arity() const noexcept { return variables_.size(); }
  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const Variable& variable(std::size_t index) const { return variables_.at(index); }
  std::vector<std::string> names() const;

  /// Position of `name` in the variable order; throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  std::vector<std::size_t> indices_of(const VarSet& names) const;
  bool has_variable(std::string_view name) const noexcept;

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t support_size() const noexcept { return cells_.size(); }

  const Symbol& symbol(std::size_t var, std::uint32_t code) const;
  std::optional<std::uint32_t> code_of(std::size_t var, std::string_view symbol) const;
  Outcome decode(const Code& code) const;

  /// Mass of a fully specified outcome; zero when it lies outside the support.
  double probability(const Outcome& outcome) const;

 private:
  JointTable(std::vector<Variable> variables, std::vector<Cell> cells)
      : variables_(std::move(variables)), cells_(std::move(cells)) {}

  std::vector<Variable> variables_;
  std::vector<Cell> cells_;
};

struct PmfOptions {
  /// Variable names; defaults to X1..Xn.
  std::vector<std::string> names;
  /// Explicit alphabets (one per variable) so structural zeros can be
  /// represented; inferred from the entries (sorted) when empty.
  std::vector<std::vector<Symbol>> alphabets;
  bool normalize = false;
};

JointTable from_pmf(const std::vector<std::pair<Outcome, double>>& entries,
                    const PmfOptions& options = {});

struct SampleSet {
  std::vector<std::string> variables;
  std::vector<Outcome> rows;
};

/// Empirical distribution: count / total for every distinct row.
JointTable from_samples(const SampleSet& samples);

/// Sums out every variable not in `keep`. Result keeps the table's variable order.
JointTable marginalize(const JointTable& table, const VarSet& keep);

/// Distribution of the remaining variables given `evidence`. When the
/// evidence names every variable the restricted point mass over all
/// variables is returned.
JointTable condition(const JointTable& table, const Assignment& evidence);

struct Composite {
  std::string name;
  VarSet members;
};

/// Replaces the variables by composites. Composite symbols splice the
/// component symbols in member order. Blocks must cover every variable, so
/// the map from outcomes to composite outcomes is injective and mass is
/// preserved; blocks may overlap (shared micro components).
JointTable group(const JointTable& table, const std::vector<Composite>& blocks);

/// { v : P(of = v, anchor = value) > 0 }, in alphabet order.
std::vector<Symbol> conditional_support(const JointTable& table, std::string_view anchor,
                                        std::string_view value, std::string_view of);

/// Appends a variable computed from each support outcome.
JointTable with_derived(const JointTable& table, std::string name,
                        const std::function<Symbol(const Outcome&)>& fn);

}  // namespace sid
