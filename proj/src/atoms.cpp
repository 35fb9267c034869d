#include "sid/atoms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sid {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Blocks: return "blocks";
    case Method::Oracle: return "oracle";
    case Method::Supplied: return "supplied";
  }
  return "unknown";
}

VariablePair::VariablePair(std::string a, std::string b) : first_(std::move(a)), second_(std::move(b)) {
  if (second_ < first_) std::swap(first_, second_);
}

Bits AtomSet::unique(std::string_view a, std::string_view b) const {
  auto it = un.find(VariablePair(std::string(a), std::string(b)));
  if (it == un.end())
    throw Error(Errc::UnknownVariable, "no unique atom for " + std::string(a) + "|" + std::string(b));
  return it->second;
}

Bits AtomSet::external(std::string_view v) const {
  auto it = ext.find(std::string(v));
  if (it == ext.end()) throw Error(Errc::UnknownVariable, "no external atom for " + std::string(v));
  return it->second;
}

void require_three(const JointTable& table) {
  if (table.arity() != 3)
    throw Error(Errc::NotThreeVariables,
                "expected 3 variables, table has " + std::to_string(table.arity()));
}

namespace {

// The six orderings (i, j, k) of {0, 1, 2}.
constexpr std::array<std::array<std::size_t, 3>, 6> kOrders{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::string describe(const char* atom, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.9f", atom, v);
  return buf;
}

std::array<std::string, 3> names3(const JointTable& table) {
  return {table.variable(0).name, table.variable(1).name, table.variable(2).name};
}

}  // namespace

AtomSet atoms_from_redundancy(const JointTable& table, Bits red, Method method, double tol) {
  require_three(table);
  const auto n = names3(table);

  std::array<std::array<Bits, 3>, 3> mi{};
  Bits min_mi = INFINITY;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      mi[i][j] = mi[j][i] = mutual_information(table, {n[i]}, {n[j]});
      min_mi = std::min(min_mi, mi[i][j]);
    }
  if (!(red >= -tol) || red > min_mi + tol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "red=%.12g outside [0, %.12g]", red, min_mi);
    throw Error(Errc::RedundancyOutOfRange, buf);
  }

  AtomSet atoms;
  atoms.variables = n;
  atoms.red = red;
  atoms.method = method;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) atoms.un[VariablePair(n[i], n[j])] = mi[i][j] - red;

  std::array<Bits, 6> syn{};
  for (std::size_t p = 0; p < kOrders.size(); ++p) {
    const auto [i, j, k] = kOrders[p];
    syn[p] = conditional_mutual_information(table, {n[k]}, {n[i]}, {n[j]}) - (mi[k][i] - red);
  }
  const auto [lo, hi] = std::minmax_element(syn.begin(), syn.end());
  if (*hi - *lo > tol) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "synergy evaluations span [%.12g, %.12g]", *lo, *hi);
    throw Error(Errc::SynergyInconsistent, buf);
  }
  Bits sum = 0.0;
  for (auto s : syn) sum += s;
  atoms.syn = sum / 6.0;

  for (const auto& v : n) atoms.ext[v] = external_information(table, v);

  if (atoms.red < -tol) atoms.violations.push_back(describe("Red", atoms.red));
  for (const auto& [pair, u] : atoms.un)
    if (u < -tol) atoms.violations.push_back(describe(("Un(" + pair.key() + ")").c_str(), u));
  if (atoms.syn < -tol) atoms.violations.push_back(describe("Syn", atoms.syn));
  for (const auto& [v, e] : atoms.ext)
    if (e < -tol) atoms.violations.push_back(describe(("Ext(" + v + ")").c_str(), e));
  return atoms;
}

namespace {

void require_match(const JointTable& table, const AtomSet& atoms) {
  require_three(table);
  if (names3(table) != atoms.variables)
    throw Error(Errc::UnknownVariable, "atom set was produced for a different table");
}

Bits sum_un(const AtomSet& atoms) {
  Bits s = 0.0;
  for (const auto& [pair, u] : atoms.un) s += u;
  return s;
}

}  // namespace

Bits check_joint_entropy_decomposition(const JointTable& table, const AtomSet& atoms) {
  require_match(table, atoms);
  Bits ext = 0.0;
  for (const auto& [v, e] : atoms.ext) ext += e;
  const VarSet all(atoms.variables.begin(), atoms.variables.end());
  return entropy(table, all) - (ext + sum_un(atoms) + 2.0 * atoms.syn + atoms.red);
}

Bits check_total_correlation_decomposition(const JointTable& table, const AtomSet& atoms) {
  require_match(table, atoms);
  const VarSet all(atoms.variables.begin(), atoms.variables.end());
  return total_correlation(table, all) - (sum_un(atoms) + atoms.syn + 2.0 * atoms.red);
}

Bits check_co_information(const JointTable& table, const AtomSet& atoms) {
  require_match(table, atoms);
  const auto& n = atoms.variables;
  return co_information(table, n[0], n[1], n[2]) - (atoms.red - atoms.syn);
}

double Residuals::max_abs() const {
  return std::max({std::abs(joint), std::abs(tc), std::abs(coi)});
}

Residuals residuals(const JointTable& table, const AtomSet& atoms) {
  return {check_joint_entropy_decomposition(table, atoms),
          check_total_correlation_decomposition(table, atoms), check_co_information(table, atoms)};
}

SymmetryAudit audit_symmetry(const JointTable& table, const RedundancySolver& solver) {
  require_three(table);
  const auto n = names3(table);
  SymmetryAudit audit;
  for (std::size_t t = 0; t < 3; ++t) {
    VarSet sources;
    for (std::size_t s = 0; s < 3; ++s)
      if (s != t) sources.push_back(n[s]);
    audit.red_by_target[t] = solver(table, n[t], sources);
  }
  const auto [rlo, rhi] = std::minmax_element(audit.red_by_target.begin(), audit.red_by_target.end());
  audit.red_discrepancy = *rhi - *rlo;

  for (std::size_t p = 0; p < kOrders.size(); ++p) {
    const auto [i, j, k] = kOrders[p];
    const Bits un = mutual_information(table, {n[k]}, {n[i]}) - audit.red_by_target[j];
    audit.syn_by_permutation[p] = conditional_mutual_information(table, {n[k]}, {n[i]}, {n[j]}) - un;
    audit.permutations[p] = kOrders[p];
  }
  const auto [slo, shi] =
      std::minmax_element(audit.syn_by_permutation.begin(), audit.syn_by_permutation.end());
  audit.syn_discrepancy = *shi - *slo;
  audit.discrepancy = std::max(audit.red_discrepancy, audit.syn_discrepancy);
  return audit;
}

}  // namespace sid
