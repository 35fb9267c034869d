#include "sid/shannon.hpp"

#include <cmath>
#include <map>
#include <set>

namespace sid {

namespace {

std::vector<std::size_t> resolve(const JointTable& table, const VarSet& names) {
  if (names.empty()) throw Error(Errc::UnknownVariable, "empty variable set");
  std::set<std::size_t> unique;
  for (const auto& n : names) unique.insert(table.index_of(n));
  return {unique.begin(), unique.end()};
}

void require_disjoint(const JointTable& table, const VarSet& a, const VarSet& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (table.index_of(x) == table.index_of(y))
        throw Error(Errc::OverlappingSets, "variable '" + x + "' appears in both sets");
}

VarSet join(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Bits entropy_of(const JointTable& table, const std::vector<std::size_t>& idx) {
  std::map<JointTable::Code, double> marginal;
  JointTable::Code key(idx.size());
  for (const auto& cell : table.cells()) {
    for (std::size_t k = 0; k < idx.size(); ++k) key[k] = cell.code[idx[k]];
    marginal[key] += cell.p;
  }
  Bits h = 0.0;
  for (const auto& [code, p] : marginal)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

}  // namespace

Bits entropy(const JointTable& table, const VarSet& over) {
  return entropy_of(table, resolve(table, over));
}

Bits conditional_entropy(const JointTable& table, const VarSet& of, const VarSet& given) {
  resolve(table, of);
  resolve(table, given);
  // Overlap is allowed: H(A | A) = 0 falls out of the definition.
  return entropy(table, join(of, given)) - entropy(table, given);
}

Bits mutual_information(const JointTable& table, const VarSet& a, const VarSet& b) {
  resolve(table, a);
  resolve(table, b);
  require_disjoint(table, a, b);
  // Summed in canonical order so that I(a;b) and I(b;a) are bit-identical.
  const Bits ha = entropy(table, a);
  const Bits hb = entropy(table, b);
  return (ha + hb) - entropy(table, join(a, b));
}

Bits conditional_mutual_information(const JointTable& table, const VarSet& a, const VarSet& b,
                                    const VarSet& given) {
  resolve(table, a);
  resolve(table, b);
  resolve(table, given);
  require_disjoint(table, a, b);
  require_disjoint(table, a, given);
  require_disjoint(table, b, given);
  return conditional_entropy(table, a, given) - conditional_entropy(table, a, join(b, given));
}

Bits external_information(const JointTable& table, std::string_view target) {
  const std::size_t t = table.index_of(target);
  if (table.arity() < 2)
    throw Error(Errc::UnknownVariable, "external information needs at least two variables");
  VarSet rest;
  for (std::size_t i = 0; i < table.arity(); ++i)
    if (i != t) rest.push_back(table.variable(i).name);
  return conditional_entropy(table, {std::string(target)}, rest);
}

Bits total_correlation(const JointTable& table, const VarSet& over) {
  const auto idx = resolve(table, over);
  if (idx.size() < 2) throw Error(Errc::UnknownVariable, "total correlation needs two variables");
  Bits sum = 0.0;
  for (auto i : idx) sum += entropy_of(table, {i});
  return sum - entropy_of(table, idx);
}

Bits co_information(const JointTable& table, std::string_view x1, std::string_view x2,
                    std::string_view x3) {
  std::set<std::size_t> idx{table.index_of(x1), table.index_of(x2), table.index_of(x3)};
  if (idx.size() != 3) throw Error(Errc::OverlappingSets, "co-information needs three distinct variables");
  // Sorting the indices makes every argument permutation evaluate the same
  // floating-point expression.
  const std::vector<std::size_t> v(idx.begin(), idx.end());
  const Bits singles = entropy_of(table, {v[0]}) + entropy_of(table, {v[1]}) + entropy_of(table, {v[2]});
  const Bits pairs = entropy_of(table, {v[0], v[1]}) + entropy_of(table, {v[0], v[2]}) +
                     entropy_of(table, {v[1], v[2]});
  return entropy_of(table, v) + singles - pairs;
}

}  // namespace sid
