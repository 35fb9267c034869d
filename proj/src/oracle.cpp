#include "sid/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <vector>

namespace sid {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

std::vector<std::size_t> source_indices(const JointTable& table, const VarSet& sources) {
  std::vector<std::size_t> idx;
  for (const auto& s : sources) {
    const std::size_t i = table.index_of(s);
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

std::size_t CommonPart::label(const std::string& source, const Symbol& value) const {
  auto it = labeling.find({source, value});
  if (it == labeling.end())
    throw Error(Errc::UnknownVariable, "value '" + value + "' of '" + source + "' has no label");
  return it->second;
}

CommonPart common_part(const JointTable& table, const VarSet& sources) {
  const auto idx = source_indices(table, sources);
  if (idx.size() < 2) throw Error(Errc::UnknownVariable, "common part needs two distinct sources");

  // One node per (source, alphabet code).
  std::vector<std::size_t> offset(idx.size() + 1, 0);
  for (std::size_t s = 0; s < idx.size(); ++s)
    offset[s + 1] = offset[s] + table.variable(idx[s]).alphabet.size();
  DisjointSets sets(offset.back());
  for (const auto& cell : table.cells())
    for (std::size_t s = 1; s < idx.size(); ++s)
      sets.unite(offset[0] + cell.code[idx[0]], offset[s] + cell.code[idx[s]]);

  CommonPart part;
  for (auto i : idx) part.sources.push_back(table.variable(i).name);
  std::map<std::size_t, std::size_t> root_label;
  for (const auto& cell : table.cells())
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const std::size_t root = sets.find(offset[s] + cell.code[idx[s]]);
      auto [it, fresh] = root_label.emplace(root, root_label.size());
      part.labeling.emplace(
          std::make_pair(table.variable(idx[s]).name, table.symbol(idx[s], cell.code[idx[s]])),
          it->second);
    }
  part.label_count = root_label.size();
  return part;
}

Bits redundancy(const JointTable& table, std::string_view target, const VarSet& sources) {
  const std::size_t t = table.index_of(target);
  const auto idx = source_indices(table, sources);
  if (idx.empty()) throw Error(Errc::UnknownVariable, "redundancy needs at least one source");
  if (std::find(idx.begin(), idx.end(), t) != idx.end())
    throw Error(Errc::TargetInSources, "'" + std::string(target) + "' is both target and source");
  if (idx.size() == 1)
    return mutual_information(table, {std::string(target)}, {table.variable(idx[0]).name});

  const CommonPart part = common_part(table, sources);
  const std::string& anchor = part.sources.front();
  const std::size_t a = table.index_of(anchor);
  std::string q_name = "Q*";
  while (table.has_variable(q_name)) q_name += "'";
  const JointTable augmented = with_derived(table, q_name, [&](const Outcome& o) {
    return std::to_string(part.label(anchor, o[a]));
  });
  return mutual_information(augmented, {q_name}, {std::string(target)});
}

AtomSet solve_atoms_oracle(const JointTable& table, double tol) {
  require_three(table);
  const SymmetryAudit audit = audit_symmetry(table, redundancy);
  if (audit.red_discrepancy > tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "per-target redundancy %.12g / %.12g / %.12g",
                  audit.red_by_target[0], audit.red_by_target[1], audit.red_by_target[2]);
    throw Error(Errc::SymmetryViolation, buf);
  }
  const Bits red = (audit.red_by_target[0] + audit.red_by_target[1] + audit.red_by_target[2]) / 3.0;
  return atoms_from_redundancy(table, red, Method::Oracle, tol);
}

}  // namespace sid
