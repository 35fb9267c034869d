#include "sid/table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace sid {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NegativeProbability: return "NegativeProbability";
    case Errc::SumNotOne: return "SumNotOne";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InvalidAlphabet: return "InvalidAlphabet";
    case Errc::EmptySample: return "EmptySample";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::EmptyKeepSet: return "EmptyKeepSet";
    case Errc::ZeroProbabilityEvidence: return "ZeroProbabilityEvidence";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::OverlappingSets: return "OverlappingSets";
    case Errc::NotThreeVariables: return "NotThreeVariables";
    case Errc::RedundancyOutOfRange: return "RedundancyOutOfRange";
    case Errc::SynergyInconsistent: return "SynergyInconsistent";
    case Errc::InconsistentZeros: return "InconsistentZeros";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::TargetInSources: return "TargetInSources";
    case Errc::SymmetryViolation: return "SymmetryViolation";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::InvalidCaseNumber: return "InvalidCaseNumber";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_alphabets(const std::vector<Variable>& variables) {
  std::unordered_set<std::string> names;
  for (const auto& v : variables) {
    if (v.name.empty()) throw Error(Errc::InvalidAlphabet, "variable with empty name");
    if (!names.insert(v.name).second)
      throw Error(Errc::InvalidAlphabet, "duplicate variable name '" + v.name + "'");
    if (v.alphabet.empty())
      throw Error(Errc::InvalidAlphabet, "variable '" + v.name + "' has an empty alphabet");
    std::unordered_set<std::string_view> seen;
    for (const auto& s : v.alphabet)
      if (!seen.insert(s).second)
        throw Error(Errc::InvalidAlphabet,
                    "duplicate symbol '" + s + "' in alphabet of '" + v.name + "'");
  }
}

// Accumulates mass per projected code.
std::map<JointTable::Code, double> project(const JointTable& table,
                                           const std::vector<std::size_t>& idx) {
  std::map<JointTable::Code, double> out;
  JointTable::Code key(idx.size());
  for (const auto& cell : table.cells()) {
    for (std::size_t k = 0; k < idx.size(); ++k) key[k] = cell.code[idx[k]];
    out[key] += cell.p;
  }
  return out;
}

std::vector<JointTable::Cell> to_cells(std::map<JointTable::Code, double>&& m) {
  std::vector<JointTable::Cell> cells;
  cells.reserve(m.size());
  for (auto& [code, p] : m) cells.push_back({code, p});
  return cells;
}

}  // namespace

JointTable JointTable::from_cells(std::vector<Variable> variables, std::vector<Cell> cells,
                                  bool normalize) {
  check_alphabets(variables);
  std::map<Code, double> merged;
  double total = 0.0;
  for (auto& cell : cells) {
    if (cell.code.size() != variables.size())
      throw Error(Errc::ArityMismatch, "outcome arity " + std::to_string(cell.code.size()) +
                                           " != variable count " +
                                           std::to_string(variables.size()));
    if (!(cell.p >= 0.0) || !std::isfinite(cell.p))
      throw Error(Errc::NegativeProbability, "probability " + std::to_string(cell.p));
    for (std::size_t i = 0; i < cell.code.size(); ++i)
      if (cell.code[i] >= variables[i].alphabet.size())
        throw Error(Errc::InvalidAlphabet, "code outside alphabet of '" + variables[i].name + "'");
    if (cell.p == 0.0) continue;
    merged[std::move(cell.code)] += cell.p;
    total += cell.p;
  }
  if (merged.empty()) throw Error(Errc::SumNotOne, "distribution has no positive mass");
  if (!normalize && std::abs(total - 1.0) > kTolerance)
    throw Error(Errc::SumNotOne, "probabilities sum to " + std::to_string(total));
  for (auto& [code, p] : merged) p /= total;
  return JointTable(std::move(variables), to_cells(std::move(merged)));
}

std::vector<std::string> JointTable::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (const auto& v : variables_) out.push_back(v.name);
  return out;
}

std::size_t JointTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i].name == name) return i;
  throw Error(Errc::UnknownVariable, "no variable named '" + std::string(name) + "'");
}

std::vector<std::size_t> JointTable::indices_of(const VarSet& names) const {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(index_of(n));
  return out;
}

bool JointTable::has_variable(std::string_view name) const noexcept {
  return std::any_of(variables_.begin(), variables_.end(),
                     [&](const Variable& v) { return v.name == name; });
}

const Symbol& JointTable::symbol(std::size_t var, std::uint32_t code) const {
  return variables_.at(var).alphabet.at(code);
}

std::optional<std::uint32_t> JointTable::code_of(std::size_t var, std::string_view symbol) const {
  const auto& a = variables_.at(var).alphabet;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == symbol) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

Outcome JointTable::decode(const Code& code) const {
  Outcome out;
  out.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) out.push_back(symbol(i, code[i]));
  return out;
}

double JointTable::probability(const Outcome& outcome) const {
  if (outcome.size() != arity())
    throw Error(Errc::ArityMismatch, "outcome arity does not match table");
  Code code(arity());
  for (std::size_t i = 0; i < arity(); ++i) {
    auto c = code_of(i, outcome[i]);
    if (!c) return 0.0;
    code[i] = *c;
  }
  auto it = std::lower_bound(cells_.begin(), cells_.end(), code,
                             [](const Cell& c, const Code& k) { return c.code < k; });
  return (it != cells_.end() && it->code == code) ? it->p : 0.0;
}

JointTable from_pmf(const std::vector<std::pair<Outcome, double>>& entries,
                    const PmfOptions& options) {
  if (entries.empty()) throw Error(Errc::ArityMismatch, "no pmf entries");
  const std::size_t n = entries.front().first.size();
  if (n == 0) throw Error(Errc::ArityMismatch, "empty outcome tuple");
  for (const auto& [outcome, p] : entries) {
    if (outcome.size() != n)
      throw Error(Errc::ArityMismatch, "outcomes have different arities");
    if (p < 0.0) throw Error(Errc::NegativeProbability, "probability " + std::to_string(p));
  }

  std::vector<Variable> vars(n);
  if (!options.names.empty() && options.names.size() != n)
    throw Error(Errc::ArityMismatch, "name count does not match outcome arity");
  if (!options.alphabets.empty() && options.alphabets.size() != n)
    throw Error(Errc::ArityMismatch, "alphabet count does not match outcome arity");
  for (std::size_t i = 0; i < n; ++i) {
    vars[i].name = options.names.empty() ? "X" + std::to_string(i + 1) : options.names[i];
    if (!options.alphabets.empty()) {
      vars[i].alphabet = options.alphabets[i];
    } else {
      std::set<Symbol> seen;
      for (const auto& e : entries) seen.insert(e.first[i]);
      vars[i].alphabet.assign(seen.begin(), seen.end());
    }
  }
  check_alphabets(vars);

  std::vector<std::unordered_map<std::string_view, std::uint32_t>> lookup(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < vars[i].alphabet.size(); ++k)
      lookup[i].emplace(vars[i].alphabet[k], static_cast<std::uint32_t>(k));

  std::vector<JointTable::Cell> cells;
  cells.reserve(entries.size());
  for (const auto& [outcome, p] : entries) {
    JointTable::Code code(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = lookup[i].find(outcome[i]);
      if (it == lookup[i].end())
        throw Error(Errc::InvalidAlphabet,
                    "symbol '" + outcome[i] + "' not in alphabet of '" + vars[i].name + "'");
      code[i] = it->second;
    }
    cells.push_back({std::move(code), p});
  }
  return JointTable::from_cells(std::move(vars), std::move(cells), options.normalize);
}

JointTable from_samples(const SampleSet& samples) {
  if (samples.rows.empty()) throw Error(Errc::EmptySample, "sample set has no rows");
  std::map<Outcome, std::size_t> counts;
  for (const auto& row : samples.rows) {
    if (row.size() != samples.variables.size())
      throw Error(Errc::ArityMismatch, "sample row arity does not match header");
    ++counts[row];
  }
  const double total = static_cast<double>(samples.rows.size());
  std::vector<std::pair<Outcome, double>> entries;
  entries.reserve(counts.size());
  for (const auto& [row, c] : counts) entries.emplace_back(row, static_cast<double>(c) / total);
  PmfOptions opts;
  opts.names = samples.variables;
  opts.normalize = true;
  return from_pmf(entries, opts);
}

JointTable marginalize(const JointTable& table, const VarSet& keep) {
  if (keep.empty()) throw Error(Errc::EmptyKeepSet, "marginalize needs at least one variable");
  std::vector<bool> kept(table.arity(), false);
  for (const auto& name : keep) kept[table.index_of(name)] = true;
  std::vector<std::size_t> idx;
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < table.arity(); ++i)
    if (kept[i]) {
      idx.push_back(i);
      vars.push_back(table.variable(i));
    }
  return JointTable::from_cells(std::move(vars), to_cells(project(table, idx)), true);
}

JointTable condition(const JointTable& table, const Assignment& evidence) {
  std::vector<std::optional<std::uint32_t>> fixed(table.arity());
  for (const auto& [name, value] : evidence) {
    const std::size_t i = table.index_of(name);
    auto code = table.code_of(i, value);
    if (!code)
      throw Error(Errc::ZeroProbabilityEvidence,
                  "'" + value + "' is not in the alphabet of '" + name + "'");
    if (fixed[i] && *fixed[i] != *code)
      throw Error(Errc::ZeroProbabilityEvidence, "contradictory evidence on '" + name + "'");
    fixed[i] = code;
  }

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < table.arity(); ++i)
    if (!fixed[i]) rest.push_back(i);
  if (rest.empty())
    for (std::size_t i = 0; i < table.arity(); ++i) rest.push_back(i);

  std::map<JointTable::Code, double> out;
  JointTable::Code key(rest.size());
  for (const auto& cell : table.cells()) {
    bool match = true;
    for (std::size_t i = 0; i < table.arity() && match; ++i)
      match = !fixed[i] || cell.code[i] == *fixed[i];
    if (!match) continue;
    for (std::size_t k = 0; k < rest.size(); ++k) key[k] = cell.code[rest[k]];
    out[key] += cell.p;
  }
  if (out.empty()) throw Error(Errc::ZeroProbabilityEvidence, "evidence has zero probability");

  std::vector<Variable> vars;
  for (auto i : rest) vars.push_back(table.variable(i));
  return JointTable::from_cells(std::move(vars), to_cells(std::move(out)), true);
}

JointTable group(const JointTable& table, const std::vector<Composite>& blocks) {
  if (blocks.empty()) throw Error(Errc::NotAPartition, "no blocks given");
  std::vector<bool> covered(table.arity(), false);
  std::vector<std::vector<std::size_t>> members;
  for (const auto& b : blocks) {
    if (b.members.empty())
      throw Error(Errc::NotAPartition, "block '" + b.name + "' has no members");
    std::vector<std::size_t> idx;
    for (const auto& m : b.members) {
      if (!table.has_variable(m))
        throw Error(Errc::NotAPartition, "block '" + b.name + "' names unknown variable '" + m + "'");
      const std::size_t i = table.index_of(m);
      if (std::find(idx.begin(), idx.end(), i) != idx.end())
        throw Error(Errc::NotAPartition, "block '" + b.name + "' repeats '" + m + "'");
      idx.push_back(i);
      covered[i] = true;
    }
    members.push_back(std::move(idx));
  }
  for (std::size_t i = 0; i < table.arity(); ++i)
    if (!covered[i])
      throw Error(Errc::NotAPartition,
                  "variable '" + table.variable(i).name + "' is not covered by any block");

  // Splicing is injective when every component alphabet has a uniform symbol
  // width; otherwise components are joined with '|'.
  auto uniform_width = [&](std::size_t var) {
    const auto& a = table.variable(var).alphabet;
    return std::all_of(a.begin(), a.end(),
                       [&](const Symbol& s) { return s.size() == a.front().size(); });
  };

  std::vector<std::map<JointTable::Code, std::uint32_t>> codes(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    JointTable::Code key(members[b].size());
    for (const auto& cell : table.cells()) {
      for (std::size_t k = 0; k < key.size(); ++k) key[k] = cell.code[members[b][k]];
      codes[b].emplace(key, 0);
    }
    std::uint32_t next = 0;
    for (auto& [key_, c] : codes[b]) c = next++;
  }

  std::vector<Variable> vars(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    vars[b].name = blocks[b].name;
    const bool plain = std::all_of(members[b].begin(), members[b].end(), uniform_width);
    std::set<Symbol> distinct;
    for (const auto& [key, c] : codes[b]) {
      Symbol s;
      for (std::size_t k = 0; k < key.size(); ++k) {
        if (!plain && k > 0) s += '|';
        s += table.symbol(members[b][k], key[k]);
      }
      if (!distinct.insert(s).second)
        throw Error(Errc::InvalidAlphabet, "composite symbol '" + s + "' is ambiguous");
      vars[b].alphabet.push_back(std::move(s));
    }
  }

  std::vector<JointTable::Cell> cells;
  cells.reserve(table.support_size());
  for (const auto& cell : table.cells()) {
    JointTable::Code code(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      JointTable::Code key(members[b].size());
      for (std::size_t k = 0; k < key.size(); ++k) key[k] = cell.code[members[b][k]];
      code[b] = codes[b].at(key);
    }
    cells.push_back({std::move(code), cell.p});
  }
  return JointTable::from_cells(std::move(vars), std::move(cells), true);
}

std::vector<Symbol> conditional_support(const JointTable& table, std::string_view anchor,
                                        std::string_view value, std::string_view of) {
  const std::size_t a = table.index_of(anchor);
  const std::size_t o = table.index_of(of);
  auto code = table.code_of(a, value);
  if (!code)
    throw Error(Errc::ZeroProbabilityEvidence,
                "'" + std::string(value) + "' is not in the alphabet of '" + std::string(anchor) + "'");
  std::set<std::uint32_t> hits;
  for (const auto& cell : table.cells())
    if (cell.code[a] == *code) hits.insert(cell.code[o]);
  if (hits.empty())
    throw Error(Errc::ZeroProbabilityEvidence,
                std::string(anchor) + "=" + std::string(value) + " has zero probability");
  std::vector<Symbol> out;
  for (auto c : hits) out.push_back(table.symbol(o, c));
  return out;
}

JointTable with_derived(const JointTable& table, std::string name,
                        const std::function<Symbol(const Outcome&)>& fn) {
  if (table.has_variable(name))
    throw Error(Errc::InvalidAlphabet, "variable '" + name + "' already exists");
  std::vector<Symbol> values;
  values.reserve(table.support_size());
  std::set<Symbol> alphabet;
  for (const auto& cell : table.cells()) {
    values.push_back(fn(table.decode(cell.code)));
    alphabet.insert(values.back());
  }
  std::vector<Variable> vars = table.variables();
  vars.push_back({std::move(name), {alphabet.begin(), alphabet.end()}});
  const auto& abc = vars.back().alphabet;

  std::vector<JointTable::Cell> cells;
  cells.reserve(table.support_size());
  for (std::size_t i = 0; i < table.support_size(); ++i) {
    JointTable::Cell cell = table.cells()[i];
    auto pos = std::lower_bound(abc.begin(), abc.end(), values[i]) - abc.begin();
    cell.code.push_back(static_cast<std::uint32_t>(pos));
    cells.push_back(std::move(cell));
  }
  return JointTable::from_cells(std::move(vars), std::move(cells), true);
}

}  // namespace sid
