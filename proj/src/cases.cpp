#include "sid/cases.hpp"

#include <algorithm>
#include <map>

namespace sid {

namespace {

void require_case(int n) {
  if (n < 1 || n > 4) throw Error(Errc::InvalidCaseNumber, "case " + std::to_string(n) + " not in 1..4");
}

AtomSet make_atoms(std::array<std::string, 3> vars, Bits red, std::array<Bits, 3> un, Bits syn,
                   std::array<Bits, 3> ext) {
  AtomSet atoms;
  atoms.variables = vars;
  atoms.red = red;
  atoms.un[VariablePair(vars[0], vars[1])] = un[0];
  atoms.un[VariablePair(vars[0], vars[2])] = un[1];
  atoms.un[VariablePair(vars[1], vars[2])] = un[2];
  atoms.syn = syn;
  for (std::size_t i = 0; i < 3; ++i) atoms.ext[vars[i]] = ext[i];
  atoms.method = Method::Supplied;
  return atoms;
}

JointTable uniform(std::vector<std::string> names, std::vector<Outcome> rows) {
  const double p = 1.0 / static_cast<double>(rows.size());
  std::vector<std::pair<Outcome, double>> entries;
  for (auto& r : rows) entries.emplace_back(std::move(r), p);
  PmfOptions opts;
  opts.names = std::move(names);
  return from_pmf(entries, opts);
}

}  // namespace

CaseSpec construction() {
  CaseSpec spec;
  spec.micro_bits = {"a", "b", "c", "d", "e", "f"};
  spec.derived_bits = {{"g", {"c", "e"}}, {"h", {"d", "f"}}, {"i", {"c", "f"}}, {"j", {"d", "e"}}};
  spec.macros = {{"X1", {"a", "b", "c", "d"}}, {"X2", {"a", "b", "e", "f"}},
                 {"X3", {"c", "d", "e", "f"}}, {"X4", {"a", "c", "e", "h"}},
                 {"X5", {"a", "b", "g", "h"}}, {"X6", {"a", "b", "i", "j"}}};
  return spec;
}

CaseSpec case_spec(int n) {
  require_case(n);
  CaseSpec spec = construction();
  const std::string third = "X" + std::to_string(n + 2);
  std::erase_if(spec.macros, [&](const auto& m) {
    return m.first != "X1" && m.first != "X2" && m.first != third;
  });
  return spec;
}

SampleSet enumerate(const CaseSpec& spec) {
  const std::size_t m = spec.micro_bits.size();
  SampleSet out;
  for (const auto& [name, bits] : spec.macros) out.variables.push_back(name);
  for (std::size_t assignment = 0; assignment < (std::size_t{1} << m); ++assignment) {
    std::map<std::string, int> bit;
    // First micro bit is the most significant, so rows come out in the
    // natural abcdef counting order.
    for (std::size_t k = 0; k < m; ++k)
      bit[spec.micro_bits[k]] = static_cast<int>((assignment >> (m - 1 - k)) & 1U);
    for (const auto& [name, ops] : spec.derived_bits) {
      if (!bit.contains(ops.first) || !bit.contains(ops.second))
        throw Error(Errc::UnknownVariable, "derived bit '" + name + "' references an undefined bit");
      bit[name] = bit.at(ops.first) ^ bit.at(ops.second);
    }
    Outcome row;
    for (const auto& [name, parts] : spec.macros) {
      Symbol s;
      for (const auto& part : parts) {
        if (!bit.contains(part))
          throw Error(Errc::UnknownVariable, "macro '" + name + "' references undefined bit '" + part + "'");
        s += static_cast<char>('0' + bit.at(part));
      }
      row.push_back(std::move(s));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

JointTable generate_case(int n) {
  SampleSet s = enumerate(case_spec(n));
  return uniform(s.variables, std::move(s.rows));
}

JointTable micro_table() {
  std::vector<Outcome> rows;
  for (unsigned v = 0; v < 64; ++v) {
    Outcome row;
    for (int k = 5; k >= 0; --k) row.push_back((v >> k) & 1U ? "1" : "0");
    rows.push_back(std::move(row));
  }
  return uniform({"a", "b", "c", "d", "e", "f"}, std::move(rows));
}

JointTable appendix_table() {
  SampleSet s = enumerate(construction());
  return uniform(s.variables, std::move(s.rows));
}

AtomSet golden_atoms(int n) {
  require_case(n);
  const std::array<std::string, 3> vars{"X1", "X2", "X" + std::to_string(n + 2)};
  switch (n) {
    case 1: return make_atoms(vars, 0.0, {2.0, 2.0, 2.0}, 0.0, {0.0, 0.0, 0.0});
    case 2: return make_atoms(vars, 1.0, {1.0, 1.0, 1.0}, 1.0, {0.0, 0.0, 0.0});
    default: return make_atoms(vars, 2.0, {0.0, 0.0, 0.0}, 2.0, {0.0, 0.0, 0.0});
  }
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"xor_triple", "copy_triple", "independent_bits",
                                              "partial_copy"};
  return names;
}

JointTable fixture(std::string_view name) {
  std::vector<Outcome> rows;
  if (name == "xor_triple") {
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        rows.push_back({std::to_string(x1), std::to_string(x2), std::to_string(x1 ^ x2)});
  } else if (name == "copy_triple") {
    rows = {{"0", "0", "0"}, {"1", "1", "1"}};
  } else if (name == "independent_bits") {
    for (int v = 0; v < 8; ++v)
      rows.push_back({std::to_string(v >> 2 & 1), std::to_string(v >> 1 & 1), std::to_string(v & 1)});
  } else if (name == "partial_copy") {
    for (int v = 0; v < 8; ++v) {
      const int a = v >> 2 & 1, b = v >> 1 & 1, c = v & 1;
      rows.push_back({std::to_string(a) + std::to_string(b), std::to_string(b), std::to_string(c)});
    }
  } else {
    throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
  }
  return uniform({"X1", "X2", "X3"}, std::move(rows));
}

AtomSet fixture_atoms(std::string_view name) {
  const std::array<std::string, 3> vars{"X1", "X2", "X3"};
  if (name == "xor_triple") return make_atoms(vars, 0.0, {0.0, 0.0, 0.0}, 1.0, {0.0, 0.0, 0.0});
  if (name == "copy_triple") return make_atoms(vars, 1.0, {0.0, 0.0, 0.0}, 0.0, {0.0, 0.0, 0.0});
  if (name == "independent_bits")
    return make_atoms(vars, 0.0, {0.0, 0.0, 0.0}, 0.0, {1.0, 1.0, 1.0});
  if (name == "partial_copy") return make_atoms(vars, 0.0, {1.0, 0.0, 0.0}, 0.0, {1.0, 0.0, 1.0});
  throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace sid
