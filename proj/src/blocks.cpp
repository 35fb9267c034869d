#include "sid/blocks.hpp"

#include <cmath>
#include <set>

namespace sid {

namespace {

struct Roles {
  std::size_t a, b, c;  // anchor, second, third
};

Roles roles_for(const JointTable& table, std::string_view anchor) {
  require_three(table);
  const std::size_t a = table.index_of(anchor);
  const std::size_t b = a == 0 ? 1 : 0;
  const std::size_t c = 3 - a - b;
  return {a, b, c};
}

struct Supports {
  std::vector<bool> in_b;
  std::vector<bool> in_c;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

Supports supports_at(const JointTable& table, const Roles& r, std::uint32_t value) {
  Supports s{std::vector<bool>(table.variable(r.b).alphabet.size(), false),
             std::vector<bool>(table.variable(r.c).alphabet.size(), false), {}};
  for (const auto& cell : table.cells())
    if (cell.code[r.a] == value) {
      s.in_b[cell.code[r.b]] = true;
      s.in_c[cell.code[r.c]] = true;
      s.pairs.emplace(cell.code[r.b], cell.code[r.c]);
    }
  return s;
}

std::uint32_t anchor_code(const JointTable& table, const Roles& r, std::string_view value) {
  auto code = table.code_of(r.a, value);
  bool seen = false;
  if (code)
    for (const auto& cell : table.cells()) seen = seen || cell.code[r.a] == *code;
  if (!seen)
    throw Error(Errc::ZeroProbabilityEvidence, table.variable(r.a).name + "=" + std::string(value) +
                                                   " has zero probability");
  return *code;
}

std::set<std::uint32_t> anchor_values(const JointTable& table, const Roles& r) {
  std::set<std::uint32_t> out;
  for (const auto& cell : table.cells()) out.insert(cell.code[r.a]);
  return out;
}

}  // namespace

std::string tag_label(const BlockReport::Row& row) {
  switch (row.tag) {
    case BlockTag::Yellow: return "yellow";
    case BlockTag::Synergistic: return "syn";
    case BlockTag::Unique: return "unique:" + row.unique_of;
    case BlockTag::External: return "ext";
    case BlockTag::Plain: return "plain";
  }
  return "plain";
}

BlockReport classify_blocks(const JointTable& table, std::string_view anchor, std::string_view value) {
  const Roles r = roles_for(table, anchor);
  const std::uint32_t a = anchor_code(table, r, value);
  const Supports s = supports_at(table, r, a);

  BlockReport report;
  report.anchor = table.variable(r.a).name;
  report.value = std::string(value);
  report.others = {table.variable(r.b).name, table.variable(r.c).name};
  for (std::uint32_t k = 0; k < s.in_b.size(); ++k)
    if (s.in_b[k]) report.supports[0].push_back(table.symbol(r.b, k));
  for (std::uint32_t k = 0; k < s.in_c.size(); ++k)
    if (s.in_c[k]) report.supports[1].push_back(table.symbol(r.c, k));
  report.unique_blocks[report.others[0]];
  report.unique_blocks[report.others[1]];

  for (const auto& cell : table.cells()) {
    BlockReport::Row row{table.decode(cell.code), cell.p, BlockTag::Plain, {}};
    const bool b_in = s.in_b[cell.code[r.b]];
    const bool c_in = s.in_c[cell.code[r.c]];
    if (cell.code[r.a] == a) {
      row.tag = BlockTag::Yellow;
      report.yellow.push_back(row.outcome);
    } else if (b_in && c_in) {
      if (s.pairs.contains({cell.code[r.b], cell.code[r.c]})) {
        row.tag = BlockTag::External;
        report.ext_blocks.push_back(row.outcome);
      } else {
        row.tag = BlockTag::Synergistic;
        report.syn_blocks.push_back(row.outcome);
      }
    } else if (b_in || c_in) {
      row.tag = BlockTag::Unique;
      row.unique_of = b_in ? report.others[0] : report.others[1];
      report.unique_blocks[row.unique_of].push_back(row.outcome);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

PositivityVerdict positivity(const JointTable& table, std::string_view anchor) {
  const Roles r = roles_for(table, anchor);
  PositivityVerdict verdict;
  verdict.anchor = table.variable(r.a).name;
  const std::string& nb = table.variable(r.b).name;
  const std::string& nc = table.variable(r.c).name;
  bool un_ab = false;
  bool un_ac = false;
  for (auto value : anchor_values(table, r)) {
    const BlockReport report = classify_blocks(table, anchor, table.symbol(r.a, value));
    verdict.syn_positive = verdict.syn_positive || !report.syn_blocks.empty();
    // Un(A, B) is witnessed where B leaves its support while C stays inside.
    un_ab = un_ab || !report.unique_blocks.at(nc).empty();
    un_ac = un_ac || !report.unique_blocks.at(nb).empty();
  }
  verdict.un_positive[VariablePair(verdict.anchor, nb)] = un_ab;
  verdict.un_positive[VariablePair(verdict.anchor, nc)] = un_ac;
  return verdict;
}

FormulaBreakdown synergy_formula_breakdown(const JointTable& table, std::string_view anchor) {
  const Roles r = roles_for(table, anchor);
  FormulaBreakdown out;
  out.anchor = table.variable(r.a).name;

  for (auto a : anchor_values(table, r)) {
    const Supports s = supports_at(table, r, a);
    // Masses that depend only on the anchor value.
    double p_a = 0.0;
    double p_both = 0.0;
    std::map<std::uint32_t, double> p_b_with_c_in, p_c_with_b_in, p_ab, p_ac;
    for (const auto& cell : table.cells()) {
      const auto xb = cell.code[r.b];
      const auto xc = cell.code[r.c];
      if (cell.code[r.a] == a) {
        p_a += cell.p;
        p_ab[xb] += cell.p;
        p_ac[xc] += cell.p;
      }
      if (s.in_c[xc]) p_b_with_c_in[xb] += cell.p;
      if (s.in_b[xb]) p_c_with_b_in[xc] += cell.p;
      if (s.in_b[xb] && s.in_c[xc]) p_both += cell.p;
    }

    double contribution = 0.0;
    for (const auto& cell : table.cells()) {
      if (cell.code[r.a] != a) continue;
      const auto xb = cell.code[r.b];
      const auto xc = cell.code[r.c];
      const double den_b = p_ab[xb];
      const double den_c = p_ac[xc];
      if (den_b <= 0.0 || den_c <= 0.0 || p_both <= 0.0)
        throw Error(Errc::ZeroDenominator, "vanishing denominator at a support point");
      const double ratio =
          (p_b_with_c_in[xb] / den_b) * (p_c_with_b_in[xc] / den_c) * (p_a / p_both);
      contribution += cell.p * std::log2(ratio);
    }
    const Symbol& sym = table.symbol(r.a, a);
    out.contribution[sym] = contribution;
    out.log_factor[sym] = contribution / p_a;
    out.log_term += contribution;
  }

  out.conditional_entropy =
      conditional_entropy(table, {out.anchor}, {table.variable(r.b).name, table.variable(r.c).name});
  out.value = out.log_term - out.conditional_entropy;
  return out;
}

Bits synergy_formula(const JointTable& table, std::string_view anchor) {
  return synergy_formula_breakdown(table, anchor).value;
}

}  // namespace sid
