// sid: command-line front end for the information decomposition library.
//
// Exit codes: 0 success, 1 solver error or flagged result, 2 input error.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sid/cases.hpp"
#include "sid/decompose.hpp"
#include "sid/io.hpp"
#include "sid/oracle.hpp"
#include "sid/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFlagged = 1;
constexpr int kInputError = 2;

int exit_code_for(sid::Errc code) {
  switch (code) {
    case sid::Errc::RedundancyOutOfRange:
    case sid::Errc::SynergyInconsistent:
    case sid::Errc::InconsistentZeros:
    case sid::Errc::ZeroDenominator:
    case sid::Errc::SymmetryViolation:
    case sid::Errc::NotApplicable:
      return kFlagged;
    default:
      return kInputError;
  }
}

struct InputOptions {
  std::string input;
  int case_number = 0;
  std::string fixture;
  std::string group;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("--input", opts.input, "JSON distribution or CSV samples ('-' for stdin)");
  cmd->add_option("--case", opts.case_number, "Built-in case system 1..4");
  cmd->add_option("--fixture", opts.fixture, "Built-in fixture (xor_triple, copy_triple, ...)");
  cmd->add_option("--group", opts.group, "Composites, e.g. \"X1=a,b,c,d;X2=a,b,e,f;X3=c,d,e,f\"");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<sid::Composite> parse_group(const std::string& spec) {
  std::vector<sid::Composite> blocks;
  for (const auto& part : split(spec, ';')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      throw sid::Error(sid::Errc::ParseError, "group block '" + part + "' is not NAME=a,b,...");
    blocks.push_back({part.substr(0, eq), split(part.substr(eq + 1), ',')});
  }
  if (blocks.empty()) throw sid::Error(sid::Errc::ParseError, "empty --group");
  return blocks;
}

sid::JointTable load_table(const InputOptions& opts) {
  const int sources = (!opts.input.empty()) + (opts.case_number != 0) + (!opts.fixture.empty());
  if (sources > 1) throw sid::Error(sid::Errc::ParseError, "give only one of --input, --case, --fixture");

  std::optional<sid::JointTable> table;
  if (opts.case_number != 0) {
    table = sid::generate_case(opts.case_number);
  } else if (!opts.fixture.empty()) {
    table = sid::fixture(opts.fixture);
  } else if (opts.input.empty() || opts.input == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    table = sid::parse_input(text);
  } else {
    table = sid::parse_input(sid::read_file(opts.input));
  }

  if (!opts.group.empty()) {
    const auto blocks = parse_group(opts.group);
    sid::VarSet used;
    for (const auto& b : blocks)
      for (const auto& m : b.members)
        if (std::find(used.begin(), used.end(), m) == used.end()) used.push_back(m);
    for (const auto& m : used)
      if (!table->has_variable(m))
        throw sid::Error(sid::Errc::NotAPartition, "group names unknown variable '" + m + "'");
    table = sid::group(sid::marginalize(*table, used), blocks);
  }
  return *table;
}

double tolerance_from_env() {
  if (const char* env = std::getenv("SID_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw sid::Error(sid::Errc::ParseError, "SID_TOLERANCE must be a positive number");
    return v;
  }
  return sid::kTolerance;
}

void require_format(const std::string& format) {
  if (format != "text" && format != "json")
    throw sid::Error(sid::Errc::ParseError, "--format must be text or json");
}

int cmd_decompose(const InputOptions& in, const std::string& method, const std::string& format) {
  require_format(format);
  const double tol = tolerance_from_env();
  const auto m = sid::parse_solve_method(method);
  const auto table = load_table(in);
  const auto d = sid::decompose(table, m, tol);
  std::cout << (format == "json" ? sid::canonical_dump(sid::decomposition_json(d))
                                 : sid::decomposition_text(d));
  return d.flagged(tol) ? kFlagged : kOk;
}

struct ShannonRequest {
  std::vector<std::string> entropy, cond_entropy, mi, cmi, tc, coi;
  std::string ext;
};

sid::VarSet as_set(const std::string& token) { return split(token, ','); }

std::string set_label(const std::string& token) { return token; }

int cmd_shannon(const InputOptions& in, const ShannonRequest& req, const std::string& format) {
  require_format(format);
  const auto table = load_table(in);
  std::vector<std::pair<std::string, double>> results;

  auto need = [](const std::vector<std::string>& args, std::size_t n, const char* flag) {
    if (args.size() != n)
      throw sid::Error(sid::Errc::ParseError, std::string(flag) + " takes " + std::to_string(n) + " arguments");
  };
  auto join = [](const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) out += (out.empty() ? "" : ",") + a;
    return out;
  };

  if (!req.entropy.empty()) {
    sid::VarSet over;
    for (const auto& t : req.entropy)
      for (auto& v : as_set(t)) over.push_back(v);
    results.emplace_back("H(" + join(over) + ")", sid::entropy(table, over));
  }
  if (!req.cond_entropy.empty()) {
    need(req.cond_entropy, 2, "--cond-entropy");
    results.emplace_back("H(" + set_label(req.cond_entropy[0]) + "|" + set_label(req.cond_entropy[1]) + ")",
                         sid::conditional_entropy(table, as_set(req.cond_entropy[0]), as_set(req.cond_entropy[1])));
  }
  if (!req.mi.empty()) {
    need(req.mi, 2, "--mi");
    results.emplace_back("I(" + req.mi[0] + ";" + req.mi[1] + ")",
                         sid::mutual_information(table, as_set(req.mi[0]), as_set(req.mi[1])));
  }
  if (!req.cmi.empty()) {
    need(req.cmi, 3, "--cmi");
    results.emplace_back("I(" + req.cmi[0] + ";" + req.cmi[1] + "|" + req.cmi[2] + ")",
                         sid::conditional_mutual_information(table, as_set(req.cmi[0]), as_set(req.cmi[1]),
                                                             as_set(req.cmi[2])));
  }
  if (!req.ext.empty()) results.emplace_back("Ext(" + req.ext + ")", sid::external_information(table, req.ext));
  if (!req.tc.empty()) results.emplace_back("TC(" + join(req.tc) + ")", sid::total_correlation(table, req.tc));
  if (!req.coi.empty()) {
    need(req.coi, 3, "--coi");
    results.emplace_back("CoI(" + join(req.coi) + ")", sid::co_information(table, req.coi[0], req.coi[1], req.coi[2]));
  }
  if (results.empty()) throw sid::Error(sid::Errc::ParseError, "no measure requested");

  if (format == "json") {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : results) j[k] = v;
    std::cout << sid::canonical_dump(j);
  } else {
    for (const auto& [k, v] : results) std::cout << k << " = " << sid::format_bits(v) << "\n";
  }
  return kOk;
}

int cmd_blocks(const InputOptions& in, const std::string& anchor, const std::string& value,
               const std::string& format) {
  require_format(format);
  const auto table = load_table(in);
  const std::string var = anchor.empty() ? table.variable(0).name : anchor;
  std::vector<std::string> values;
  if (!value.empty()) {
    values.push_back(value);
  } else {
    const std::size_t a = table.index_of(var);
    std::vector<bool> seen(table.variable(a).alphabet.size(), false);
    for (const auto& cell : table.cells()) seen[cell.code[a]] = true;
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (seen[k]) values.push_back(table.variable(a).alphabet[k]);
  }

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(sid::block_report_json(sid::classify_blocks(table, var, v)));
    std::cout << sid::canonical_dump(values.size() == 1 ? arr[0] : arr);
  } else {
    for (std::size_t i = 0; i < values.size(); ++i)
      std::cout << (i ? "\n" : "") << sid::block_report_text(sid::classify_blocks(table, var, values[i]));
  }
  return kOk;
}

int cmd_venn(const InputOptions& in, const std::string& method, const std::string& out) {
  const double tol = tolerance_from_env();
  const auto table = load_table(in);
  const auto d = sid::decompose(table, sid::parse_solve_method(method), tol);
  const std::string svg = sid::venn_svg(d.atoms);
  if (out.empty() || out == "-")
    std::cout << svg;
  else
    sid::write_file(out, svg);
  return d.flagged(tol) ? kFlagged : kOk;
}

int cmd_cases(int n, const std::string& fixture, const std::string& emit) {
  if ((n != 0) == !fixture.empty())
    throw sid::Error(sid::Errc::ParseError, "give exactly one of --case or --fixture");
  if (emit == "dist") {
    const auto table = n ? sid::generate_case(n) : sid::fixture(fixture);
    std::cout << sid::write_distribution_json(table);
  } else if (emit == "samples") {
    if (n) {
      std::cout << sid::write_samples_csv(sid::enumerate(sid::case_spec(n)));
    } else {
      const auto table = sid::fixture(fixture);
      sid::SampleSet s{table.names(), {}};
      for (const auto& cell : table.cells()) s.rows.push_back(table.decode(cell.code));
      std::cout << sid::write_samples_csv(s);
    }
  } else if (emit == "table") {
    const auto table = n ? sid::generate_case(n) : sid::fixture(fixture);
    const auto& first = table.variable(0);
    const auto& value = first.alphabet.at(table.cells().front().code[0]);
    std::cout << sid::block_report_text(sid::classify_blocks(table, first.name, value));
  } else {
    throw sid::Error(sid::Errc::ParseError, "--emit must be dist, samples or table");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose the entropy of three-variable discrete systems into information atoms"};
  app.require_subcommand(1);

  InputOptions in;
  std::string method = "auto";
  std::string format = "text";
  std::string out;
  std::string anchor, value, emit = "dist";
  ShannonRequest req;

  auto* decompose = app.add_subcommand("decompose", "Compute Red, Un, Syn and Ext atoms");
  add_input_options(decompose, in);
  decompose->add_option("--method", method, "auto|direct|oracle|formula");
  decompose->add_option("--format", format, "text|json");

  auto* shannon = app.add_subcommand("shannon", "Classical Shannon measures");
  add_input_options(shannon, in);
  shannon->add_option("--entropy", req.entropy, "H(vars)");
  shannon->add_option("--cond-entropy", req.cond_entropy, "H(A|B); sets are comma-separated");
  shannon->add_option("--mi", req.mi, "I(A;B)");
  shannon->add_option("--cmi", req.cmi, "I(A;B|C)");
  shannon->add_option("--ext", req.ext, "H(V | all others)");
  shannon->add_option("--tc", req.tc, "total correlation");
  shannon->add_option("--coi", req.coi, "co-information of three variables");
  shannon->add_option("--format", format, "text|json");

  auto* blocks = app.add_subcommand("blocks", "Mark yellow, synergistic and unique blocks");
  add_input_options(blocks, in);
  blocks->add_option("--anchor", anchor, "Anchor variable (default: first)");
  blocks->add_option("--value", value, "Anchor value (default: every value)");
  blocks->add_option("--format", format, "text|json");

  auto* venn = app.add_subcommand("venn", "Render the atoms as an SVG Venn diagram");
  add_input_options(venn, in);
  venn->add_option("--method", method, "auto|direct|oracle|formula");
  venn->add_option("--out", out, "Output SVG path (default: stdout)");

  int case_number = 0;
  std::string fixture;
  auto* cases = app.add_subcommand("cases", "Emit a built-in case system or fixture");
  cases->add_option("--case", case_number, "Case 1..4");
  cases->add_option("--fixture", fixture, "Fixture name");
  cases->add_option("--emit", emit, "dist|samples|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*decompose) return cmd_decompose(in, method, format);
    if (*shannon) return cmd_shannon(in, req, format);
    if (*blocks) return cmd_blocks(in, anchor, value, format);
    if (*venn) return cmd_venn(in, method, out);
    if (*cases) return cmd_cases(case_number, fixture, emit);
  } catch (const sid::Error& e) {
    std::cerr << "sid: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sid: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
