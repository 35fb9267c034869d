#include "sid/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sid {

using nlohmann::json;

std::string format_bits(double v, double tol) {
  v = clamp_dust(v, tol);
  if (v == 0.0) v = 0.0;  // drops the sign of -0.0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  std::string s = buf;
  if (s == "-0.000000000") s = "0.000000000";
  return s;
}

namespace {

void dump_into(const json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(key).dump() + ": ";
        dump_into(item, indent + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(v[i], indent + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_bits(v.get<double>());
      return;
    default:
      out += v.dump();
  }
}

json bits(double v) { return clamp_dust(v) == 0.0 ? 0.0 : v; }

json outcomes_json(const std::vector<Outcome>& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(p);
  return arr;
}

std::string perm_key(const std::array<std::string, 3>& n, const std::array<std::size_t, 3>& p) {
  return n[p[0]] + "," + n[p[1]] + "," + n[p[2]];
}

}  // namespace

std::string canonical_dump(const json& value) {
  std::string out;
  dump_into(value, 0, out);
  return out + "\n";
}

json atoms_json(const AtomSet& atoms, const Residuals& r) {
  json j;
  j["red"] = bits(atoms.red);
  j["syn"] = bits(atoms.syn);
  j["un"] = json::object();
  for (const auto& [pair, u] : atoms.un) j["un"][pair.key()] = bits(u);
  j["ext"] = json::object();
  for (const auto& [v, e] : atoms.ext) j["ext"][v] = bits(e);
  j["method"] = std::string(to_string(atoms.method));
  j["violations"] = atoms.violations;
  j["residuals"] = {{"joint", bits(r.joint)}, {"tc", bits(r.tc)}, {"coi", bits(r.coi)}};
  return j;
}

json decomposition_json(const Decomposition& d) {
  json j = atoms_json(d.atoms, d.residuals);
  j["variables"] = d.atoms.variables;

  json sym;
  for (std::size_t t = 0; t < 3; ++t) sym["red_by_target"][d.atoms.variables[t]] = bits(d.audit.red_by_target[t]);
  for (std::size_t p = 0; p < 6; ++p)
    sym["syn_by_permutation"][perm_key(d.atoms.variables, d.audit.permutations[p])] =
        bits(d.audit.syn_by_permutation[p]);
  sym["discrepancy"] = bits(d.audit.discrepancy);
  j["symmetry"] = sym;

  json pos = json::object();
  for (const auto& pv : d.positivity) {
    json entry;
    entry["syn"] = pv.syn_positive;
    for (const auto& [pair, positive] : pv.un_positive) entry["un"][pair.key()] = positive;
    pos[pv.anchor] = entry;
  }
  j["positivity"] = pos;

  json formula;
  formula["anchor"] = d.formula.anchor;
  formula["syn"] = bits(d.formula.value);
  formula["agrees"] = d.formula_agrees;
  j["formula"] = formula;
  j["notes"] = d.notes;
  return j;
}

json block_report_json(const BlockReport& report) {
  json j;
  j["anchor"] = {{"variable", report.anchor}, {"value", report.value}};
  j["supports"] = {{report.others[0], report.supports[0]}, {report.others[1], report.supports[1]}};
  j["yellow"] = outcomes_json(report.yellow);
  j["syn_blocks"] = outcomes_json(report.syn_blocks);
  j["ext_blocks"] = outcomes_json(report.ext_blocks);
  j["unique_blocks"] = json::object();
  for (const auto& [v, pts] : report.unique_blocks) j["unique_blocks"][v] = outcomes_json(pts);
  json rows = json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"outcome", row.outcome}, {"p", row.p}, {"tag", tag_label(row)}});
  j["rows"] = rows;
  return j;
}

json common_part_json(const CommonPart& part) {
  json j;
  j["sources"] = part.sources;
  j["label_count"] = part.label_count;
  json labels = json::object();
  for (const auto& [key, label] : part.labeling) labels[key.first][key.second] = label;
  j["labeling"] = labels;
  return j;
}

std::string decomposition_text(const Decomposition& d) {
  const auto& a = d.atoms;
  std::ostringstream out;
  out << "method      " << to_string(a.method) << "\n";
  auto atom = [&out](const std::string& label, Bits value) {
    out << label << std::string(label.size() < 12 ? 12 - label.size() : 1, ' ') << format_bits(value) << "\n";
  };
  atom("Red", a.red);
  for (const auto& [pair, u] : a.un) atom("Un(" + pair.first() + "," + pair.second() + ")", u);
  atom("Syn", a.syn);
  for (const auto& [v, e] : a.ext) atom("Ext(" + v + ")", e);
  out << "residuals   joint " << format_bits(d.residuals.joint) << "  tc " << format_bits(d.residuals.tc)
      << "  coi " << format_bits(d.residuals.coi) << "\n";
  out << "symmetry    discrepancy " << format_bits(d.audit.discrepancy) << "\n";
  out << "formula     Syn " << format_bits(d.formula.value) << " (anchor " << d.formula.anchor << ", "
      << (d.formula_agrees ? "agrees" : "differs") << ")\n";
  for (const auto& pv : d.positivity) {
    out << "blocks      anchor " << pv.anchor << ": syn " << (pv.syn_positive ? "yes" : "no");
    for (const auto& [pair, positive] : pv.un_positive) out << ", un " << pair.key() << " " << (positive ? "yes" : "no");
    out << "\n";
  }
  for (const auto& v : a.violations) out << "violation   " << v << "\n";
  for (const auto& n : d.notes) out << "note        " << n << "\n";
  return out.str();
}

std::string block_report_text(const BlockReport& report) {
  std::ostringstream out;
  out << "anchor " << report.anchor << "=" << report.value << "\n";
  out << "S(" << report.others[0] << ") = {";
  for (std::size_t i = 0; i < report.supports[0].size(); ++i) out << (i ? "," : "") << report.supports[0][i];
  out << "}  S(" << report.others[1] << ") = {";
  for (std::size_t i = 0; i < report.supports[1].size(); ++i) out << (i ? "," : "") << report.supports[1][i];
  out << "}\n";
  for (const auto& row : report.rows) {
    for (const auto& s : row.outcome) out << s << "  ";
    char p[32];
    std::snprintf(p, sizeof p, "%.6f", row.p);
    out << p << "  " << tag_label(row) << "\n";
  }
  return out.str();
}

std::string venn_svg(const AtomSet& atoms) {
  const auto& n = atoms.variables;
  struct Circle {
    double x, y;
    const char* fill;
  };
  const double r = 120.0;
  const Circle c[3] = {{230, 190, "#e4572e"}, {350, 190, "#29335c"}, {290, 294, "#f3a712"}};

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"580\" height=\"500\" viewBox=\"0 0 580 500\" "
       "font-family=\"Helvetica, Arial, sans-serif\">\n";
  s << "  <!-- Region areas are schematic, not proportional to information. Syn is shared by all "
       "three variables and is shown once per circle; it enters the joint entropy twice, which a Venn "
       "diagram cannot express. -->\n";
  s << "  <rect width=\"580\" height=\"500\" fill=\"white\"/>\n";
  for (int i = 0; i < 3; ++i)
    s << "  <circle cx=\"" << c[i].x << "\" cy=\"" << c[i].y << "\" r=\"" << r << "\" fill=\"" << c[i].fill
      << "\" fill-opacity=\"0.18\" stroke=\"" << c[i].fill << "\" stroke-width=\"2\"/>\n";

  auto text = [&](double x, double y, const std::string& label, int size = 13) {
    s << "  <text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
      << "\" text-anchor=\"middle\">" << label << "</text>\n";
  };
  auto value = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", clamp_dust(v) == 0.0 ? 0.0 : v);
    return std::string(buf);
  };

  text(c[0].x - 95, c[0].y - 105, n[0], 16);
  text(c[1].x + 95, c[1].y - 105, n[1], 16);
  text(c[2].x, c[2].y + 140, n[2], 16);

  text(290, 230, "Red " + value(atoms.red));
  text(290, 150, "Un " + value(atoms.unique(n[0], n[1])));
  text(225, 268, "Un " + value(atoms.unique(n[0], n[2])));
  text(355, 268, "Un " + value(atoms.unique(n[1], n[2])));

  text(178, 168, "Syn " + value(atoms.syn));
  text(402, 168, "Syn " + value(atoms.syn));
  text(290, 352, "Syn " + value(atoms.syn));
  text(160, 208, "Ext " + value(atoms.external(n[0])));
  text(420, 208, "Ext " + value(atoms.external(n[1])));
  text(290, 382, "Ext " + value(atoms.external(n[2])));

  s << "  <text x=\"290\" y=\"470\" font-size=\"11\" text-anchor=\"middle\" fill=\"#555\">method: "
    << to_string(atoms.method) << " (bits)</text>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace sid
