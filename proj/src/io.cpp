#include "sid/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sid {

using nlohmann::json;

namespace {

Symbol symbol_from(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  throw Error(Errc::ParseError, "symbols must be strings or integers, got " + j.dump());
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw Error(Errc::ParseError, "unterminated quote in CSV line");
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

JointTable parse_distribution_json(std::string_view text, bool normalize) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("pmf") || !doc["pmf"].is_array())
      throw Error(Errc::ParseError, "expected an object with a \"pmf\" array");

    PmfOptions opts;
    opts.normalize = normalize || doc.value("normalize", false);
    if (doc.contains("variables")) {
      bool any_alphabet = false;
      for (const auto& v : doc.at("variables")) {
        if (!v.is_object() || !v.contains("name"))
          throw Error(Errc::ParseError, "each variable needs a \"name\"");
        opts.names.push_back(v.at("name").get<std::string>());
        std::vector<Symbol> alphabet;
        if (v.contains("alphabet")) {
          any_alphabet = true;
          for (const auto& s : v.at("alphabet")) alphabet.push_back(symbol_from(s));
        }
        opts.alphabets.push_back(std::move(alphabet));
      }
      if (!any_alphabet) {
        opts.alphabets.clear();
      } else {
        for (const auto& a : opts.alphabets)
          if (a.empty())
            throw Error(Errc::ParseError, "alphabets must be given for all variables or none");
      }
    }

    std::vector<std::pair<Outcome, double>> entries;
    for (const auto& e : doc.at("pmf")) {
      if (!e.is_object() || !e.contains("outcome") || !e.contains("p"))
        throw Error(Errc::ParseError, "pmf entries need \"outcome\" and \"p\"");
      Outcome o;
      for (const auto& s : e.at("outcome")) o.push_back(symbol_from(s));
      if (!e.at("p").is_number()) throw Error(Errc::ParseError, "\"p\" must be a number");
      entries.emplace_back(std::move(o), e.at("p").get<double>());
    }
    if (entries.empty()) throw Error(Errc::ParseError, "empty pmf");
    return from_pmf(entries, opts);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string write_distribution_json(const JointTable& table) {
  json doc;
  doc["variables"] = json::array();
  for (const auto& v : table.variables())
    doc["variables"].push_back({{"name", v.name}, {"alphabet", v.alphabet}});
  doc["pmf"] = json::array();
  for (const auto& cell : table.cells())
    doc["pmf"].push_back({{"outcome", table.decode(cell.code)}, {"p", cell.p}});
  return doc.dump() + "\n";
}

SampleSet parse_samples_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  SampleSet samples;
  bool header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (header) {
      for (auto& f : fields) {
        f = trim(f);
        if (f.empty()) throw Error(Errc::ParseError, "empty column name in CSV header");
      }
      samples.variables = std::move(fields);
      header = false;
      continue;
    }
    if (fields.size() != samples.variables.size())
      throw Error(Errc::ParseError, "CSV line " + std::to_string(lineno) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(samples.variables.size()));
    samples.rows.push_back(std::move(fields));
  }
  if (header) throw Error(Errc::ParseError, "CSV input has no header row");
  return samples;
}

std::string write_samples_csv(const SampleSet& samples) {
  std::string out;
  for (std::size_t i = 0; i < samples.variables.size(); ++i)
    out += (i ? "," : "") + csv_field(samples.variables[i]);
  out += '\n';
  for (const auto& row : samples.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += '\n';
  }
  return out;
}

JointTable parse_input(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(Errc::ParseError, "empty input");
  if (text[first] == '{') return parse_distribution_json(text);
  return from_samples(parse_samples_csv(text));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(Errc::IoError, "write to '" + path + "' failed");
}

}  // namespace sid
