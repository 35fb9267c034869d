#pragma once

// Distribution (JSON) and sample (CSV) formats.
//
//   {"variables":[{"name":"X1","alphabet":["0","1"]}, ...],
//    "pmf":[{"outcome":["0","1"],"p":0.25}, ...]}
//
// CSV: header row of variable names, one observation per row, symbols taken
// verbatim. Malformed input raises ParseError.

#include <string>
#include <string_view>

#include "sid/table.hpp"

namespace sid {

JointTable parse_distribution_json(std::string_view text, bool normalize = false);
std::string write_distribution_json(const JointTable& table);

SampleSet parse_samples_csv(std::string_view text);
std::string write_samples_csv(const SampleSet& samples);

/// JSON when the first non-blank character is '{', CSV otherwise.
JointTable parse_input(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sid
