#include "sid/direct.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace sid {

std::optional<AtomSet> try_direct(const JointTable& table, double tol) {
  require_three(table);
  const auto& v = table.variables();

  struct Candidate {
    Bits red;
    std::string rule;
  };
  std::vector<Candidate> fired;

  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(mutual_information(table, {v[i].name}, {v[j].name})) <= tol)
        fired.push_back({0.0, "I(" + v[i].name + ";" + v[j].name + ")=0"});

  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      if (std::abs(conditional_entropy(table, {v[i].name}, {v[j].name})) > tol) continue;
      const std::size_t k = 3 - i - j;
      fired.push_back({mutual_information(table, {v[k].name}, {v[i].name}),
                       "H(" + v[i].name + "|" + v[j].name + ")=0"});
    }

  if (fired.empty()) return std::nullopt;
  for (const auto& c : fired)
    if (std::abs(c.red - fired.front().red) > tol) {
      char buf[256];
      std::snprintf(buf, sizeof buf, "%s gives Red=%.12g but %s gives Red=%.12g",
                    fired.front().rule.c_str(), fired.front().red, c.rule.c_str(), c.red);
      throw Error(Errc::InconsistentZeros, buf);
    }
  return atoms_from_redundancy(table, fired.front().red, Method::Direct, tol);
}

}  // namespace sid
