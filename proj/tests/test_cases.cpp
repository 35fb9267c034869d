#include <doctest.h>

#include "sid/cases.hpp"
#include "sid/oracle.hpp"
#include "support/oracles.hpp"

using namespace sid;

namespace {
constexpr double kTol = 1e-9;
}

TEST_CASE("generate_case matches an independent rebuild row for row") {
  for (int n = 1; n <= 4; ++n) {
    const auto t = generate_case(n);
    CHECK(t.support_size() == 64);
    const auto rows = oracle::case_rows(n);
    for (const auto& [r, p] : rows) CHECK(t.probability(r) == p);

    CHECK(std::abs(entropy(t, {t.names()[0]}) - 4.0) <= kTol);
    CHECK(std::abs(entropy(t, t.names()) - 6.0) <= kTol);
  }
}

TEST_CASE("cases share the X1, X2 columns of the appendix table") {
  const auto all = appendix_table();
  for (int n = 1; n <= 4; ++n) {
    const auto third = "X" + std::to_string(n + 2);
    const auto m = marginalize(all, {"X1", "X2", third});
    const auto t = generate_case(n);
    REQUIRE(m.support_size() == t.support_size());
    for (const auto& cell : t.cells()) CHECK(m.probability(t.decode(cell.code)) == cell.p);
  }
}

TEST_CASE("splice order follows the construction") {
  // abcdef = 101101: g = c^e = 1, h = d^f = 0.
  const auto s = enumerate(case_spec(3));
  const auto& row = s.rows[0b101101];
  CHECK(row == Outcome{"1011", "1001", "1010"});
  CHECK(s.variables == std::vector<std::string>{"X1", "X2", "X5"});
}

TEST_CASE("invalid case numbers") {
  for (int n : {0, 5, -1}) {
    try {
      generate_case(n);
      FAIL("expected InvalidCaseNumber");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidCaseNumber);
    }
    CHECK_THROWS_AS(golden_atoms(n), Error);
  }
}

TEST_CASE("golden atoms") {
  const auto g2 = golden_atoms(2);
  CHECK(g2.red == 1.0);
  CHECK(g2.syn == 1.0);
  for (const auto& [p, u] : g2.un) CHECK(u == 1.0);
  for (const auto& [v, e] : g2.ext) CHECK(e == 0.0);
  CHECK(g2.variables[2] == "X4");

  const auto g4 = golden_atoms(4);
  CHECK(g4.red == 2.0);
  CHECK(g4.syn == 2.0);
  for (const auto& [p, u] : g4.un) CHECK(u == 0.0);

  const auto g1 = golden_atoms(1);
  CHECK(g1.red == 0.0);
  CHECK(g1.syn == 0.0);
  for (const auto& [p, u] : g1.un) CHECK(u == 2.0);
}

TEST_CASE("fixtures carry their known atoms") {
  for (const auto& name : fixture_names()) {
    const auto expected = fixture_atoms(name);
    const auto got = solve_atoms_oracle(fixture(name));
    CAPTURE(name);
    CHECK(std::abs(got.red - expected.red) <= kTol);
    CHECK(std::abs(got.syn - expected.syn) <= kTol);
    for (const auto& [p, u] : expected.un) CHECK(std::abs(got.un.at(p) - u) <= kTol);
    for (const auto& [v, e] : expected.ext) CHECK(std::abs(got.ext.at(v) - e) <= kTol);
  }
  try {
    fixture("nope");
    FAIL("expected UnknownFixture");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownFixture);
  }
}

TEST_CASE("XOR bits carry the expected information") {
  // Brute force over c, e and g = c^e.
  const auto t = from_pmf({{{"0", "0", "0"}, 0.25}, {{"0", "1", "1"}, 0.25},
                           {{"1", "0", "1"}, 0.25}, {{"1", "1", "0"}, 0.25}},
                          {{"c", "e", "g"}, {}, false});
  CHECK(std::abs(mutual_information(t, {"g"}, {"c"})) <= kTol);
  CHECK(std::abs(mutual_information(t, {"g"}, {"c", "e"}) - 1.0) <= kTol);

  // In the six-bit construction g is independent of every single micro bit.
  const auto micro = micro_table();
  const auto with_g = with_derived(micro, "g", [](const Outcome& o) {
    return std::to_string((o[2][0] - '0') ^ (o[4][0] - '0'));
  });
  for (const auto& b : micro.names()) CHECK(std::abs(mutual_information(with_g, {"g"}, {b})) <= kTol);
  CHECK(std::abs(mutual_information(with_g, {"g"}, {"c", "e"}) - 1.0) <= kTol);
}
