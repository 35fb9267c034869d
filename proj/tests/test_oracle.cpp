#include <doctest.h>

#include <random>

#include "sid/cases.hpp"
#include "sid/oracle.hpp"
#include "support/oracles.hpp"

using namespace sid;

namespace {
constexpr double kTol = 1e-9;
bool near(double a, double b) { return std::abs(a - b) <= kTol; }
}  // namespace

TEST_CASE("common_part") {
  SUBCASE("case 2, X1 and X2 share bits a and b") {
    const auto rows = oracle::case_rows(2);
    CHECK(oracle::component_count(rows, {0, 1}) == 4);

    const auto part = common_part(generate_case(2), {"X1", "X2"});
    CHECK(part.label_count == 4);
    // X1 values agreeing on (a, b) share a label, and X2 values follow suit.
    CHECK(part.label("X1", "0000") == part.label("X1", "0011"));
    CHECK(part.label("X1", "0000") != part.label("X1", "1000"));
    CHECK(part.label("X1", "0100") != part.label("X1", "0000"));
    CHECK(part.label("X1", "1011") == part.label("X2", "1001"));
  }
  SUBCASE("independent sources collapse to one component") {
    CHECK(common_part(fixture("independent_bits"), {"X1", "X2"}).label_count == 1);
  }
  SUBCASE("copies keep every value apart") {
    std::vector<std::pair<Outcome, double>> e;
    for (int k = 0; k < 5; ++k) e.push_back({{std::to_string(k), std::to_string(k)}, 0.2});
    CHECK(common_part(from_pmf(e), {"X1", "X2"}).label_count == 5);
  }
  CHECK_THROWS_AS(common_part(generate_case(1), {"X1", "Y"}), Error);
}

TEST_CASE("redundancy") {
  CHECK(near(redundancy(generate_case(2), "X4", {"X1", "X2"}), 1.0));
  CHECK(near(redundancy(generate_case(3), "X5", {"X1", "X2"}), 2.0));
  const auto c1 = generate_case(1);
  for (const auto& target : c1.names()) {
    VarSet sources;
    for (const auto& v : c1.names())
      if (v != target) sources.push_back(v);
    CHECK(near(redundancy(c1, target, sources), 0.0));
  }
  try {
    redundancy(c1, "X1", {"X1", "X2"});
    FAIL("expected TargetInSources");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TargetInSources);
  }
}

TEST_CASE("solve_atoms_oracle") {
  const auto a4 = solve_atoms_oracle(generate_case(4));
  CHECK(near(a4.red, 2.0));
  CHECK(near(a4.syn, 2.0));
  for (const auto& [p, u] : a4.un) CHECK(near(u, 0.0));
  for (const auto& [v, e] : a4.ext) CHECK(near(e, 0.0));
  CHECK(a4.method == Method::Oracle);

  const auto a1 = solve_atoms_oracle(generate_case(1));
  CHECK(near(a1.red, 0.0));
  CHECK(near(a1.syn, 0.0));
  for (const auto& [p, u] : a1.un) CHECK(near(u, 2.0));

  const auto ax = solve_atoms_oracle(fixture("xor_triple"));
  CHECK(near(ax.red, 0.0));
  CHECK(near(ax.syn, 1.0));
  for (const auto& [p, u] : ax.un) CHECK(near(u, 0.0));

  // X2 is a function of X1 and X3 a noisy copy of X2 with full support: the
  // common part of X1 and X3 is trivial, that of X1 and X2 is not.
  const auto skew = from_pmf({{{"00", "0", "0"}, 0.1875}, {{"00", "0", "1"}, 0.0625},
                              {{"01", "0", "0"}, 0.1875}, {{"01", "0", "1"}, 0.0625},
                              {{"10", "1", "1"}, 0.1875}, {{"10", "1", "0"}, 0.0625},
                              {{"11", "1", "1"}, 0.1875}, {{"11", "1", "0"}, 0.0625}});
  try {
    solve_atoms_oracle(skew);
    FAIL("expected SymmetryViolation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SymmetryViolation);
  }
}

TEST_CASE("property: axioms and bounds on random tables") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_dyadic_table(rng);
    for (const auto& target : t.names()) {
      VarSet sources;
      for (const auto& v : t.names())
        if (v != target) sources.push_back(v);
      // Self-redundancy.
      CHECK(redundancy(t, target, {sources[0]}) == mutual_information(t, {target}, {sources[0]}));
      // Source order does not matter.
      const double red = redundancy(t, target, sources);
      CHECK(redundancy(t, target, {sources[1], sources[0]}) == red);
      // Adding a source cannot raise redundancy; it is bounded by every MI.
      CHECK(red <= redundancy(t, target, {sources[0]}) + kTol);
      CHECK(red <= redundancy(t, target, {sources[1]}) + kTol);
      CHECK(red >= -kTol);

      const auto part = common_part(t, sources);
      CHECK(part.label_count == oracle::component_count(oracle::rows_of(t), t.indices_of(sources)));
    }
  }
}

TEST_CASE("property: relabeling symbols leaves redundancy unchanged") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = oracle::random_dyadic_table(rng);
    std::vector<std::pair<Outcome, double>> renamed;
    for (const auto& cell : t.cells()) {
      Outcome o = t.decode(cell.code);
      for (auto& s : o) s = "v" + std::to_string(9 - std::stoi(s));
      renamed.emplace_back(o, cell.p);
    }
    const auto r = from_pmf(renamed);
    for (const auto& target : t.names()) {
      VarSet sources;
      for (const auto& v : t.names())
        if (v != target) sources.push_back(v);
      CHECK(std::abs(redundancy(t, target, sources) - redundancy(r, target, sources)) <= kTol);
    }
  }
}

TEST_CASE("property: coarsening the common part never raises its information") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = oracle::random_dyadic_table(rng);
    const auto part = common_part(t, {"X1", "X2"});
    const double best = redundancy(t, "X3", {"X1", "X2"});
    std::uniform_int_distribution<std::size_t> pick(0, part.label_count > 1 ? part.label_count - 2 : 0);
    std::vector<std::size_t> merge(part.label_count);
    for (auto& m : merge) m = pick(rng);
    const auto coarse = with_derived(t, "Q", [&](const Outcome& o) {
      return std::to_string(merge[part.label("X1", o[0])]);
    });
    CHECK(mutual_information(coarse, {"Q"}, {"X3"}) <= best + kTol);
  }
}
