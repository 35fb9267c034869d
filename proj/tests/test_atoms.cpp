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

TEST_CASE("atoms_from_redundancy on the published cases") {
  SUBCASE("case 2, red 1") {
    const auto a = atoms_from_redundancy(generate_case(2), 1.0);
    CHECK(near(a.unique("X1", "X2"), 1.0));
    CHECK(near(a.unique("X1", "X4"), 1.0));
    CHECK(near(a.unique("X2", "X4"), 1.0));
    CHECK(near(a.syn, 1.0));
    for (const auto& v : {"X1", "X2", "X4"}) CHECK(near(a.external(v), 0.0));
    CHECK(a.violations.empty());
    CHECK(a.method == Method::Supplied);
  }
  SUBCASE("case 3, red 2") {
    const auto a = atoms_from_redundancy(generate_case(3), 2.0);
    for (const auto& [pair, u] : a.un) CHECK(near(u, 0.0));
    CHECK(near(a.syn, 2.0));
  }
  SUBCASE("independent bits, red 0") {
    const auto a = atoms_from_redundancy(fixture("independent_bits"), 0.0);
    for (const auto& [pair, u] : a.un) CHECK(near(u, 0.0));
    CHECK(near(a.syn, 0.0));
    for (const auto& [v, e] : a.ext) CHECK(near(e, 1.0));
  }
}

TEST_CASE("atoms_from_redundancy errors and flags") {
  try {
    atoms_from_redundancy(appendix_table(), 0.0);
    FAIL("expected NotThreeVariables");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotThreeVariables);
  }
  for (double red : {2.5, -0.1}) {
    try {
      atoms_from_redundancy(generate_case(3), red);
      FAIL("expected RedundancyOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::RedundancyOutOfRange);
    }
  }
  // Copy triple has CoI = 1, so Red = 0 drives Syn = Red - CoI to -1.
  const auto a = atoms_from_redundancy(fixture("copy_triple"), 0.0);
  CHECK(near(a.syn, -1.0));
  REQUIRE(a.violations.size() == 1);
  CHECK(a.violations[0] == "Syn=-1.000000000");
}

TEST_CASE("unique atoms are keyed by unordered pairs") {
  const auto a = atoms_from_redundancy(generate_case(1), 0.0);
  CHECK(a.unique("X2", "X1") == a.unique("X1", "X2"));
  CHECK(a.un.size() == 3);
  CHECK(VariablePair("X3", "X1").key() == "X1|X3");
}

TEST_CASE("decomposition identities") {
  SUBCASE("case 1") {
    const auto t = generate_case(1);
    const auto a = atoms_from_redundancy(t, 0.0);
    CHECK(near(a.unique("X1", "X3"), 2.0));
    CHECK(std::abs(check_joint_entropy_decomposition(t, a)) <= kTol);
    CHECK(std::abs(check_total_correlation_decomposition(t, a)) <= kTol);
  }
  SUBCASE("case 3") {
    const auto t = generate_case(3);
    const auto a = atoms_from_redundancy(t, 2.0);
    CHECK(std::abs(check_joint_entropy_decomposition(t, a)) <= kTol);
    CHECK(std::abs(check_total_correlation_decomposition(t, a)) <= kTol);
  }
  SUBCASE("co-information") {
    const auto c2 = generate_case(2);
    CHECK(std::abs(check_co_information(c2, atoms_from_redundancy(c2, 1.0))) <= kTol);
    const auto x = fixture("xor_triple");
    const auto ax = atoms_from_redundancy(x, 0.0);
    CHECK(near(ax.red - ax.syn, -1.0));
    CHECK(std::abs(check_co_information(x, ax)) <= kTol);
    const auto c = fixture("copy_triple");
    const auto ac = atoms_from_redundancy(c, 1.0);
    CHECK(near(ac.red - ac.syn, 1.0));
    CHECK(std::abs(check_co_information(c, ac)) <= kTol);
    const auto ind = fixture("independent_bits");
    CHECK(std::abs(check_total_correlation_decomposition(ind, atoms_from_redundancy(ind, 0.0))) <= kTol);
  }
  SUBCASE("re-deriving from a shifted red keeps every identity") {
    const auto t = generate_case(1);
    const auto a = atoms_from_redundancy(t, 0.5);
    CHECK(near(a.unique("X1", "X2"), 1.5));
    CHECK(near(a.syn, 0.5));
    CHECK(residuals(t, a).max_abs() <= kTol);
  }
  SUBCASE("shifting only the stored red shows up in the residuals") {
    // Expanding the identities: joint and coi carry Red once, tc twice.
    const auto t = generate_case(1);
    auto a = atoms_from_redundancy(t, 0.0);
    a.red += 0.5;
    const auto r = residuals(t, a);
    CHECK(near(r.joint, -0.5));
    CHECK(near(r.tc, -1.0));
    CHECK(near(r.coi, -0.5));
  }
}

TEST_CASE("audit_symmetry") {
  const auto a2 = audit_symmetry(generate_case(2), redundancy);
  for (auto r : a2.red_by_target) CHECK(near(r, 1.0));
  CHECK(a2.discrepancy <= kTol);
  for (auto s : a2.syn_by_permutation) CHECK(near(s, 1.0));

  const auto a4 = audit_symmetry(generate_case(4), redundancy);
  for (auto r : a4.red_by_target) CHECK(near(r, 2.0));
  CHECK(a4.discrepancy <= kTol);

  std::mt19937 rng(3);
  const RedundancySolver constant = [](const JointTable&, std::string_view, const VarSet&) { return 0.0; };
  for (int i = 0; i < 20; ++i) {
    const auto audit = audit_symmetry(oracle::random_dyadic_table(rng), constant);
    CHECK(audit.red_discrepancy == 0.0);
    CHECK(audit.syn_discrepancy <= kTol);
  }
}

TEST_CASE("property: six synergy evaluations agree and identities close") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_dyadic_table(rng);
    double min_mi = 1e300;
    for (auto [x, y] : {std::pair{"X1", "X2"}, {"X1", "X3"}, {"X2", "X3"}})
      min_mi = std::min(min_mi, mutual_information(t, {x}, {y}));
    const double red = std::max(0.0, min_mi) * unit(rng);
    const auto a = atoms_from_redundancy(t, red);
    CHECK(residuals(t, a).max_abs() <= kTol);
    for (const auto& [pair, u] : a.un) CHECK(u >= -kTol);
  }
}
