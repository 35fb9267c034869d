#include <doctest.h>

#include <algorithm>
#include <random>

#include "sid/cases.hpp"
#include "sid/shannon.hpp"
#include "support/oracles.hpp"

using namespace sid;

namespace {
constexpr double kTol = 1e-9;

std::string third_of(int n) { return "X" + std::to_string(n + 2); }
}  // namespace

TEST_CASE("entropy") {
  const auto c1 = generate_case(1);
  CHECK(std::abs(entropy(c1, {"X1"}) - 4.0) <= kTol);
  for (int n = 1; n <= 4; ++n)
    CHECK(std::abs(entropy(generate_case(n), {"X1", "X2", third_of(n)}) - 6.0) <= kTol);
  CHECK(entropy(from_pmf({{{"a", "b"}, 1.0}}), {"X1", "X2"}) == 0.0);
  CHECK_THROWS_AS(entropy(c1, {"X4"}), Error);
}

TEST_CASE("conditional_entropy") {
  const auto c1 = generate_case(1);
  CHECK(std::abs(conditional_entropy(c1, {"X1"}, {"X2"}) - 2.0) <= kTol);

  // a, b are read off X2 and c, d off X3.
  const auto rows = oracle::case_rows(1);
  const double brute = oracle::entropy(rows, {0, 1, 2}) - oracle::entropy(rows, {1, 2});
  CHECK(std::abs(brute) <= kTol);
  CHECK(std::abs(conditional_entropy(c1, {"X1"}, {"X2", "X3"})) <= kTol);

  CHECK(conditional_entropy(c1, {"X3"}, {"X3"}) == 0.0);
}

TEST_CASE("mutual_information") {
  const auto c1 = generate_case(1);
  CHECK(std::abs(mutual_information(c1, {"X1"}, {"X2"}) - 2.0) <= kTol);
  CHECK(std::abs(mutual_information(fixture("independent_bits"), {"X1"}, {"X3"})) <= kTol);

  const auto rows = oracle::case_rows(1);
  CHECK(std::abs(oracle::mi(rows, {0}, {1, 2}) - 4.0) <= kTol);
  CHECK(std::abs(mutual_information(c1, {"X1"}, {"X2", "X3"}) - 4.0) <= kTol);

  CHECK_THROWS_AS(mutual_information(c1, {"X1", "X2"}, {"X2"}), Error);
}

TEST_CASE("conditional_mutual_information") {
  const auto c3 = generate_case(3);
  const auto rows = oracle::case_rows(3);
  // I(X1;X2|X5) = H(X1|X5) - H(X1|X2,X5)
  const double brute = (oracle::entropy(rows, {0, 2}) - oracle::entropy(rows, {2})) -
                       (oracle::entropy(rows, {0, 1, 2}) - oracle::entropy(rows, {1, 2}));
  CHECK(std::abs(brute - 2.0) <= kTol);
  CHECK(std::abs(conditional_mutual_information(c3, {"X1"}, {"X2"}, {"X5"}) - 2.0) <= kTol);

  CHECK(std::abs(conditional_mutual_information(fixture("independent_bits"), {"X1"}, {"X2"}, {"X3"})) <= kTol);

  // c, e, g = c^e over four outcomes.
  const auto x = from_pmf({{{"0", "0", "0"}, 0.25}, {{"0", "1", "1"}, 0.25},
                           {{"1", "0", "1"}, 0.25}, {{"1", "1", "0"}, 0.25}},
                          {{"c", "e", "g"}, {}, false});
  CHECK(std::abs(conditional_mutual_information(x, {"c"}, {"e"}, {"g"}) - 1.0) <= kTol);

  try {
    conditional_mutual_information(c3, {"X1"}, {"X2"}, {"X1"});
    FAIL("expected OverlappingSets");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OverlappingSets);
  }
}

TEST_CASE("external_information") {
  for (int n = 1; n <= 4; ++n) {
    const auto t = generate_case(n);
    for (const auto& v : t.names()) CHECK(std::abs(external_information(t, v)) <= kTol);
  }
  const auto ind = fixture("independent_bits");
  for (const auto& v : ind.names()) CHECK(std::abs(external_information(ind, v) - 1.0) <= kTol);
  CHECK(std::abs(external_information(fixture("copy_triple"), "X2")) <= kTol);
}

TEST_CASE("total_correlation") {
  CHECK(std::abs(total_correlation(generate_case(3), {"X1", "X2", "X5"}) - 6.0) <= kTol);
  CHECK(std::abs(total_correlation(fixture("independent_bits"), {"X1", "X2", "X3"})) <= kTol);
  const auto rows = oracle::case_rows(1);
  const double brute = oracle::entropy(rows, {0}) + oracle::entropy(rows, {1}) + oracle::entropy(rows, {2}) -
                       oracle::entropy(rows, {0, 1, 2});
  CHECK(std::abs(brute - 6.0) <= kTol);
  CHECK(std::abs(total_correlation(generate_case(1), {"X1", "X2", "X3"}) - 6.0) <= kTol);
}

TEST_CASE("co_information") {
  CHECK(std::abs(co_information(generate_case(3), "X1", "X2", "X5")) <= kTol);
  CHECK(std::abs(co_information(fixture("xor_triple"), "X1", "X2", "X3") + 1.0) <= kTol);
  CHECK(std::abs(co_information(fixture("independent_bits"), "X1", "X2", "X3")) <= kTol);
  CHECK_THROWS_AS(co_information(generate_case(3), "X1", "X1", "X5"), Error);
}

TEST_CASE("property: Shannon identities on random tables") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = oracle::random_dyadic_table(rng);
    const VarSet a{"X1"}, b{"X2", "X3"};

    CHECK(mutual_information(t, a, b) == mutual_information(t, b, a));
    CHECK(std::abs(entropy(t, {"X1", "X2", "X3"}) - (entropy(t, a) + conditional_entropy(t, b, a))) <= kTol);

    const double i12 = mutual_information(t, {"X1"}, {"X2"});
    CHECK(i12 >= -kTol);
    CHECK(i12 <= std::min(entropy(t, {"X1"}), entropy(t, {"X2"})) + kTol);

    const double g = entropy(group(t, {{"U", {"X1", "X2"}}, {"V", {"X3"}}}), {"U"});
    CHECK(g + kTol >= entropy(t, {"X1"}));
    CHECK(g + kTol >= entropy(t, {"X2"}));

    std::array<std::string, 3> p{"X1", "X2", "X3"};
    const double base = co_information(t, p[0], p[1], p[2]);
    do {
      CHECK(co_information(t, p[0], p[1], p[2]) == base);
    } while (std::next_permutation(p.begin(), p.end()));

    // Independent brute-force entropy.
    const auto rows = oracle::rows_of(t);
    CHECK(std::abs(entropy(t, {"X1", "X3"}) - oracle::entropy(rows, {0, 2})) <= kTol);
  }
}
