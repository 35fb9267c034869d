#include <doctest.h>

#include "sid/cases.hpp"
#include "sid/direct.hpp"
#include "sid/oracle.hpp"

using namespace sid;

namespace {
constexpr double kTol = 1e-9;
bool near(double a, double b) { return std::abs(a - b) <= kTol; }
}  // namespace

TEST_CASE("try_direct on XOR") {
  const auto a = try_direct(fixture("xor_triple"));
  REQUIRE(a.has_value());
  CHECK(a->method == Method::Direct);
  CHECK(near(a->red, 0.0));
  for (const auto& [p, u] : a->un) CHECK(near(u, 0.0));
  CHECK(near(a->syn, 1.0));
  for (const auto& [v, e] : a->ext) CHECK(near(e, 0.0));
  CHECK(a->violations.empty());
}

TEST_CASE("try_direct with a deterministic pair") {
  // X1 uniform on two bits, X2 its first bit, X3 an independent bit.
  std::vector<std::pair<Outcome, double>> e;
  for (int v = 0; v < 8; ++v) {
    const int hi = v >> 2 & 1, lo = v >> 1 & 1, c = v & 1;
    e.push_back({{std::to_string(hi) + std::to_string(lo), std::to_string(hi), std::to_string(c)}, 0.125});
  }
  const auto t = from_pmf(e);
  const auto a = try_direct(t);
  REQUIRE(a.has_value());
  CHECK(near(a->syn, 0.0));
  CHECK(near(a->red, 0.0));
  CHECK(near(a->unique("X2", "X3"), 0.0));
  CHECK(near(a->unique("X1", "X2"), 1.0));
  CHECK(near(a->unique("X1", "X3"), 0.0));
  CHECK(near(a->external("X1"), 1.0));
  CHECK(near(a->external("X2"), 0.0));
  CHECK(near(a->external("X3"), 1.0));
  CHECK(residuals(t, *a).max_abs() <= kTol);
}

TEST_CASE("try_direct is not applicable to case 3") {
  CHECK_FALSE(try_direct(generate_case(3)).has_value());
  CHECK_THROWS_AS(try_direct(appendix_table()), Error);
}

TEST_CASE("try_direct closes via the conditional-entropy rule alone") {
  // X2 = X1 (one bit), X3 a noisy copy: no pairwise MI vanishes, H(X1|X2) = 0.
  const auto t = from_pmf({{{"0", "0", "0"}, 0.375}, {{"0", "0", "1"}, 0.125},
                           {{"1", "1", "1"}, 0.375}, {{"1", "1", "0"}, 0.125}});
  const auto a = try_direct(t);
  REQUIRE(a.has_value());
  CHECK(near(a->syn, 0.0));
  CHECK(near(a->red, mutual_information(t, {"X3"}, {"X1"})));
  CHECK(near(a->unique("X1", "X3"), 0.0));
  CHECK(a->violations.empty());
  CHECK(residuals(t, *a).max_abs() <= kTol);

  // Only the X3-target oracle redundancy matches: the noisy copy has full
  // support against X1, so the other common parts are constant.
  CHECK(near(redundancy(t, "X3", {"X1", "X2"}), a->red));
}

TEST_CASE("fixtures agree with the oracle where both apply") {
  for (const auto& name : {"xor_triple", "partial_copy", "copy_triple", "independent_bits"}) {
    const auto t = fixture(name);
    const auto d = try_direct(t);
    REQUIRE(d.has_value());
    const auto o = solve_atoms_oracle(t);
    CHECK(near(d->red, o.red));
    CHECK(near(d->syn, o.syn));
    for (const auto& [p, u] : d->un) CHECK(near(u, o.un.at(p)));
  }
}
