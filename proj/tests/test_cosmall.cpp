#include <doctest.h>

#include <algorithm>

#include "curvenbhd/cosmall.hpp"
#include "curvenbhd/degrees.hpp"
#include "curvenbhd/table.hpp"
#include "curvenbhd/verify.hpp"
#include "support/ambient_oracle.hpp"

using namespace curvenbhd;

namespace {

Root R(std::initializer_list<int> c) { return Root{Coeffs(c)}; }

std::vector<Root> rows(const std::vector<TableEntry>& entries) {
  std::vector<Root> out;
  for (const auto& e : entries) out.push_back(e.root);
  return out;
}

}  // namespace

TEST_CASE("cosmall: examples") {
  const RootSystem b2(DynkinType(Family::B, 2));
  CHECK(is_cosmall(b2, R({1, 2})).holds);
  const auto v = is_cosmall(b2, R({1, 1}));
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK(*v.witness == R({1, 2}));
  CHECK(is_cosmall(RootSystem(DynkinType(Family::C, 3)), R({2, 2, 1})).holds);
  CHECK_THROWS_AS(is_cosmall(b2, R({-1, 0})), DomainError);
}

TEST_CASE("simple, long and simply-laced roots are cosmall") {
  for (const auto& t : types_in_range(1, 6, true)) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    for (int i = 1; i <= rs.rank(); ++i) CHECK(is_cosmall(rs, rs.simple_root(i)).holds);
    for (const Root& a : rs.positive_roots())
      if (t.simply_laced() || rs.is_long(a)) CHECK(is_cosmall(rs, a).holds);
  }
}

TEST_CASE("cosmall and Delta agree with the e-coordinate model") {
  for (const auto& t : types_in_range(1, 6, false)) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    const oracle::Classical ref(t);
    for (const Root& a : rs.positive_roots()) {
      CAPTURE(a.coeffs);
      const auto v = is_cosmall(rs, a);
      CHECK(v.holds == ref.cosmall(a.coeffs));
      if (v.witness) {
        CHECK(root_leq(a, *v.witness));
        CHECK(*v.witness != a);
        CHECK(degree_leq(project_root(rs, *v.witness, {}), project_root(rs, a, {})));
      }
    }
  }
}

TEST_CASE("short cosmall roots in B and C") {
  for (int l = 2; l <= 6; ++l) {
    const RootSystem b(DynkinType(Family::B, l));
    const oracle::Classical bref(b.dynkin());
    for (const Root& a : b.positive_roots()) {
      if (!b.is_short(a)) continue;
      const auto e = bref.from_simple(a.coeffs);
      CHECK(is_cosmall(b, a).holds == (e[l - 1] == 1));  // only e_l
    }
    const RootSystem c(DynkinType(Family::C, l));
    const oracle::Classical cref(c.dynkin());
    for (const Root& a : c.positive_roots()) {
      if (!c.is_short(a)) continue;
      const auto e = cref.from_simple(a.coeffs);
      const bool difference = std::ranges::count(e, -1) == 1;  // e_i - e_j
      CHECK(is_cosmall(c, a).holds == difference);
    }
  }
}

TEST_CASE("P-cosmall: examples") {
  const RootSystem b2(DynkinType(Family::B, 2));
  CHECK(is_P_cosmall(b2, R({1, 2}), {1}).holds);
  const auto v = is_P_cosmall_definitional(b2, R({0, 1}), {1});
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  CHECK_FALSE(is_P_cosmall_criterion(b2, R({0, 1}), {1}));
  CHECK_FALSE(is_P_cosmall(b2, R({0, 1}), {1}).holds);
  CHECK(is_P_cosmall(b2, R({0, 1}), {}).holds);
}

TEST_CASE("P-cosmall: preconditions") {
  const RootSystem b2(DynkinType(Family::B, 2));
  CHECK_THROWS_AS(is_P_cosmall_criterion(b2, R({1, 1}), {}), DomainError);
  CHECK_THROWS_AS(is_P_cosmall_criterion(b2, R({1, 0}), {1}), DomainError);
  CHECK_THROWS_AS(is_P_cosmall_definitional(b2, R({1, 0}), {1}), DomainError);
  const auto report = cosmall_report(b2, R({1, 0}), {1});
  CHECK_FALSE(report.is_P_cosmall.has_value());
  CHECK(report.is_cosmall);
}

TEST_CASE("P-cosmall with empty P is cosmall; the highest root is always P-cosmall") {
  for (const auto& t : types_in_range(2, 5, true)) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    for (const Root& a : rs.positive_roots())
      CHECK(is_P_cosmall_definitional(rs, a, {}).holds == is_cosmall(rs, a).holds);
    for (std::uint32_t m = 0; m + 1 < (1u << rs.rank()); ++m)
      CHECK(is_P_cosmall_definitional(rs, rs.highest_root(), ParabolicSubset::from_mask(m)).holds);
  }
}

TEST_CASE("criterion agrees with the definition for cosmall roots") {
  for (const auto& t : types_in_range(2, 4, true)) {
    CAPTURE(t.name());
    const auto r = check_cosmall_criterion(RootSystem(t));
    CHECK(r.passed());
    for (const auto& f : r.failures) MESSAGE(f);
  }
}

TEST_CASE("Delta of a short cosmall root avoids roots below it") {
  for (const auto& t : types_in_range(2, 7, true)) {
    CAPTURE(t.name());
    CHECK_FALSE(find_short_cosmall_violation(RootSystem(t)).has_value());
  }
}

TEST_CASE("tables: structure and self-consistency") {
  for (const auto& t : types_in_range(1, 6, false)) {
    CAPTURE(t.name());
    const auto r = check_table_consistency(t);
    CHECK(r.passed());
    for (const auto& f : r.failures) MESSAGE(f);

    const RootSystem rs(t);
    const auto table = emit_table(t);
    CHECK(table.simple.size() == static_cast<std::size_t>(t.rank));
    CHECK(table.long_roots.empty() == !rs.two_lengths());
    std::vector<Root> expected;
    for (const Root& a : rs.positive_roots())
      if (is_cosmall(rs, a).holds) expected.push_back(a);
    auto got = rows(table.cosmall);
    std::ranges::sort(got);
    CHECK(got == expected);
  }
  CHECK_THROWS_AS(emit_table(DynkinType(Family::F, 4)), InputError);
  CHECK_THROWS_AS(emit_table(DynkinType(Family::G, 2)), InputError);
}

TEST_CASE("tables: rendered rows") {
  const auto text = render_text(emit_table(DynkinType(Family::B, 3)));
  CHECK(text.starts_with("Type B3 (l = 3, simple roots b1..b3)\n"));
  CHECK(text.find("  e3       = b3          Delta = {b2}\n") != std::string::npos);
  CHECK(text.find("  e1+e2    = b1+2b2+2b3  Delta = {}\n") != std::string::npos);
  CHECK(text.find("  e1       = b1+b2+b3\n") != std::string::npos);
  CHECK(text.find(" \n") == std::string::npos);
}

TEST_CASE("type D: Delta computed from root addition") {
  // Adding b4 = e3+e4 to e3-e4 gives no root, while e1-e3 + b4 = e1+e4 does.
  const RootSystem d4(DynkinType(Family::D, 4));
  CHECK(delta_set(d4, R({0, 0, 0, 1})) == std::vector<int>{2});
  CHECK(delta_set(d4, R({0, 1, 0, 0})) == std::vector<int>{1, 3, 4});
  CHECK(delta_set(d4, R({1, 1, 0, 0})) == std::vector<int>{3, 4});
  CHECK(delta_set(d4, R({1, 1, 1, 0})) == std::vector<int>{4});

  const RootSystem d5(DynkinType(Family::D, 5));
  CHECK(delta_set(d5, R({0, 0, 0, 0, 1})) == std::vector<int>{3});
  CHECK(delta_set(d5, R({0, 0, 1, 0, 0})) == std::vector<int>{2, 4, 5});
  CHECK(delta_set(d5, R({1, 1, 1, 0, 0})) == std::vector<int>{4, 5});
}
