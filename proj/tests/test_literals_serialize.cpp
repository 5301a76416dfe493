#include <doctest.h>

#include <random>

#include "curvenbhd/literals.hpp"
#include "curvenbhd/serialize.hpp"
#include "curvenbhd/table.hpp"
#include "curvenbhd/verify.hpp"

using namespace curvenbhd;
using nlohmann::json;

namespace {

template <class T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("coefficient literals") {
  CHECK(parse_coeffs("1,2") == Coeffs{1, 2});
  CHECK(parse_coeffs(" 1 , +2,-3 ") == Coeffs{1, 2, -3});
  CHECK_THROWS_AS(parse_coeffs(""), InputError);
  CHECK_THROWS_AS(parse_coeffs("1,,2"), InputError);
  CHECK(error_of([] { parse_coeffs("1,x"); }).find("position 3") != std::string::npos);
  CHECK(error_of([] { parse_coeffs("1,2a", "root"); }).starts_with("root '1,2a'"));
  CHECK(error_of([] { parse_coeffs("1,2a"); }).find("position 4") != std::string::npos);
}

TEST_CASE("word and parabolic literals") {
  CHECK(parse_word("1 2  1") == Word{1, 2, 1});
  CHECK(parse_word("").empty());
  CHECK(error_of([] { parse_word("1 0"); }).find("position 3") != std::string::npos);
  CHECK(parse_parabolic("", 3).empty());
  CHECK(parse_parabolic("3,1", 3).members() == std::vector<int>{1, 3});
  CHECK(error_of([] { parse_parabolic("1,4", 3); }).find("outside 1..3") != std::string::npos);
}

TEST_CASE("formatters") {
  CHECK(format_coeffs({1, 0, 2}) == "1,0,2");
  CHECK(format_word({2, 1, 2}) == "2 1 2");
  CHECK(format_word({}).empty());
  CHECK(format_parabolic({2, 1}) == "1,2");
  CHECK(format_simple_expansion({1, 2, 0}) == "b1+2b2");
  CHECK(format_simple_expansion({0, 0}) == "0");
  CHECK(format_simple_expansion({-1, -1}) == "-b1-b2");
  CHECK(format_ambient({1, 0, -1}) == "e1-e3");
  CHECK(format_ambient({0, 2}) == "2e2");
}

TEST_CASE("literal round trips") {
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> coeff(-50, 50), len(1, 8);
  for (int n = 0; n < 500; ++n) {
    Coeffs c(len(rng));
    for (int& x : c) x = coeff(rng);
    CHECK(parse_coeffs(format_coeffs(c)) == c);
    Word w(len(rng));
    for (int& x : w) x = 1 + (coeff(rng) + 50) % 8;
    CHECK(parse_word(format_word(w)) == w);
    const auto p = ParabolicSubset::from_mask(static_cast<std::uint32_t>(rng()) & 0xffu);
    CHECK(parse_parabolic(format_parabolic(p), 8) == p);
  }
}

TEST_CASE("JSON round trips of every report") {
  std::mt19937_64 rng(kDefaultSeed);
  for (const auto& t : types_in_range(2, 4, true)) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    CHECK(round_trip(t) == t);
    const auto group = enumerate_group(rs);
    for (int n = 0; n < 40; ++n) {
      const auto p = ParabolicSubset::from_mask(static_cast<std::uint32_t>(rng() % (1u << rs.rank())));
      CHECK(round_trip(p) == p);
      const Root& a = rs.positive_roots()[rng() % rs.positive_roots().size()];
      CHECK(round_trip(a) == a);
      const auto cr = cosmall_report(rs, a, p);
      CHECK(round_trip(cr) == cr);

      const auto& w = group[rng() % group.size()];
      const auto& v = group[rng() % group.size()];
      const auto hr = hecke_report(rs, w, v);
      CHECK(round_trip(hr) == hr);

      Coeffs bound(rs.rank() - p.members().size(), 2);
      const auto degrees = degrees_below(Degree(t, p, bound));
      const auto& d = degrees[rng() % degrees.size()];
      const auto gr = greedy_report(rs, d, p);
      CHECK(round_trip(gr) == gr);
      const auto cv = curve_report(rs, w, d, p);
      CHECK(round_trip(cv) == cv);
    }
  }
  for (const auto& t : types_in_range(1, 5, false)) {
    const auto table = emit_table(t);
    CHECK(round_trip(table) == table);
  }
}

TEST_CASE("JSON field names") {
  const RootSystem b2(DynkinType(Family::B, 2));
  const json j = cosmall_report(b2, Root{{1, 1}}, {});
  CHECK(j.at("dynkin") == "B2");
  CHECK(j.at("root") == "1,1");
  CHECK(j.at("is_cosmall") == false);
  CHECK(j.at("cosmall_witness") == "1,2");
  CHECK(j.at("parabolic") == json::array());

  const json bad = {{"dynkin", "B9x"}};
  CHECK_THROWS(bad.at("dynkin").get<DynkinType>());
}
