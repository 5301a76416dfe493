#include <doctest.h>

#include <map>
#include <set>

#include "curvenbhd/verify.hpp"
#include "curvenbhd/weyl.hpp"

using namespace curvenbhd;

namespace {

Root R(std::initializer_list<int> c) { return Root{Coeffs(c)}; }

// Products of every subword of `word`, computed with plain multiplication.
std::set<WeylElement> subword_products(const RootSystem& rs, const Word& word) {
  std::set<WeylElement> out;
  const std::size_t n = word.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    WeylElement w = WeylElement::identity(rs.rank());
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1u) w = multiply_simple(rs, w, word[k]);
    out.insert(w);
  }
  return out;
}

// W_P by breadth-first search over its own generators.
std::set<WeylElement> parabolic_subgroup(const RootSystem& rs, const ParabolicSubset& p) {
  std::set<WeylElement> seen{WeylElement::identity(rs.rank())};
  std::vector<WeylElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i : p.members())
        if (auto [it, fresh] = seen.insert(multiply_simple(rs, w, i)); fresh) next.push_back(*it);
    frontier = std::move(next);
  }
  return seen;
}

std::vector<ParabolicSubset> all_parabolics(int rank) {
  std::vector<ParabolicSubset> out;
  for (std::uint32_t m = 0; m < (1u << rank); ++m) out.push_back(ParabolicSubset::from_mask(m));
  return out;
}

const std::vector<DynkinType> kSmall{DynkinType(Family::A, 2), DynkinType(Family::B, 2),
                                     DynkinType(Family::G, 2), DynkinType(Family::A, 3),
                                     DynkinType(Family::B, 3), DynkinType(Family::C, 3)};

}  // namespace

TEST_CASE("reflections") {
  const RootSystem a2(DynkinType(Family::A, 2));
  CHECK(length(a2, reflection(a2, R({1, 0}))) == 1);
  CHECK(length(a2, reflection(a2, R({1, 1}))) == 3);
  CHECK(reflection(a2, R({1, 1})) == longest_element(a2));

  for (const auto& t : types_in_range(2, 4, true)) {
    const RootSystem rs(t);
    const auto id = WeylElement::identity(rs.rank());
    for (const Root& a : rs.positive_roots()) {
      const auto s = reflection(rs, a);
      CHECK(s * s == id);
      CHECK(s.apply(a.coeffs) == (-a).coeffs);
      CHECK(length(rs, s) % 2 == 1);
      CHECK(reflection(rs, -a) == s);
    }
  }
}

TEST_CASE("length counts inversions") {
  const RootSystem b2(DynkinType(Family::B, 2));
  CHECK(length(b2, WeylElement::identity(2)) == 0);
  CHECK(length(b2, longest_element(b2)) == 4);
  const RootSystem a2(DynkinType(Family::A, 2));
  CHECK(length(a2, from_word(a2, {1, 2})) == 2);
  CHECK(inversions(a2, from_word(a2, {1, 2})).size() == 2);
}

TEST_CASE("length equals the distance in the Cayley graph") {
  for (const auto& t : kSmall) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    std::map<WeylElement, int> dist{{WeylElement::identity(rs.rank()), 0}};
    std::vector<WeylElement> frontier{WeylElement::identity(rs.rank())};
    for (int d = 1; !frontier.empty(); ++d) {
      std::vector<WeylElement> next;
      for (const auto& w : frontier)
        for (int i = 1; i <= rs.rank(); ++i)
          if (auto [it, fresh] = dist.emplace(multiply_simple(rs, w, i), d); fresh) next.push_back(it->first);
      frontier = std::move(next);
    }
    CHECK(dist.size() == enumerate_group(rs).size());
    for (const auto& [w, d] : dist) CHECK(length(rs, w) == d);
  }
}

TEST_CASE("reduced words") {
  const RootSystem a2(DynkinType(Family::A, 2));
  CHECK(reduced_word(a2, WeylElement::identity(2)).empty());
  CHECK(reduced_word(a2, simple_reflection(a2, 2)) == Word{2});
  CHECK(reduced_word(a2, longest_element(a2)) == Word{1, 2, 1});
  for (const auto& t : kSmall) {
    const RootSystem rs(t);
    for (const auto& w : enumerate_group(rs)) {
      const Word word = reduced_word(rs, w);
      CHECK(from_word(rs, word) == w);
      CHECK(static_cast<int>(word.size()) == length(rs, w));
      CHECK(inverse(rs, w) * w == WeylElement::identity(rs.rank()));
    }
  }
  CHECK_THROWS_AS(from_word(a2, {1, 3}), DomainError);
}

TEST_CASE("Hecke products") {
  const RootSystem a2(DynkinType(Family::A, 2));
  const auto s1 = simple_reflection(a2, 1), s2 = simple_reflection(a2, 2);
  CHECK(hecke_step(a2, s1, 1) == s1);
  CHECK(hecke_product(a2, s1, s1) == s1);
  CHECK(hecke_product(a2, s1, s2) == from_word(a2, {1, 2}));
  CHECK(hecke_product(a2, longest_element(a2), longest_element(a2)) == longest_element(a2));
  CHECK(hecke_fold(a2, s1, {2, 2, 1, 1}) == longest_element(a2));

  for (const auto& t : {DynkinType(Family::A, 2), DynkinType(Family::B, 2), DynkinType(Family::A, 3)}) {
    CAPTURE(t.name());
    CHECK(check_hecke_exhaustive(RootSystem(t), true).passed());
  }
}

TEST_CASE("Hecke product is the Bruhat-largest subword product") {
  for (const auto& t : {DynkinType(Family::A, 2), DynkinType(Family::B, 2), DynkinType(Family::G, 2)}) {
    const RootSystem rs(t);
    const auto group = enumerate_group(rs);
    for (const auto& u : group) {
      for (const auto& v : group) {
        Word word = reduced_word(rs, u);
        const Word vw = reduced_word(rs, v);
        word.insert(word.end(), vw.begin(), vw.end());
        const auto h = hecke_product(rs, u, v);
        for (const auto& x : subword_products(rs, word)) CHECK(bruhat_leq(rs, x, h));
      }
    }
  }
}

TEST_CASE("Bruhat order matches the subword property") {
  const RootSystem a2(DynkinType(Family::A, 2));
  CHECK(bruhat_leq(a2, simple_reflection(a2, 1), from_word(a2, {1, 2})));
  CHECK_FALSE(bruhat_leq(a2, simple_reflection(a2, 2), simple_reflection(a2, 1)));

  for (const auto& t : {DynkinType(Family::A, 3), DynkinType(Family::B, 3), DynkinType(Family::G, 2)}) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    const auto group = enumerate_group(rs);
    for (const auto& w : group) {
      const auto below = subword_products(rs, reduced_word(rs, w));
      for (const auto& u : group) CHECK(bruhat_leq(rs, u, w) == below.contains(u));
    }
  }
}

TEST_CASE("minimal coset representatives") {
  const RootSystem a2(DynkinType(Family::A, 2));
  const auto w = from_word(a2, {2, 1});
  CHECK(min_coset_rep(a2, w, {}) == w);
  CHECK(min_coset_rep(a2, from_word(a2, {2, 1, 2}), {2}) == w);
  CHECK(min_coset_rep(a2, simple_reflection(a2, 2), {2}).is_identity());

  for (const auto& t : kSmall) {
    CAPTURE(t.name());
    const RootSystem rs(t);
    const auto group = enumerate_group(rs);
    for (const auto& p : all_parabolics(rs.rank())) {
      const auto wp = parabolic_subgroup(rs, p);
      for (const auto& g : group) CHECK(in_WP(rs, g, p) == wp.contains(g));
      for (const auto& g : group) {
        WeylElement best = g;
        int count_min = 0;
        int best_len = length(rs, g);
        for (const auto& x : wp) {
          const auto c = g * x;
          const int len = length(rs, c);
          if (len < best_len) best = c, best_len = len;
        }
        for (const auto& x : wp) count_min += length(rs, g * x) == best_len;
        CHECK(count_min == 1);
        CHECK(min_coset_rep(rs, g, p) == best);
        CHECK(same_coset(rs, g, best, p));
      }
    }
  }
}

TEST_CASE("distinct roots outside R+_P give distinct cosets s_a W_P") {
  for (const auto& t : types_in_range(2, 4, false)) {
    CHECK(check_coset_injectivity(RootSystem(t)).passed());
  }
}
