#include "curvenbhd/weyl.hpp"

#include <algorithm>
#include <ranges>
#include <string>

namespace curvenbhd {
namespace {

bool is_negative_vector(std::span<const int> v) {
  // Images of roots are roots, so the sign of any nonzero entry decides.
  for (int c : v)
    if (c != 0) return c < 0;
  return false;
}

void require_rank(const RootSystem& rs, const WeylElement& w) {
  if (w.rank() != rs.rank()) throw ContextMismatch("Weyl element rank does not match root system");
}

}  // namespace

WeylElement WeylElement::identity(int rank) {
  std::vector<int> data(rank * rank, 0);
  for (int i = 0; i < rank; ++i) data[i * rank + i] = 1;
  return WeylElement(rank, std::move(data));
}

WeylElement::WeylElement(int rank, std::vector<int> columns) : rank_(rank), data_(std::move(columns)) {
  if (static_cast<int>(data_.size()) != rank * rank) throw DomainError("Weyl element matrix has wrong size");
}

Coeffs WeylElement::apply(std::span<const int> x) const {
  Coeffs out(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    if (x[j] == 0) continue;
    const int* col = data_.data() + j * rank_;
    for (int i = 0; i < rank_; ++i) out[i] += x[j] * col[i];
  }
  return out;
}

bool WeylElement::is_identity() const { return *this == identity(rank_); }

bool WeylElement::has_right_descent(int i) const { return is_negative_vector(image_of_simple(i)); }

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.rank_ != v.rank_) throw ContextMismatch("cannot multiply Weyl elements of different rank");
  std::vector<int> data;
  data.reserve(v.data_.size());
  for (int j = 1; j <= v.rank_; ++j) {
    Coeffs col = u.apply(v.image_of_simple(j));
    data.insert(data.end(), col.begin(), col.end());
  }
  return WeylElement(u.rank_, std::move(data));
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return multiply_simple(rs, WeylElement::identity(rs.rank()), i);
}

WeylElement reflection(const RootSystem& rs, const Root& alpha) {
  rs.require_root(alpha);
  const int n = rs.rank();
  std::vector<int> data;
  data.reserve(n * n);
  for (int j = 1; j <= n; ++j) {
    Coeffs col = rs.simple_root(j).coeffs;
    const int p = rs.pairing(col, alpha);
    for (int k = 0; k < n; ++k) col[k] -= p * alpha.coeffs[k];
    data.insert(data.end(), col.begin(), col.end());
  }
  return WeylElement(n, std::move(data));
}

WeylElement multiply_simple(const RootSystem& rs, const WeylElement& w, int i) {
  require_rank(rs, w);
  const int n = rs.rank();
  if (i < 1 || i > n) throw DomainError("simple index " + std::to_string(i) + " out of range");
  // (w s_i)(β_j) = w(β_j) - <β_j, β_i∨> w(β_i).
  std::vector<int> data;
  data.reserve(n * n);
  auto wi = w.image_of_simple(i);
  for (int j = 1; j <= n; ++j) {
    auto wj = w.image_of_simple(j);
    const int a = rs.cartan(i, j);
    for (int k = 0; k < n; ++k) data.push_back(wj[k] - a * wi[k]);
  }
  return WeylElement(n, std::move(data));
}

WeylElement from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int i : word) w = multiply_simple(rs, w, i);
  return w;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  Word word = reduced_word(rs, w);
  std::ranges::reverse(word);
  return from_word(rs, word);
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!w.has_right_descent(i)) {
        w = multiply_simple(rs, w, i);
        grew = true;
      }
    }
  }
  return w;
}

int length(const RootSystem& rs, const WeylElement& w) {
  require_rank(rs, w);
  int count = 0;
  for (const Root& a : rs.positive_roots())
    if (is_negative_vector(w.apply(a.coeffs))) ++count;
  return count;
}

std::vector<Root> inversions(const RootSystem& rs, const WeylElement& w) {
  require_rank(rs, w);
  std::vector<Root> out;
  for (const Root& a : rs.positive_roots())
    if (is_negative_vector(w.apply(a.coeffs))) out.push_back(a);
  return out;
}

Word reduced_word(const RootSystem& rs, const WeylElement& w) {
  require_rank(rs, w);
  Word reversed;
  WeylElement cur = w;
  while (true) {
    int descent = 0;
    for (int i = 1; i <= rs.rank() && descent == 0; ++i)
      if (cur.has_right_descent(i)) descent = i;
    if (descent == 0) break;
    reversed.push_back(descent);
    cur = multiply_simple(rs, cur, descent);
  }
  std::ranges::reverse(reversed);
  return reversed;
}

WeylElement hecke_step(const RootSystem& rs, const WeylElement& u, int i) {
  require_rank(rs, u);
  if (u.has_right_descent(i)) return u;
  return multiply_simple(rs, u, i);
}

WeylElement hecke_fold(const RootSystem& rs, const WeylElement& u, const Word& word) {
  WeylElement acc = u;
  for (int i : word) acc = hecke_step(rs, acc, i);
  return acc;
}

WeylElement hecke_product(const RootSystem& rs, const WeylElement& u, const WeylElement& v) {
  return hecke_fold(rs, u, reduced_word(rs, v));
}

WeylElement min_coset_rep(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic) {
  require_rank(rs, w);
  parabolic.validate(rs.rank());
  WeylElement cur = w;
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (int i : parabolic.members()) {
      if (cur.has_right_descent(i)) {
        cur = multiply_simple(rs, cur, i);
        shrank = true;
      }
    }
  }
  return cur;
}

bool same_coset(const RootSystem& rs, const WeylElement& u, const WeylElement& v,
                const ParabolicSubset& parabolic) {
  return min_coset_rep(rs, u, parabolic) == min_coset_rep(rs, v, parabolic);
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& u, const WeylElement& w) {
  require_rank(rs, u);
  require_rank(rs, w);
  // Walk down a reduced word of w from the right. If s is a descent of w,
  // then u <= w iff us <= ws (s a descent of u) or u <= ws (otherwise).
  WeylElement lo = u;
  const Word word = reduced_word(rs, w);
  for (int i : std::views::reverse(word)) {
    if (lo.has_right_descent(i)) lo = multiply_simple(rs, lo, i);
  }
  return lo.is_identity();
}

bool in_WP(const RootSystem& rs, const WeylElement& w, const ParabolicSubset& parabolic) {
  parabolic.validate(rs.rank());
  return std::ranges::all_of(inversions(rs, w),
                             [&](const Root& a) { return in_parabolic_span(a, parabolic); });
}

}  // namespace curvenbhd
