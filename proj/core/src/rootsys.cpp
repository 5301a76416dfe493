#include "curvenbhd/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "curvenbhd/literals.hpp"

namespace curvenbhd {
namespace {

// Gram matrix (β_i, β_j) at an integral scale, row-major.
std::vector<int> gram_matrix(const DynkinType& t) {
  const int n = t.rank;
  std::vector<int> g(n * n, 0);
  auto at = [&](int i, int j) -> int& { return g[(i - 1) * n + (j - 1)]; };
  auto link = [&](int i, int j, int value) { at(i, j) = at(j, i) = value; };

  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) at(i, i) = 2;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:  // β_n = e_n
      for (int i = 1; i < n; ++i) at(i, i) = 2;
      at(n, n) = 1;
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:  // β_n = 2e_n
      for (int i = 1; i < n; ++i) at(i, i) = 2;
      at(n, n) = 4;
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case Family::D:  // β_n = e_{n-1} + e_n
      for (int i = 1; i <= n; ++i) at(i, i) = 2;
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case Family::F:  // β_1, β_2 long; β_3, β_4 short
      at(1, 1) = at(2, 2) = 4;
      at(3, 3) = at(4, 4) = 2;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case Family::G:  // β_1 short, β_2 long
      at(1, 1) = 2;
      at(2, 2) = 6;
      link(1, 2, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(DynkinType dynkin) : dynkin_(dynkin), gram_(gram_matrix(dynkin)) {
  const int n = rank();
  cartan_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[i * n + j] = 2 * gram_[i * n + j] / gram_[i * n + i];

  // Close the simple roots under the simple reflections.
  std::set<Coeffs> seen;
  std::deque<Coeffs> queue;
  for (int i = 1; i <= n; ++i) {
    Coeffs c(n, 0);
    c[i - 1] = 1;
    if (seen.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    Coeffs x = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      int p = 0;
      for (int j = 1; j <= n; ++j) p += x[j - 1] * cartan(i, j);
      if (p == 0) continue;
      Coeffs y = x;
      y[i - 1] -= p;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }

  roots_.reserve(seen.size());
  for (const auto& c : seen) roots_.push_back(Root{c});
  for (const auto& r : roots_)
    if (r.is_positive()) positive_.push_back(r);

  raw_min_ = 0;
  int raw_max = 0;
  for (const auto& r : roots_) {
    int len = inner_product(r.coeffs, r.coeffs);
    raw_length_.emplace(r.coeffs, len);
    raw_min_ = raw_min_ == 0 ? len : std::min(raw_min_, len);
    raw_max = std::max(raw_max, len);
  }
  length_scale_ = raw_min_ == raw_max ? 2 : 1;
  min_length_ = length_scale_ * raw_min_ / raw_min_;
  max_length_ = length_scale_ * raw_max / raw_min_;
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw DomainError("simple index " + std::to_string(i) + " out of range");
  Coeffs c(rank(), 0);
  c[i - 1] = 1;
  return Root{std::move(c)};
}

Root RootSystem::highest_root() const {
  return *std::ranges::max_element(positive_, {}, [](const Root& r) { return r.height(); });
}

int RootSystem::inner_product(std::span<const int> x, std::span<const int> y) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += x[i] * gram_[i * n + j] * y[j];
  }
  return s;
}

int RootSystem::pairing(std::span<const int> x, const Root& alpha) const {
  return 2 * inner_product(x, alpha.coeffs) / inner_product(alpha.coeffs, alpha.coeffs);
}

bool RootSystem::contains(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank()) return false;
  return raw_length_.contains(Coeffs(coeffs.begin(), coeffs.end()));
}

void RootSystem::require_root(const Root& alpha) const {
  if (!contains(alpha.coeffs)) {
    throw DomainError("(" + format_coeffs(alpha.coeffs) + ") is not a root of " + dynkin_.name());
  }
}

void RootSystem::require_positive_root(const Root& alpha) const {
  require_root(alpha);
  if (!alpha.is_positive()) {
    throw DomainError("(" + format_coeffs(alpha.coeffs) + ") is not a positive root");
  }
}

int RootSystem::squared_length(const Root& alpha) const {
  auto it = raw_length_.find(alpha.coeffs);
  if (it == raw_length_.end()) require_root(alpha);
  return length_scale_ * it->second / raw_min_;
}

Coroot coroot(const RootSystem& rs, const Root& alpha) {
  rs.require_root(alpha);
  // α∨ = Σ c_i (β_i,β_i)/(α,α) β_i∨.
  const int len = rs.inner_product(alpha.coeffs, alpha.coeffs);
  Coeffs out(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) {
    Coeffs e(rs.rank(), 0);
    e[i - 1] = 1;
    out[i - 1] = alpha.coeffs[i - 1] * rs.inner_product(e, e) / len;
  }
  return Coroot{std::move(out)};
}

StringReach root_string_reach(const RootSystem& rs, const Root& alpha, const Root& beta) {
  rs.require_root(alpha);
  rs.require_root(beta);
  if (alpha == beta || alpha == -beta) throw DomainError("root string needs beta != ±alpha");
  StringReach reach{0, alpha};
  Coeffs next = alpha.coeffs;
  while (true) {
    for (int i = 0; i < rs.rank(); ++i) next[i] += beta.coeffs[i];
    if (!rs.contains(next)) break;
    ++reach.k;
    reach.endpoint = Root{next};
  }
  return reach;
}

std::vector<int> delta_set(const RootSystem& rs, const Root& alpha) {
  rs.require_root(alpha);
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    Coeffs sum = alpha.coeffs;
    sum[i - 1] += 1;
    if (rs.contains(sum)) out.push_back(i);
  }
  return out;
}

bool root_leq(const Root& alpha, const Root& gamma) {
  if (alpha.rank() != gamma.rank()) throw DomainError("root_leq: rank mismatch");
  for (int i = 0; i < alpha.rank(); ++i)
    if (gamma.coeffs[i] < alpha.coeffs[i]) return false;
  return true;
}

}  // namespace curvenbhd
