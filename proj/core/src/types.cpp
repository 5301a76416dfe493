#include "curvenbhd/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <string>

namespace curvenbhd {

DynkinType::DynkinType(Family family, int rank) : family(family), rank(rank) {
  auto fail = [&](const char* rule) {
    throw InputError("invalid rank " + std::to_string(rank) + " for type " +
                     std::string(1, static_cast<char>(family)) + ": " + rule);
  };
  if (rank > kMaxRank) fail("rank exceeds the supported maximum");
  switch (family) {
    case Family::A:
      if (rank < 1) fail("A needs rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) fail("B and C need rank >= 2");
      break;
    case Family::D:
      if (rank < 4) fail("D needs rank >= 4");
      break;
    case Family::F:
      if (rank != 4) fail("F exists only in rank 4");
      break;
    case Family::G:
      if (rank != 2) fail("G exists only in rank 2");
      break;
  }
}

DynkinType DynkinType::parse(std::string_view literal) {
  auto first = literal.find_first_not_of(" \t");
  auto last = literal.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw InputError("empty Dynkin type literal");
  std::string_view body = literal.substr(first, last - first + 1);

  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(body.front())));
  Family family;
  switch (letter) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    default:
      throw InputError("Dynkin type '" + std::string(body) + "': unknown family at position " +
                       std::to_string(first + 1));
  }
  std::string_view digits = body.substr(1);
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InputError("Dynkin type '" + std::string(body) + "': expected a rank at position " +
                     std::to_string(first + 2));
  }
  return DynkinType(family, rank);
}

std::string DynkinType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool DynkinType::is_classical() const noexcept {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

bool DynkinType::simply_laced() const noexcept {
  return family == Family::A || family == Family::D;
}

bool Root::is_positive() const noexcept {
  return std::ranges::all_of(coeffs, [](int c) { return c >= 0; }) &&
         std::ranges::any_of(coeffs, [](int c) { return c != 0; });
}

bool Root::is_negative() const noexcept {
  return std::ranges::all_of(coeffs, [](int c) { return c <= 0; }) &&
         std::ranges::any_of(coeffs, [](int c) { return c != 0; });
}

int Root::height() const noexcept { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

ParabolicSubset::ParabolicSubset(std::initializer_list<int> members)
    : ParabolicSubset(std::vector<int>(members)) {}

ParabolicSubset::ParabolicSubset(const std::vector<int>& members) {
  for (int i : members) {
    if (i < 1 || i > 32) throw InputError("simple index " + std::to_string(i) + " out of range");
    mask_ |= 1u << (i - 1);
  }
}

std::vector<int> ParabolicSubset::members() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

void ParabolicSubset::validate(int rank) const {
  if (rank < 32 && (mask_ >> rank) != 0) {
    throw InputError("parabolic subset names a simple root beyond rank " + std::to_string(rank));
  }
}

bool in_parabolic_span(const Root& root, const ParabolicSubset& parabolic) {
  for (int k = 0; k < root.rank(); ++k)
    if (root.coeffs[k] != 0 && !parabolic.contains(k + 1)) return false;
  return true;
}

}  // namespace curvenbhd
