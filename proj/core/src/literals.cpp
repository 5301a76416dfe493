#include "curvenbhd/literals.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace curvenbhd {
namespace {

[[noreturn]] void fail_at(std::string_view what, std::string_view literal, std::size_t pos, std::string_view why) {
  std::ostringstream os;
  os << what << " '" << literal << "': " << why << " at position " << pos + 1;
  throw InputError(os.str());
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits on `sep` (or on runs of whitespace when sep == ' '), returning each
// token with its starting offset.
std::vector<std::pair<std::size_t, std::string_view>> tokens(std::string_view s, char sep) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  if (sep == ' ') {
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && is_space(s[i])) ++i;
      std::size_t start = i;
      while (i < s.size() && !is_space(s[i])) ++i;
      if (i > start) out.emplace_back(start, s.substr(start, i - start));
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    std::string_view tok = s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t lead = 0;
    while (lead < tok.size() && is_space(tok[lead])) ++lead;
    std::size_t trail = tok.size();
    while (trail > lead && is_space(tok[trail - 1])) --trail;
    out.emplace_back(start + lead, tok.substr(lead, trail - lead));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

int parse_int(std::string_view what, std::string_view literal, std::size_t pos, std::string_view tok) {
  if (tok.empty()) fail_at(what, literal, pos, "missing integer");
  std::string_view body = tok;
  if (body.front() == '+') body.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    const std::size_t bad = ec == std::errc{} ? static_cast<std::size_t>(ptr - tok.data()) : 0;
    fail_at(what, literal, pos + bad, "invalid integer '" + std::string(tok) + "'");
  }
  return value;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (!is_space(c)) return false;
  return true;
}

}  // namespace

Coeffs parse_coeffs(std::string_view literal, std::string_view what) {
  if (blank(literal)) fail_at(what, literal, 0, "empty literal");
  Coeffs out;
  for (auto [pos, tok] : tokens(literal, ',')) out.push_back(parse_int(what, literal, pos, tok));
  return out;
}

Word parse_word(std::string_view literal) {
  Word out;
  for (auto [pos, tok] : tokens(literal, ' ')) {
    const int i = parse_int("word", literal, pos, tok);
    if (i < 1) fail_at("word", literal, pos, "simple indices are 1-based");
    out.push_back(i);
  }
  return out;
}

ParabolicSubset parse_parabolic(std::string_view literal, int rank) {
  std::vector<int> members;
  if (!blank(literal)) {
    for (auto [pos, tok] : tokens(literal, ',')) {
      const int i = parse_int("parabolic subset", literal, pos, tok);
      if (i < 1 || i > rank) {
        fail_at("parabolic subset", literal, pos,
                "simple index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
      }
      members.push_back(i);
    }
  }
  return ParabolicSubset(members);
}

std::string format_coeffs(const Coeffs& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(coeffs[k]);
  }
  return out;
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(word[k]);
  }
  return out;
}

std::string format_parabolic(const ParabolicSubset& parabolic) {
  return format_coeffs(parabolic.members());
}

std::string format_simple_expansion(const Coeffs& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    int c = coeffs[k];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (c != 1) out += std::to_string(c);
    out += 'b' + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace curvenbhd
