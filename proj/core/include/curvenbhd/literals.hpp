#pragma once

#include <string>
#include <string_view>

#include "curvenbhd/types.hpp"
#include "curvenbhd/weyl.hpp"

namespace curvenbhd {

// Parsers for the textual literals accepted by the CLI. Malformed input
// raises InputError with the 1-based character position of the problem.

/// "1,2" -> {1, 2}. Whitespace around entries is ignored.
Coeffs parse_coeffs(std::string_view literal, std::string_view what = "coefficient list");
/// "1 2 1" -> {1, 2, 1}; the empty string is the empty word.
Word parse_word(std::string_view literal);
/// "1,3" or "" -> Δ_P, validated against `rank`.
ParabolicSubset parse_parabolic(std::string_view literal, int rank);

std::string format_coeffs(const Coeffs& coeffs);
std::string format_word(const Word& word);
std::string format_parabolic(const ParabolicSubset& parabolic);
/// "b1+2b2"; bN denotes the N-th simple root.
std::string format_simple_expansion(const Coeffs& coeffs);

}  // namespace curvenbhd
