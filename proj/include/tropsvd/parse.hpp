#ifndef TROPSVD_PARSE_HPP
#define TROPSVD_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tropsvd/series_matrix.hpp"

namespace tropsvd {

// Grammar for series expressions (whitespace insignificant):
//
//   series  := term (("+" | "-") term)*
//   term    := coeff ("*" mono)? | mono
//   mono    := "t" ("^" exponent)?
//   exponent:= integer | "(" integer "/" integer ")"
//   coeff   := real | "(" real ("+"|"-") real "i" ")"
//   real    := decimal literal (optional leading "-")
//
// Exponent denominators must divide the declared ramification. Syntax errors
// carry the byte offset of the offending position.
LaurentSeries parseSeries(std::string_view text, int ramification,
                          int precision = LaurentSeries::kDefaultPrecision);

// Canonical textual form: terms by ascending exponent, unit real
// coefficients elided, reduced rational exponents. parse(print(s)) == s for
// normalized series at the same precision.
std::string printSeries(const LaurentSeries& s);

// JSON matrix document:
//   { "n": 2, "ramification": 1, "entries": [["1","1"],["1","1 + t"]] }
// ramification defaults to 1. Entry parse errors are rethrown with
// (row, column) context.
SeriesMatrix parseMatrixDocument(const std::string& text,
                                 int precision = LaurentSeries::kDefaultPrecision);

// JSON vector document:  { "ramification": 1, "entries": ["t^2", "1 + t"] }
std::vector<LaurentSeries> parseVectorDocument(
    const std::string& text, int precision = LaurentSeries::kDefaultPrecision);

}  // namespace tropsvd

#endif  // TROPSVD_PARSE_HPP
