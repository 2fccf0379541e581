#ifndef TROPSVD_LAURENT_SERIES_HPP
#define TROPSVD_LAURENT_SERIES_HPP

#include <complex>
#include <ostream>
#include <vector>

#include "tropsvd/errors.hpp"
#include "tropsvd/rational.hpp"

namespace tropsvd {

using Complex = std::complex<double>;

// Truncated Laurent/Puiseux series  sum_j c_j t^((m+j)/k).
//
// Exponents are exact integers over a fixed ramification index k; only the
// coefficients are floating point. A series knows its coefficients on the
// window [m, m+N) (in units of 1/k) and is exactly zero below m. Terms at
// exponent >= (m+N)/k are unknown, not zero. The zero series is a
// distinguished value with an undefined ord.
//
// Every nonzero series is normalized: the first retained coefficient is
// nonzero, so lead_exponent/ramification is the true valuation.
//
// Values are immutable after construction; all arithmetic lives in pure free
// functions, so series can be shared freely across threads.
class LaurentSeries {
 public:
  static constexpr int kDefaultPrecision = 40;

  // Coefficients with magnitude <= kZeroSnap * (scale of the inputs) are
  // snapped to exact zero after arithmetic, before normalization.
  static constexpr double kZeroSnap = 1e-14;

  LaurentSeries() = default;  // the zero series

  static LaurentSeries zero() { return LaurentSeries(); }

  static LaurentSeries constant(Complex value, int ramification = 1,
                                int precision = kDefaultPrecision);

  // t^(num/ramification)
  static LaurentSeries tPower(long num, int ramification = 1,
                              int precision = kDefaultPrecision);

  static LaurentSeries one(int ramification = 1,
                           int precision = kDefaultPrecision) {
    return constant(Complex(1.0, 0.0), ramification, precision);
  }

  // Builds a series from explicit terms with polynomial semantics: the given
  // coefficients are exact and everything after them is zero, truncated to
  // `precision` retained coefficients. coeffs[j] multiplies t^((lead+j)/k).
  static LaurentSeries fromTerms(int ramification, long lead,
                                 std::vector<Complex> coeffs,
                                 int precision = kDefaultPrecision);

  // Internal-style constructor where the coefficient window is exactly the
  // vector handed in (nothing beyond it is known). Snaps coefficients below
  // kZeroSnap * snapScale to zero and strips leading zeros; throws
  // PrecisionExhausted if that empties the window.
  static LaurentSeries fromWindow(int ramification, long lead,
                                  std::vector<Complex> coeffs,
                                  double snapScale);

  // Same, with one snap scale per coefficient (the magnitude actually
  // accumulated while computing that coefficient).
  static LaurentSeries fromWindow(int ramification, long lead,
                                  std::vector<Complex> coeffs,
                                  const std::vector<double>& snapScales);

  bool isZero() const { return coeffs_.empty(); }
  int ramification() const { return ramification_; }
  long leadExponent() const { return lead_; }
  int precision() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  // End of the known window in units of 1/k: coefficients for exponents in
  // [leadExponent(), windowEnd()) are known.
  long windowEnd() const { return lead_ + static_cast<long>(coeffs_.size()); }

  Rational ord() const {
    if (isZero()) throw OrdOfZero();
    return Rational(lead_, ramification_);
  }

  // Lifts to a finer ramification index (k | target). Exponents and the
  // known window are preserved exactly.
  LaurentSeries withRamification(int target) const;

  bool operator==(const LaurentSeries& other) const = default;

 private:
  LaurentSeries(int ramification, long lead, std::vector<Complex> coeffs)
      : ramification_(ramification), lead_(lead), coeffs_(std::move(coeffs)) {}

  int ramification_ = 1;
  long lead_ = 0;
  std::vector<Complex> coeffs_;  // empty <=> zero series
};

Rational ord(const LaurentSeries& s);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);

// Sums many series in one coefficient-wise pass, so the result does not
// depend on accumulation order and a transient cancellation between two
// terms cannot exhaust the window. A total that snaps to zero everywhere is
// returned as the certified zero series (every coefficient fell below the
// snap threshold of the magnitudes actually summed); callers that need the
// stricter two-term semantics use add.
LaurentSeries sumAll(const std::vector<LaurentSeries>& terms);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries scale(const LaurentSeries& a, Complex c);

// Multiplies by t^(num/k) -- an exact exponent shift.
LaurentSeries shiftExponent(const LaurentSeries& a, long num);

// Geometric-series inverse: mul(s, inverse(s)) == 1 up to truncation.
LaurentSeries inverse(const LaurentSeries& s);

// s shifted so its leading exponent is 0:  s = t^ord(s) * unitPart(s).
LaurentSeries unitPart(const LaurentSeries& s);

// Sums the retained terms at a numeric value of t, smallest magnitude first
// (largest exponent first, since the harness regime is 0 < t < 1).
Complex evaluate(const LaurentSeries& s, double t);

double maxCoeffMagnitude(const LaurentSeries& s);

// Largest coefficient magnitude of a - b over the window where both are
// known. Never normalizes and never throws; full cancellation reports 0.
// This is the comparison the decomposition certificates use.
double maxCoeffDifference(const LaurentSeries& a, const LaurentSeries& b);

// Ends the known window just before the first coefficient whose magnitude
// exceeds the cap (the lead is always kept). Truncated unit inverses grow
// geometrically, and coefficients past the cap no longer carry the
// significance a floating-point certificate can use.
LaurentSeries truncateByMagnitude(const LaurentSeries& s, double cap);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  return add(a, b);
}
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return sub(a, b);
}
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  return mul(a, b);
}
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }

// Diagnostic form, e.g. "(1+0i)*t^-1 + (2+0i)" -- the canonical textual form
// lives with the parser/printer.
std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

}  // namespace tropsvd

#endif  // TROPSVD_LAURENT_SERIES_HPP
