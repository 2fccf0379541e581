#ifndef TROPSVD_SMITH_HPP
#define TROPSVD_SMITH_HPP

#include <vector>

#include "tropsvd/series_matrix.hpp"

namespace tropsvd {

// Certified factorization A = P * diag(t^v) * Q with P, Q invertible over
// the power-series ring (ord det = 0). Exponents are in units of
// t^(1/ramification) and sorted ascending, which is divisibility order:
// t^a | t^b iff a <= b. exponentsDescending() matches the pairing used by
// the convergence harness.
struct SmithDecomposition {
  SeriesMatrix p;
  std::vector<long> exponents;  // ascending
  SeriesMatrix q;
  int ramification = 1;

  std::vector<long> exponentsDescending() const {
    return std::vector<long>(exponents.rbegin(), exponents.rend());
  }
};

enum class Order { Ascending, Descending };

// Valuation-pivot elimination. Each round picks the entry of minimal ord in
// the trailing block (ties broken by the largest unit-part constant), moves
// it to the pivot slot, divides its row by the unit part so the pivot is
// exactly t^v, and clears the pivot row and column; the multipliers stay in
// the valuation ring because the pivot ord is minimal. Elementary inverses
// are applied to P and Q as they accumulate, so A = P * diag * Q holds at
// every step.
SmithDecomposition smithNormalForm(const SeriesMatrix& a);

std::vector<long> invariantFactors(const SeriesMatrix& a, Order order);

// Independent determinantal-divisor route (n <= 5): delta_j is the minimal
// ord over all j x j minors, and v_j = delta_j - delta_{j-1}. Minors whose
// determinant cannot be certified nonzero within precision are skipped.
std::vector<long> minorValuationOracle(const SeriesMatrix& a);

struct VerificationReport {
  double maxResidual = 0.0;     // largest known coefficient of P*diag*Q - A
  bool detPUnit = false;        // ord(det P) == 0
  bool detQUnit = false;
  Rational ordDetP;             // meaningful only when the det is certified
  Rational ordDetQ;
  bool pass = false;

  static constexpr double kResidualTolerance = 1e-10;
};

// Report-based check of the decomposition invariants; never throws.
VerificationReport verifyDecomposition(const SeriesMatrix& a,
                                       const SmithDecomposition& d);

// diag(t^exponents) as a SeriesMatrix.
SeriesMatrix exponentDiagonal(const std::vector<long>& exponents,
                              int ramification, int precision);

}  // namespace tropsvd

#endif  // TROPSVD_SMITH_HPP
