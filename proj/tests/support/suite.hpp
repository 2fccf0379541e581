#ifndef TROPSVD_TESTS_SUITE_HPP
#define TROPSVD_TESTS_SUITE_HPP

// The ten-matrix convergence suite: n in {2,3,4}, invariant-factor exponents
// spanning [-3, 3]. Each matrix is built as (unit factor) * diag(t^v) *
// (unit factor), so the expected exponents are known by construction and are
// independently cross-checked against the minor-valuation route in the
// tests.
//
// Matrices whose unit factors are dense keep the exponent spread at 1: with
// double-precision evaluation at t = 1e-8, a j-minor of valuation delta_j is
// recoverable only while t^(delta_j - j*v_min) stays well above machine
// epsilon. Wider spreads ride on diagonal, antidiagonal, or one-sided
// triangular shapes whose evaluated entries each carry a single power of t.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "tropsvd/parse.hpp"
#include "tropsvd/series_matrix.hpp"
#include "tropsvd/smith.hpp"

namespace suite {

struct Entry {
  std::string name;
  tropsvd::SeriesMatrix matrix;
  std::vector<long> exponentsAscending;
};

inline tropsvd::SeriesMatrix fromRows(
    const std::vector<std::vector<std::string>>& rows) {
  const int n = static_cast<int>(rows.size());
  tropsvd::SeriesMatrix m(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.set(i, j, tropsvd::parseSeries(rows[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)],
                                       1));
  return m;
}

inline std::vector<Entry> convergenceSuite() {
  using tropsvd::matmul;
  std::vector<Entry> suite;

  suite.push_back({"identity_2", fromRows({{"1", "0"}, {"0", "1"}}), {0, 0}});

  suite.push_back(
      {"running_2", fromRows({{"1", "1"}, {"1", "1 + t"}}), {0, 1}});

  suite.push_back(
      {"diag_mixed_2", fromRows({{"t", "0"}, {"0", "t^-1"}}), {-1, 1}});

  suite.push_back(
      {"antidiag_2", fromRows({{"0", "t^-3"}, {"t^3", "0"}}), {-3, 3}});

  suite.push_back(
      {"diag_skew_2", fromRows({{"t^2", "0"}, {"0", "t^-1"}}), {-1, 2}});

  // Column-graded: unit lower-triangular constants times diag(t^v); every
  // evaluated entry carries a single power of t.
  suite.push_back({"col_graded_3",
                   fromRows({{"t^-2", "0", "0"},
                             {"0.5*t^-2", "1", "0"},
                             {"t^-2", "-1", "t^2"}}),
                   {-2, 0, 2}});

  // Row-graded mirror: diag(t^v) times unit upper-triangular constants.
  suite.push_back({"row_graded_3",
                   fromRows({{"t^-1", "t^-1", "-1*t^-1"},
                             {"0", "t", "0.5*t"},
                             {"0", "0", "t^3"}}),
                   {-1, 1, 3}});

  // Dense two-sided twists, exponent spread kept at 1.
  {
    const tropsvd::SeriesMatrix lhs = fromRows(
        {{"1", "0", "0"}, {"0.5", "1", "0"}, {"0.25", "0.5 + t", "1"}});
    const tropsvd::SeriesMatrix diag =
        fromRows({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "t"}});
    const tropsvd::SeriesMatrix rhs = fromRows(
        {{"1", "0.5", "0.25"}, {"0", "1", "-0.5"}, {"0", "0", "1"}});
    suite.push_back({"dense_3", matmul(matmul(lhs, diag), rhs), {0, 0, 1}});
  }

  {
    const tropsvd::SeriesMatrix lhs = fromRows({{"1", "0", "0", "0"},
                                                {"0.5", "1", "0", "0"},
                                                {"t", "0.25", "1", "0"},
                                                {"0.25", "0", "0.5", "1"}});
    const tropsvd::SeriesMatrix diag = fromRows({{"t^-1", "0", "0", "0"},
                                                 {"0", "t^-1", "0", "0"},
                                                 {"0", "0", "t^-1", "0"},
                                                 {"0", "0", "0", "1"}});
    const tropsvd::SeriesMatrix rhs = fromRows({{"1", "0.25", "0", "0.5"},
                                                {"0", "1", "0.5", "0"},
                                                {"0", "0", "1", "0.25 + t"},
                                                {"0", "0", "0", "1"}});
    suite.push_back(
        {"dense_4", matmul(matmul(lhs, diag), rhs), {-1, -1, -1, 0}});
  }

  suite.push_back({"col_graded_4",
                   fromRows({{"t^-3", "0", "0", "0"},
                             {"0.5*t^-3", "t^-1", "0", "0"},
                             {"0.25*t^-3", "0.5*t^-1", "t^2", "0"},
                             {"t^-3", "-0.25*t^-1", "0.5*t^2", "t^3"}}),
                   {-3, -1, 2, 3}});

  return suite;
}

inline std::vector<double> defaultSchedule() {
  return {1e-2, 1e-4, 1e-6, 1e-8};
}

// Random nonsingular matrix L * diag(c_i t^{e_i}) * U with unit-triangular
// one-term factors. Entries stay Laurent polynomials with <= n terms and
// exponents inside [-3, 3]; the invariant factors are the sorted diagonal
// exponents, known independently of both implementations under test.
struct RandomInstance {
  tropsvd::SeriesMatrix matrix;
  std::vector<long> exponents;  // ascending
};

inline RandomInstance randomSmithInstance(int n, std::mt19937_64& rng) {
  using tropsvd::Complex;
  using tropsvd::LaurentSeries;
  using tropsvd::SeriesMatrix;
  std::uniform_int_distribution<long> diagExp(-3, 1);
  std::uniform_int_distribution<long> unitExp(0, 1);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> fill(0, 1);

  const auto coeff = [&] {
    const double th = angle(rng);
    return Complex(mag(rng) * std::cos(th), mag(rng) * std::sin(th));
  };

  SeriesMatrix lower = SeriesMatrix::identity(n, 1);
  SeriesMatrix upper = SeriesMatrix::identity(n, 1);
  SeriesMatrix diag(n, 1);
  std::vector<long> exponents;
  for (int i = 0; i < n; ++i) {
    const long e = diagExp(rng);
    exponents.push_back(e);
    diag.set(i, i, LaurentSeries::fromTerms(1, e, {coeff()}));
    for (int j = 0; j < i; ++j) {
      if (fill(rng))
        lower.set(i, j, LaurentSeries::fromTerms(1, unitExp(rng), {coeff()}));
      if (fill(rng))
        upper.set(j, i, LaurentSeries::fromTerms(1, unitExp(rng), {coeff()}));
    }
  }
  std::sort(exponents.begin(), exponents.end());
  return {matmul(matmul(lower, diag), upper), exponents};
}

}  // namespace suite

#endif  // TROPSVD_TESTS_SUITE_HPP
