#ifndef TROPSVD_CONVERGENCE_HPP
#define TROPSVD_CONVERGENCE_HPP

#include <cstdint>
#include <vector>

#include "tropsvd/jacobi_svd.hpp"
#include "tropsvd/series_matrix.hpp"
#include "tropsvd/smith.hpp"

namespace tropsvd {

// log base t is ln(x)/ln(t) throughout; t is restricted to (0,1), so
// ln t < 0 and ascending singular values map to descending logs, which pairs
// them index-wise with the descending invariant factors.
inline double logBase(double t, double x) { return std::log(x) / std::log(t); }

// One t-sample: log_t of the singular values of A(t) against the invariant
// factors. Index i pairs the (i+1)-th smallest singular value with the
// (i+1)-th largest exponent.
struct ConvergenceRow {
  double t = 0.0;
  RealVector logSingularValues;
  RealVector errors;
  double maxError = 0.0;
};

struct ConvergenceTable {
  std::vector<long> factorsDescending;  // units of t^(1/ramification)
  int ramification = 1;
  std::vector<ConvergenceRow> rows;
};

// log_t of the singular values of A(t), ordered by ascending singular value.
RealVector logSingularValues(const SeriesMatrix& a, double t);

// Runs the schedule (strictly decreasing, inside (0,1)) and pairs each row
// against the descending invariant factors. Rows are independent and
// deterministic, so the table is identical regardless of evaluation order.
ConvergenceTable convergenceTable(const SeriesMatrix& a,
                                  const std::vector<double>& schedule);

// Sampled check of the min-max principle: every k-dimensional subspace gives
// max Rayleigh >= lambda_k, every (n-k+1)-dimensional one gives
// min Rayleigh <= lambda_k. The inner optimum over a sampled subspace is the
// extreme eigenvalue of the compressed matrix.
struct MinMaxReport {
  int k = 0;
  double lambdaK = 0.0;
  int trials = 0;
  int violations = 0;
  double tightestMaxOverMinSubspaces = 0.0;  // min over W of max Rayleigh
  double tightestMinOverMaxSubspaces = 0.0;  // max over U of min Rayleigh
  static constexpr double kTolerance = 1e-10;
  bool pass() const { return violations == 0; }
};

MinMaxReport minmaxSpotCheck(const ComplexMatrix& h, int k, int trials,
                             std::uint64_t seed = 1);

// Sampled bounds on ||P(t)x|| over unit vectors, for P a unit of the
// power-series ring. Estimates, not proofs: extremes over 200-ish random
// directions per t.
struct LemmaBoundEstimate {
  double mEst = 0.0;
  double MEst = 0.0;
};

LemmaBoundEstimate lemmaBoundEstimate(const SeriesMatrix& p,
                                      const std::vector<double>& schedule,
                                      int sphereSamples = 200,
                                      std::uint64_t seed = 1);

// Two-sided bound on log_t d_k(t) from the Smith factors:
//   v_k + log_t(M^2 M'^2)/2  <=  log_t d_k(t)  <=  v_k + log_t(m^2 m'^2)/2
// with (m, M) bounding ||P(t)x|| on the unit sphere and (m', M') doing the
// same for Q(t). The asserted constants widen the sampled estimates with
// the spectral extremes of the evaluated factors (their exact optima): a
// sampled minimum over a few hundred directions sits well above the true
// minimum in dimension >= 3, which would falsify the k = 1 upper bound no
// matter how the singular values behave. Sampled values are kept in the
// report for comparison. The degenerate P = Q = I case collapses the
// sandwich to equality up to floating-point slack. Also checks the
// quadratic-form identity (A*Ax, x) = (Ax, Ax) at random vectors.
struct SandwichReport {
  int k = 0;
  double t = 0.0;
  double logD = 0.0;
  double vK = 0.0;
  double lowerBound = 0.0;          // asserted, spectral-widened
  double upperBound = 0.0;
  double sampledLowerBound = 0.0;   // from the raw sampled estimates
  double sampledUpperBound = 0.0;
  double slack = 0.0;
  bool sandwichHolds = false;
  double maxIdentityRelError = 0.0;
  bool identityHolds = false;
  bool pass() const { return sandwichHolds && identityHolds; }
};

SandwichReport sandwichCheck(const SeriesMatrix& a, double t, int k,
                             int sphereSamples = 200, std::uint64_t seed = 1);

}  // namespace tropsvd

#endif  // TROPSVD_CONVERGENCE_HPP
