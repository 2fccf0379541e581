#include "tropsvd/convergence.hpp"

#include <Eigen/QR>
#include <cmath>
#include <random>

namespace tropsvd {

namespace {

void requireUnitInterval(double t) {
  if (!(t > 0.0 && t < 1.0))
    throw InputError("t must lie strictly between 0 and 1");
}

ComplexVector randomComplexVector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector z(n);
  for (int i = 0; i < n; ++i) z[i] = Complex(gauss(rng), gauss(rng));
  return z;
}

// Orthonormal frame spanning a random dim-dimensional subspace.
ComplexMatrix randomFrame(int n, int dim, std::mt19937_64& rng) {
  ComplexMatrix g(n, dim);
  for (int j = 0; j < dim; ++j) g.col(j) = randomComplexVector(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix q = qr.householderQ();
  return q.leftCols(dim);
}

}  // namespace

RealVector logSingularValues(const SeriesMatrix& a, double t) {
  requireUnitInterval(t);
  const ComplexMatrix e = evaluateMatrix(a, t);
  const SvdResult result = svd<double>(e);
  RealVector logs(a.size());
  for (int i = 0; i < a.size(); ++i) {
    const double d = result.singularValues[i];
    if (d == 0.0) throw ZeroSingularValue(i);
    logs[i] = logBase(t, d);
  }
  return logs;
}

ConvergenceTable convergenceTable(const SeriesMatrix& a,
                                  const std::vector<double>& schedule) {
  if (schedule.empty()) throw InputError("schedule must be nonempty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    requireUnitInterval(schedule[i]);
    if (i > 0 && !(schedule[i] < schedule[i - 1]))
      throw InputError("schedule must be strictly decreasing");
  }

  ConvergenceTable table;
  table.ramification = a.ramification();
  table.factorsDescending = invariantFactors(a, Order::Descending);

  const double k = static_cast<double>(table.ramification);
  for (const double t : schedule) {
    ConvergenceRow row;
    row.t = t;
    row.logSingularValues = logSingularValues(a, t);
    row.errors.resize(a.size());
    for (int i = 0; i < a.size(); ++i) {
      const double target =
          static_cast<double>(table.factorsDescending[static_cast<std::size_t>(i)]) / k;
      row.errors[i] = std::abs(row.logSingularValues[i] - target);
    }
    row.maxError = row.errors.maxCoeff();
    table.rows.push_back(std::move(row));
  }
  return table;
}

MinMaxReport minmaxSpotCheck(const ComplexMatrix& h, int k, int trials,
                             std::uint64_t seed) {
  const int n = static_cast<int>(h.rows());
  if (k < 1 || k > n) throw InputError("index k out of range");

  const RealVector lambda = hermitianEigenvalues<double>(h);
  MinMaxReport report;
  report.k = k;
  report.lambdaK = lambda[k - 1];
  report.trials = trials;

  std::mt19937_64 rng(seed);
  double minOfMax = std::numeric_limits<double>::infinity();
  double maxOfMin = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    // Eq-style lower route: dim k subspace, inner maximum.
    const ComplexMatrix w = randomFrame(n, k, rng);
    const ComplexMatrix hw = w.adjoint() * h * w;
    const RealVector eigW =
        hermitianEigenvalues<double>(((hw + hw.adjoint()) / 2.0).eval());
    const double innerMax = eigW[eigW.size() - 1];
    if (innerMax < report.lambdaK - MinMaxReport::kTolerance)
      ++report.violations;
    minOfMax = std::min(minOfMax, innerMax);

    // Dual route: dim n-k+1 subspace, inner minimum.
    const ComplexMatrix u = randomFrame(n, n - k + 1, rng);
    const ComplexMatrix hu = u.adjoint() * h * u;
    const RealVector eigU =
        hermitianEigenvalues<double>(((hu + hu.adjoint()) / 2.0).eval());
    const double innerMin = eigU[0];
    if (innerMin > report.lambdaK + MinMaxReport::kTolerance)
      ++report.violations;
    maxOfMin = std::max(maxOfMin, innerMin);
  }
  report.tightestMaxOverMinSubspaces = minOfMax;
  report.tightestMinOverMaxSubspaces = maxOfMin;
  return report;
}

LemmaBoundEstimate lemmaBoundEstimate(const SeriesMatrix& p,
                                      const std::vector<double>& schedule,
                                      int sphereSamples, std::uint64_t seed) {
  const LaurentSeries det = [&] {
    try {
      return determinant(p);
    } catch (const PrecisionExhausted&) {
      return LaurentSeries::zero();
    }
  }();
  if (det.isZero() || det.ord() != Rational(0)) throw NotUnit();
  if (schedule.empty() || sphereSamples < 1)
    throw InputError("need at least one t value and one sphere sample");

  std::mt19937_64 rng(seed);
  LemmaBoundEstimate est{std::numeric_limits<double>::infinity(), 0.0};
  for (const double t : schedule) {
    requireUnitInterval(t);
    const ComplexMatrix e = evaluateMatrix(p, t);
    for (int s = 0; s < sphereSamples; ++s) {
      ComplexVector x = randomComplexVector(p.size(), rng);
      x /= x.norm();
      const double norm = (e * x).norm();
      est.mEst = std::min(est.mEst, norm);
      est.MEst = std::max(est.MEst, norm);
    }
  }
  return est;
}

SandwichReport sandwichCheck(const SeriesMatrix& a, double t, int k,
                             int sphereSamples, std::uint64_t seed) {
  requireUnitInterval(t);
  const int n = a.size();
  if (k < 1 || k > n) throw InputError("index k out of range");

  const SmithDecomposition smith = smithNormalForm(a);
  const std::vector<long> vDesc = smith.exponentsDescending();

  SandwichReport report;
  report.k = k;
  report.t = t;
  report.vK = static_cast<double>(vDesc[static_cast<std::size_t>(k - 1)]) /
              static_cast<double>(smith.ramification);

  const std::vector<double> single{t};
  const LemmaBoundEstimate boundsP =
      lemmaBoundEstimate(smith.p, single, sphereSamples, seed);
  const LemmaBoundEstimate boundsQ =
      lemmaBoundEstimate(smith.q, single, sphereSamples, seed + 1);

  // Spectral extremes of the evaluated factors: the optimal constants.
  const SvdResult svdP = svd<double>(evaluateMatrix(smith.p, t));
  const SvdResult svdQ = svd<double>(evaluateMatrix(smith.q, t));
  const double mP = std::min(boundsP.mEst, svdP.singularValues[0]);
  const double MP =
      std::max(boundsP.MEst, svdP.singularValues[svdP.singularValues.size() - 1]);
  const double mQ = std::min(boundsQ.mEst, svdQ.singularValues[0]);
  const double MQ =
      std::max(boundsQ.MEst, svdQ.singularValues[svdQ.singularValues.size() - 1]);

  // d_k^2 is sandwiched by (m m')^2 t^{2 v_k} and (M M')^2 t^{2 v_k}; after
  // log_t (which reverses order for 0 < t < 1) the squared constants divide
  // out to single factors.
  report.logD = logSingularValues(a, t)[k - 1];
  report.lowerBound = report.vK + logBase(t, MP * MQ);
  report.upperBound = report.vK + logBase(t, mP * mQ);
  report.sampledLowerBound =
      report.vK + logBase(t, boundsP.MEst * boundsQ.MEst);
  report.sampledUpperBound =
      report.vK + logBase(t, boundsP.mEst * boundsQ.mEst);
  report.slack = 1e-8 * (1.0 + 1.0 / std::abs(std::log(t)));
  report.sandwichHolds = report.lowerBound - report.slack <= report.logD &&
                         report.logD <= report.upperBound + report.slack;

  // (A*Ax, x) = (Ax, Ax) at random vectors; the Gram matrix shows up only
  // on this check path, never inside the SVD.
  const ComplexMatrix e = evaluateMatrix(a, t);
  const ComplexMatrix gram = e.adjoint() * e;
  std::mt19937_64 rng(seed + 2);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexVector x = randomComplexVector(n, rng);
    const double lhs = x.dot(gram * x).real();
    const double rhs = (e * x).squaredNorm();
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs - rhs) / scale);
  }
  report.maxIdentityRelError = worst;
  report.identityHolds = worst <= 1e-12;
  return report;
}

}  // namespace tropsvd
