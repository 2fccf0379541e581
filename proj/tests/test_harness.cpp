#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/LU>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/suite.hpp"
#include "tropsvd/convergence.hpp"
#include "tropsvd/parse.hpp"

using namespace tropsvd;

namespace {

SeriesMatrix fromRows(const std::vector<std::vector<std::string>>& rows) {
  return suite::fromRows(rows);
}

}  // namespace

TEST_CASE("log singular values on closed-form cases") {
  const RealVector id = logSingularValues(SeriesMatrix::identity(3, 1), 0.1);
  CHECK(id.cwiseAbs().maxCoeff() == 0.0);

  const RealVector diag =
      logSingularValues(fromRows({{"t", "0"}, {"0", "t^-1"}}), 0.01);
  CHECK(diag[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(diag[1] == doctest::Approx(-1.0).epsilon(1e-12));

  // d ~ (t/2, 2) at small t, so both logs deviate from (1, 0) by
  // ln(2)/|ln t| = 0.05017... at t = 1e-6.
  const RealVector running =
      logSingularValues(fromRows({{"1", "1"}, {"1", "1 + t"}}), 1e-6);
  const double dev = std::log(2.0) / std::abs(std::log(1e-6));
  CHECK(std::abs(running[0] - 1.0) == doctest::Approx(dev).epsilon(1e-3));
  CHECK(std::abs(running[1] - 0.0) == doctest::Approx(dev).epsilon(1e-3));
}

TEST_CASE("log singular values rejects out-of-range t and zero values") {
  const SeriesMatrix i2 = SeriesMatrix::identity(2, 1);
  CHECK_THROWS_AS(logSingularValues(i2, 0.0), InputError);
  CHECK_THROWS_AS(logSingularValues(i2, 1.0), InputError);
  CHECK_THROWS_AS(logSingularValues(i2, 2.0), InputError);

  SeriesMatrix rankDeficient(2, 1);
  rankDeficient.set(0, 1, LaurentSeries::one());
  CHECK_THROWS_AS(logSingularValues(rankDeficient, 0.1), ZeroSingularValue);
}

TEST_CASE("convergence table pairs ascending d with descending v") {
  const SeriesMatrix a = fromRows({{"1", "1"}, {"1", "1 + t"}});
  const ConvergenceTable table = convergenceTable(a, suite::defaultSchedule());
  CHECK(table.factorsDescending == std::vector<long>{1, 0});
  REQUIRE(table.rows.size() == 4);

  // errors strictly decrease along the schedule for this matrix
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    CHECK(table.rows[i].maxError < table.rows[i - 1].maxError);
  CHECK(table.rows.back().maxError < 0.05);
}

TEST_CASE("identity and exact-diagonal tables have zero error") {
  const ConvergenceTable id =
      convergenceTable(SeriesMatrix::identity(2, 1), suite::defaultSchedule());
  for (const ConvergenceRow& row : id.rows) CHECK(row.maxError == 0.0);

  const ConvergenceTable diag = convergenceTable(
      fromRows({{"t^2", "0"}, {"0", "t^-1"}}), suite::defaultSchedule());
  for (const ConvergenceRow& row : diag.rows) CHECK(row.maxError <= 1e-12);
}

TEST_CASE("schedule validation") {
  const SeriesMatrix i2 = SeriesMatrix::identity(2, 1);
  CHECK_THROWS_AS(convergenceTable(i2, {}), InputError);
  CHECK_THROWS_AS(convergenceTable(i2, {0.1, 0.1}), InputError);
  CHECK_THROWS_AS(convergenceTable(i2, {0.01, 0.1}), InputError);
  CHECK_THROWS_AS(convergenceTable(i2, {0.1, 1.5}), InputError);
}

TEST_CASE("suite-wide convergence rate and monotonicity") {
  for (const suite::Entry& entry : suite::convergenceSuite()) {
    CAPTURE(entry.name);
    const ConvergenceTable table =
        convergenceTable(entry.matrix, suite::defaultSchedule());
    for (const ConvergenceRow& row : table.rows) {
      if (row.t <= 1e-4)
        CHECK(row.maxError <= 3.0 / std::abs(std::log(row.t)));
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i)
      CHECK(table.rows[i].maxError <=
            table.rows[i - 1].maxError * 1.05 + 1e-12);
  }
}

TEST_CASE("log-determinant consistency") {
  for (const suite::Entry& entry : suite::convergenceSuite()) {
    CAPTURE(entry.name);
    for (const double t : suite::defaultSchedule()) {
      const RealVector logs = logSingularValues(entry.matrix, t);
      const double viaSvd = logs.sum();
      const double viaDet =
          logBase(t, std::abs(evaluateMatrix(entry.matrix, t).determinant()));
      CHECK(std::abs(viaSvd - viaDet) <= 1e-8);
    }
    long vSum = 0;
    for (const long v : entry.exponentsAscending) vSum += v;
    const RealVector logs = logSingularValues(entry.matrix, 1e-8);
    CHECK(std::abs(logs.sum() - static_cast<double>(vSum)) <=
          0.1 * entry.matrix.size());
  }
}

TEST_CASE("min-max spot check") {
  // diag(1,2,3): the subspace span{e1, e2} achieves the inner max 2 = lambda_2.
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = Complex(1, 0);
  d(1, 1) = Complex(2, 0);
  d(2, 2) = Complex(3, 0);
  ComplexMatrix frame = ComplexMatrix::Zero(3, 2);
  frame(0, 0) = Complex(1, 0);
  frame(1, 1) = Complex(1, 0);
  const ComplexMatrix compressed = frame.adjoint() * d * frame;
  const RealVector inner = hermitianEigenvalues<double>(compressed);
  CHECK(inner[inner.size() - 1] == doctest::Approx(2.0));

  const MinMaxReport report = minmaxSpotCheck(d, 2, 500, 71);
  CHECK(report.pass());
  CHECK(report.lambdaK == doctest::Approx(2.0));
  CHECK(report.tightestMaxOverMinSubspaces >= 2.0 - 1e-10);
  CHECK(report.tightestMinOverMaxSubspaces <= 2.0 + 1e-10);

  // identity: every Rayleigh quotient is exactly 1
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  for (int k = 1; k <= 4; ++k) {
    const MinMaxReport r = minmaxSpotCheck(id, k, 100, 73);
    CHECK(r.pass());
    CHECK(r.tightestMaxOverMinSubspaces == doctest::Approx(1.0));
    CHECK(r.tightestMinOverMaxSubspaces == doctest::Approx(1.0));
  }

  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 4; ++trial) {
    const ComplexMatrix h = oracles::randomHermitian(4, rng);
    for (int k = 1; k <= 4; ++k)
      CHECK(minmaxSpotCheck(h, k, 1000, 83 + trial).violations == 0);
  }

  CHECK_THROWS_AS(minmaxSpotCheck(id, 0, 10), InputError);
  CHECK_THROWS_AS(minmaxSpotCheck(id, 5, 10), InputError);
}

TEST_CASE("lemma bound estimates") {
  const LemmaBoundEstimate id = lemmaBoundEstimate(
      SeriesMatrix::identity(3, 1), suite::defaultSchedule(), 200, 89);
  CHECK(id.mEst == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.MEst == doctest::Approx(1.0).epsilon(1e-12));

  // P = [[1, t], [0, 1]]: both bounds settle to 1 within 2t.
  const SeriesMatrix shear = fromRows({{"1", "t"}, {"0", "1"}});
  for (const double t : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const LemmaBoundEstimate est = lemmaBoundEstimate(shear, {t}, 200, 97);
    CHECK(est.mEst >= 1.0 - 2.0 * t);
    CHECK(est.MEst <= 1.0 + 2.0 * t);
    CHECK(est.mEst <= est.MEst);
    CHECK(est.mEst > 0.0);
  }

  // Smith-produced unit factors stay bounded across the schedule.
  for (const suite::Entry& entry : suite::convergenceSuite()) {
    const SmithDecomposition d = smithNormalForm(entry.matrix);
    const LemmaBoundEstimate est =
        lemmaBoundEstimate(d.p, suite::defaultSchedule(), 50, 101);
    CHECK(est.mEst > 0.0);
    CHECK(est.mEst <= est.MEst);
    CHECK(std::isfinite(est.MEst));
  }

  CHECK_THROWS_AS(lemmaBoundEstimate(fromRows({{"t", "0"}, {"0", "1"}}),
                                     {0.1}, 10, 1),
                  NotUnit);
}

TEST_CASE("sandwich collapses to equality for pure exponent diagonals") {
  const SeriesMatrix diag = fromRows({{"t^2", "0"}, {"0", "t^-1"}});
  for (const double t : suite::defaultSchedule()) {
    for (int k = 1; k <= 2; ++k) {
      const SandwichReport report = sandwichCheck(diag, t, k, 200, 103);
      CHECK(report.pass());
      CHECK(std::abs(report.logD - report.vK) <= report.slack);
    }
  }
}

TEST_CASE("sandwich holds for the running example and the suite") {
  const SeriesMatrix running = fromRows({{"1", "1"}, {"1", "1 + t"}});
  for (int k = 1; k <= 2; ++k) {
    const SandwichReport report = sandwichCheck(running, 1e-4, k, 200, 107);
    CHECK(report.pass());
    CHECK(report.lowerBound - report.slack <= report.logD);
    CHECK(report.logD <= report.upperBound + report.slack);
    CHECK(report.maxIdentityRelError <= 1e-12);
  }

  for (const suite::Entry& entry : suite::convergenceSuite()) {
    CAPTURE(entry.name);
    for (const double t : suite::defaultSchedule())
      for (int k = 1; k <= entry.matrix.size(); ++k)
        CHECK(sandwichCheck(entry.matrix, t, k, 200, 109).pass());
  }
}
