#include "tropsvd/tropical.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace tropsvd {

TropicalPoint tropPoint(const std::vector<LaurentSeries>& fs) {
  TropicalPoint p;
  p.coordinates.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].isZero()) throw OrdOfZero(static_cast<int>(i));
    p.coordinates.push_back(fs[i].ord());
  }
  return p;
}

RealVector logMap(const ComplexVector& z, double t) {
  if (!(t > 0.0 && t < 1.0))
    throw InputError("t must lie strictly between 0 and 1");
  RealVector out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double mod = std::abs(z[i]);
    if (mod == 0.0) throw ZeroCoordinate(static_cast<int>(i));
    out[i] = std::log(mod) / std::log(t);
  }
  return out;
}

RaySet tropicalLine() {
  RaySet rays;
  rays.vertex = RealVector::Zero(2);
  rays.directions = {(RealVector(2) << 1, 0).finished(),
                     (RealVector(2) << 0, 1).finished(),
                     (RealVector(2) << -1, -1).finished()};
  return rays;
}

double distanceToRaySet(const RealVector& p, const RaySet& rays) {
  double best = std::numeric_limits<double>::infinity();
  for (const RealVector& dir : rays.directions) {
    const RealVector unit = dir / dir.norm();
    const RealVector w = p - rays.vertex;
    const double along = std::max(0.0, w.dot(unit));
    best = std::min(best, (w - along * unit).norm());
  }
  return best;
}

std::vector<Eigen::Vector2d> amoebaSampleLine(Complex a, Complex b, Complex c,
                                              double t, int count,
                                              std::uint64_t seed) {
  if (a == Complex(0, 0) || b == Complex(0, 0) || c == Complex(0, 0))
    throw InputError("line coefficients must all be nonzero");
  if (!(t > 0.0 && t < 1.0))
    throw InputError("t must lie strictly between 0 and 1");
  if (count < 1) throw InputError("sample count must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> modulusExponent(-5.0, 5.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double logT = std::log(t);

  std::vector<Eigen::Vector2d> points;
  points.reserve(static_cast<std::size_t>(count));
  long attempts = 0;
  const long attemptCap = 10L * count;
  while (points.size() < static_cast<std::size_t>(count) &&
         attempts < attemptCap) {
    ++attempts;
    const double u = modulusExponent(rng);
    const double theta = angle(rng);
    const Complex free = std::pow(t, u) * Complex(std::cos(theta), std::sin(theta));
    Complex x, y;
    if (points.size() % 2 == 0) {
      x = free;
      y = -(a * x + c) / b;
      if (y == Complex(0, 0)) continue;
    } else {
      y = free;
      x = -(b * y + c) / a;
      if (x == Complex(0, 0)) continue;
    }
    points.emplace_back(std::log(std::abs(x)) / logT,
                        std::log(std::abs(y)) / logT);
  }
  return points;
}

}  // namespace tropsvd
