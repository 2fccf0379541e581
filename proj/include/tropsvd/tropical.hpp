#ifndef TROPSVD_TROPICAL_HPP
#define TROPSVD_TROPICAL_HPP

#include <cstdint>
#include <vector>

#include "tropsvd/series_matrix.hpp"

namespace tropsvd {

// Sign convention, fixed globally: logs are base t with 0 < t < 1, so a
// coordinate of small modulus maps to a large positive value and the log
// map limits agree with ord without a sign flip. (The base-e convention in
// the literature differs by a sign.)

// Componentwise valuation of a vector of nonzero series.
struct TropicalPoint {
  std::vector<Rational> coordinates;
};

TropicalPoint tropPoint(const std::vector<LaurentSeries>& fs);

// Componentwise log_t |z_i| of a vector with nonzero coordinates.
RealVector logMap(const ComplexVector& z, double t);

// Union of rays from a common vertex.
struct RaySet {
  RealVector vertex;
  std::vector<RealVector> directions;
};

// trop of the line ax + by + c = 0 with nonzero constant coefficients: the
// valuation balance forces the minimum of (ord x, ord y, 0) to be attained
// twice, which yields exactly the three rays (1,0), (0,1), (-1,-1).
RaySet tropicalLine();

// Euclidean distance from p to the nearest ray (projection clamped to the
// ray).
double distanceToRaySet(const RealVector& p, const RaySet& rays);

// Samples `count` points of the curve ax + by + c = 0 in the torus and
// returns their log-map images. Moduli are drawn log-uniformly over
// [t^5, t^-5] and phases uniformly; samples alternate between parametrizing
// x and parametrizing y, so for a = b the sampled distribution is symmetric
// under coordinate swap. Degenerate draws are resampled, with a total cap of
// 10 * count attempts.
std::vector<Eigen::Vector2d> amoebaSampleLine(Complex a, Complex b, Complex c,
                                              double t, int count,
                                              std::uint64_t seed = 1);

}  // namespace tropsvd

#endif  // TROPSVD_TROPICAL_HPP
