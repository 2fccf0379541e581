#include "tropsvd/laurent_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tropsvd {

namespace {

// Strips exactly-zero leading coefficients; returns the shift applied.
long stripLeadingZeros(std::vector<Complex>& coeffs) {
  std::size_t j = 0;
  while (j < coeffs.size() && coeffs[j] == Complex(0.0, 0.0)) ++j;
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(j));
  return static_cast<long>(j);
}

}  // namespace

LaurentSeries LaurentSeries::constant(Complex value, int ramification,
                                      int precision) {
  return fromTerms(ramification, 0, {value}, precision);
}

LaurentSeries LaurentSeries::tPower(long num, int ramification,
                                    int precision) {
  return fromTerms(ramification, num, {Complex(1.0, 0.0)}, precision);
}

LaurentSeries LaurentSeries::fromTerms(int ramification, long lead,
                                       std::vector<Complex> coeffs,
                                       int precision) {
  if (ramification < 1) throw InputError("ramification index must be >= 1");
  if (precision < 1) throw InputError("precision must be >= 1");
  lead += stripLeadingZeros(coeffs);
  if (coeffs.empty()) return zero();
  coeffs.resize(static_cast<std::size_t>(precision), Complex(0.0, 0.0));
  return LaurentSeries(ramification, lead, std::move(coeffs));
}

LaurentSeries LaurentSeries::fromWindow(int ramification, long lead,
                                        std::vector<Complex> coeffs,
                                        double snapScale) {
  const double threshold = kZeroSnap * snapScale;
  for (auto& c : coeffs) {
    if (std::abs(c) <= threshold) c = Complex(0.0, 0.0);
  }
  lead += stripLeadingZeros(coeffs);
  if (coeffs.empty()) throw PrecisionExhausted();
  return LaurentSeries(ramification, lead, std::move(coeffs));
}

LaurentSeries LaurentSeries::fromWindow(int ramification, long lead,
                                        std::vector<Complex> coeffs,
                                        const std::vector<double>& snapScales) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (std::abs(coeffs[i]) <= kZeroSnap * snapScales[i])
      coeffs[i] = Complex(0.0, 0.0);
  }
  lead += stripLeadingZeros(coeffs);
  if (coeffs.empty()) throw PrecisionExhausted();
  return LaurentSeries(ramification, lead, std::move(coeffs));
}

LaurentSeries LaurentSeries::withRamification(int target) const {
  if (target == ramification_) return *this;
  if (target < 1 || target % ramification_ != 0)
    throw InputError("cannot lift ramification " +
                     std::to_string(ramification_) + " to " +
                     std::to_string(target));
  if (isZero()) return zero();
  const int r = target / ramification_;
  std::vector<Complex> lifted(coeffs_.size() * static_cast<std::size_t>(r),
                              Complex(0.0, 0.0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    lifted[j * static_cast<std::size_t>(r)] = coeffs_[j];
  return LaurentSeries(target, lead_ * r, std::move(lifted));
}

Rational ord(const LaurentSeries& s) { return s.ord(); }

namespace {

// Lifts both operands to the lcm of their ramification indices.
std::pair<LaurentSeries, LaurentSeries> lifted(const LaurentSeries& a,
                                               const LaurentSeries& b) {
  if (a.ramification() == b.ramification()) return {a, b};
  const int k = std::lcm(a.ramification(), b.ramification());
  return {a.withRamification(k), b.withRamification(k)};
}

}  // namespace

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  auto [x, y] = lifted(a, b);

  // Each series is exactly zero below its lead, so the sum is known up to
  // the earlier of the two window ends.
  const long lead = std::min(x.leadExponent(), y.leadExponent());
  const long end = std::min(x.windowEnd(), y.windowEnd());
  std::vector<Complex> sum(static_cast<std::size_t>(end - lead),
                           Complex(0.0, 0.0));
  std::vector<double> scales(sum.size(), 0.0);
  for (long e = lead; e < end; ++e) {
    Complex c(0.0, 0.0);
    double scale = 0.0;
    if (e >= x.leadExponent()) {
      const Complex cx =
          x.coefficients()[static_cast<std::size_t>(e - x.leadExponent())];
      c += cx;
      scale += std::abs(cx);
    }
    if (e >= y.leadExponent()) {
      const Complex cy =
          y.coefficients()[static_cast<std::size_t>(e - y.leadExponent())];
      c += cy;
      scale += std::abs(cy);
    }
    sum[static_cast<std::size_t>(e - lead)] = c;
    scales[static_cast<std::size_t>(e - lead)] = scale;
  }
  return LaurentSeries::fromWindow(x.ramification(), lead, std::move(sum),
                                   scales);
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
  return add(a, negate(b));
}

LaurentSeries sumAll(const std::vector<LaurentSeries>& terms) {
  std::vector<LaurentSeries> live;
  live.reserve(terms.size());
  int k = 1;
  for (const LaurentSeries& s : terms) {
    if (s.isZero()) continue;
    k = std::lcm(k, s.ramification());
    live.push_back(s);
  }
  if (live.empty()) return LaurentSeries::zero();
  if (live.size() == 1) return live.front();

  long lead = 0, end = 0;
  bool first = true;
  for (LaurentSeries& s : live) {
    s = s.withRamification(k);
    lead = first ? s.leadExponent() : std::min(lead, s.leadExponent());
    end = first ? s.windowEnd() : std::min(end, s.windowEnd());
    first = false;
  }

  std::vector<Complex> sum(static_cast<std::size_t>(end - lead),
                           Complex(0.0, 0.0));
  std::vector<double> scales(sum.size(), 0.0);
  for (const LaurentSeries& s : live) {
    for (long e = std::max(lead, s.leadExponent()); e < end; ++e) {
      const Complex c =
          s.coefficients()[static_cast<std::size_t>(e - s.leadExponent())];
      sum[static_cast<std::size_t>(e - lead)] += c;
      scales[static_cast<std::size_t>(e - lead)] += std::abs(c);
    }
  }
  try {
    return LaurentSeries::fromWindow(k, lead, std::move(sum), scales);
  } catch (const PrecisionExhausted&) {
    return LaurentSeries::zero();
  }
}

LaurentSeries negate(const LaurentSeries& a) { return scale(a, Complex(-1.0, 0.0)); }

LaurentSeries scale(const LaurentSeries& a, Complex c) {
  if (a.isZero() || c == Complex(0.0, 0.0)) return LaurentSeries::zero();
  std::vector<Complex> coeffs = a.coefficients();
  for (auto& v : coeffs) v *= c;
  // Scaling cannot create or destroy leading terms; no snap needed.
  return LaurentSeries::fromWindow(a.ramification(), a.leadExponent(),
                                   std::move(coeffs), 0.0);
}

LaurentSeries shiftExponent(const LaurentSeries& a, long num) {
  if (a.isZero()) return a;
  return LaurentSeries::fromWindow(a.ramification(), a.leadExponent() + num,
                                   a.coefficients(), 0.0);
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero() || b.isZero()) return LaurentSeries::zero();
  auto [x, y] = lifted(a, b);

  // Unknown tails limit the product window to the shorter of the two.
  const std::size_t terms = std::min(x.coefficients().size(),
                                     y.coefficients().size());
  std::vector<Complex> prod(terms, Complex(0.0, 0.0));
  std::vector<double> scales(terms, 0.0);
  for (std::size_t i = 0; i < x.coefficients().size(); ++i) {
    if (i >= terms) break;
    const Complex xi = x.coefficients()[i];
    if (xi == Complex(0.0, 0.0)) continue;
    const double mi = std::abs(xi);
    const std::size_t jmax = std::min(terms - i, y.coefficients().size());
    for (std::size_t j = 0; j < jmax; ++j) {
      prod[i + j] += xi * y.coefficients()[j];
      scales[i + j] += mi * std::abs(y.coefficients()[j]);
    }
  }
  return LaurentSeries::fromWindow(x.ramification(),
                                   x.leadExponent() + y.leadExponent(),
                                   std::move(prod), scales);
}

LaurentSeries inverse(const LaurentSeries& s) {
  if (s.isZero()) throw DivisionByZeroSeries();
  const auto& u = s.coefficients();
  const std::size_t n = u.size();
  std::vector<Complex> inv(n, Complex(0.0, 0.0));
  inv[0] = Complex(1.0, 0.0) / u[0];
  for (std::size_t l = 1; l < n; ++l) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 1; j <= l; ++j) acc += u[j] * inv[l - j];
    inv[l] = -acc / u[0];
  }
  return LaurentSeries::fromWindow(s.ramification(), -s.leadExponent(),
                                   std::move(inv), 0.0);
}

LaurentSeries unitPart(const LaurentSeries& s) {
  if (s.isZero()) throw DivisionByZeroSeries();
  return shiftExponent(s, -s.leadExponent());
}

Complex evaluate(const LaurentSeries& s, double t) {
  if (s.isZero()) return Complex(0.0, 0.0);
  Complex acc(0.0, 0.0);
  const double k = static_cast<double>(s.ramification());
  for (std::size_t idx = s.coefficients().size(); idx-- > 0;) {
    const Complex c = s.coefficients()[idx];
    if (c == Complex(0.0, 0.0)) continue;
    const double e =
        static_cast<double>(s.leadExponent() + static_cast<long>(idx)) / k;
    acc += c * std::pow(t, e);
  }
  return acc;
}

double maxCoeffMagnitude(const LaurentSeries& s) {
  double m = 0.0;
  for (const auto& c : s.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

LaurentSeries truncateByMagnitude(const LaurentSeries& s, double cap) {
  if (s.isZero()) return s;
  std::size_t keep = s.coefficients().size();
  for (std::size_t j = 1; j < s.coefficients().size(); ++j) {
    if (std::abs(s.coefficients()[j]) > cap) {
      keep = j;
      break;
    }
  }
  if (keep == s.coefficients().size()) return s;
  std::vector<Complex> coeffs(s.coefficients().begin(),
                              s.coefficients().begin() + static_cast<long>(keep));
  return LaurentSeries::fromWindow(s.ramification(), s.leadExponent(),
                                   std::move(coeffs), 0.0);
}

double maxCoeffDifference(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.isZero() && b.isZero()) return 0.0;
  if (a.isZero()) return maxCoeffMagnitude(b);
  if (b.isZero()) return maxCoeffMagnitude(a);
  auto [x, y] = lifted(a, b);
  const long lead = std::min(x.leadExponent(), y.leadExponent());
  const long end = std::min(x.windowEnd(), y.windowEnd());
  double m = 0.0;
  for (long e = lead; e < end; ++e) {
    Complex c(0.0, 0.0);
    if (e >= x.leadExponent())
      c += x.coefficients()[static_cast<std::size_t>(e - x.leadExponent())];
    if (e >= y.leadExponent())
      c -= y.coefficients()[static_cast<std::size_t>(e - y.leadExponent())];
    m = std::max(m, std::abs(c));
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) {
  if (s.isZero()) return os << "0";
  bool first = true;
  for (std::size_t j = 0; j < s.coefficients().size(); ++j) {
    const Complex c = s.coefficients()[j];
    if (c == Complex(0.0, 0.0)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    const long e = s.leadExponent() + static_cast<long>(j);
    if (e != 0) {
      os << "*t^";
      if (s.ramification() == 1)
        os << e;
      else
        os << "(" << e << "/" << s.ramification() << ")";
    }
  }
  return os;
}

}  // namespace tropsvd
