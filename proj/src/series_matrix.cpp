#include "tropsvd/series_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace tropsvd {

SeriesMatrix::SeriesMatrix(int n, int ramification)
    : n_(n), ramification_(ramification) {
  if (n < 1) throw InputError("matrix dimension must be >= 1");
  if (ramification < 1) throw InputError("ramification index must be >= 1");
  entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  LaurentSeries::zero());
}

SeriesMatrix SeriesMatrix::identity(int n, int ramification, int precision) {
  SeriesMatrix m(n, ramification);
  for (int i = 0; i < n; ++i)
    m.set(i, i, LaurentSeries::one(ramification, precision));
  return m;
}

void SeriesMatrix::set(int i, int j, const LaurentSeries& s) {
  entries_[static_cast<std::size_t>(i * n_ + j)] =
      s.isZero() ? s : s.withRamification(ramification_);
}

void SeriesMatrix::swapRows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < n_; ++j)
    std::swap(entries_[static_cast<std::size_t>(a * n_ + j)],
              entries_[static_cast<std::size_t>(b * n_ + j)]);
}

void SeriesMatrix::swapCols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < n_; ++i)
    std::swap(entries_[static_cast<std::size_t>(i * n_ + a)],
              entries_[static_cast<std::size_t>(i * n_ + b)]);
}

int SeriesMatrix::maxPrecision() const {
  int p = LaurentSeries::kDefaultPrecision;
  for (const auto& e : entries_)
    if (!e.isZero()) p = std::max(p, e.precision());
  return p;
}

SeriesMatrix matmul(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size() != b.size())
    throw ShapeMismatch("matrix product dimensions do not match");
  const int n = a.size();
  SeriesMatrix c(n, std::lcm(a.ramification(), b.ramification()));
  std::vector<LaurentSeries> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      terms.clear();
      for (int k = 0; k < n; ++k) terms.push_back(mul(a(i, k), b(k, j)));
      c.set(i, j, sumAll(terms));
    }
  }
  return c;
}

namespace {

LaurentSeries detRecursive(const SeriesMatrix& a, const std::vector<int>& rows,
                           std::vector<int>& cols) {
  const std::size_t m = rows.size();
  if (m == 1) return a(rows[0], cols[0]);
  std::vector<LaurentSeries> terms;
  const int row = rows[0];
  const std::vector<int> subRows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < m; ++j) {
    const int col = cols[j];
    const LaurentSeries& pivot = a(row, col);
    if (pivot.isZero()) continue;
    std::vector<int> subCols;
    subCols.reserve(m - 1);
    for (std::size_t l = 0; l < m; ++l)
      if (l != j) subCols.push_back(cols[l]);
    const LaurentSeries term = mul(pivot, detRecursive(a, subRows, subCols));
    terms.push_back((j % 2 == 0) ? term : negate(term));
  }
  return sumAll(terms);
}

}  // namespace

LaurentSeries minorDeterminant(const SeriesMatrix& a,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  if (rows.empty() || rows.size() != cols.size())
    throw ShapeMismatch("minor index lists must be nonempty and equal-sized");
  std::vector<int> c = cols;
  return detRecursive(a, rows, c);
}

LaurentSeries determinant(const SeriesMatrix& a) {
  std::vector<int> idx(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return minorDeterminant(a, idx, idx);
}

ComplexMatrix evaluateMatrix(const SeriesMatrix& a, double t) {
  const int n = a.size();
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = evaluate(a(i, j), t);
  return m;
}

double maxCoeffDifference(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size() != b.size())
    throw ShapeMismatch("matrix difference dimensions do not match");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      m = std::max(m, maxCoeffDifference(a(i, j), b(i, j)));
  return m;
}

}  // namespace tropsvd
