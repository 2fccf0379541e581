#ifndef TROPSVD_SERIES_MATRIX_HPP
#define TROPSVD_SERIES_MATRIX_HPP

#include <Eigen/Core>
#include <vector>

#include "tropsvd/laurent_series.hpp"

namespace tropsvd {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Square matrix of Laurent series sharing one ramification index. The
// symbolic side of the system; everything numeric happens on the
// Eigen::MatrixXcd produced by evaluateMatrix.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  explicit SeriesMatrix(int n, int ramification = 1);

  static SeriesMatrix identity(int n, int ramification = 1,
                               int precision = LaurentSeries::kDefaultPrecision);

  int size() const { return n_; }
  int ramification() const { return ramification_; }

  const LaurentSeries& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }

  // Entries are lifted to the matrix ramification; a series whose index does
  // not divide it is rejected.
  void set(int i, int j, const LaurentSeries& s);

  void swapRows(int a, int b);
  void swapCols(int a, int b);

  int maxPrecision() const;

 private:
  int n_ = 0;
  int ramification_ = 1;
  std::vector<LaurentSeries> entries_;
};

SeriesMatrix matmul(const SeriesMatrix& a, const SeriesMatrix& b);

// Exact cofactor determinant in series arithmetic. Returns the zero series
// for structurally singular input; PrecisionExhausted propagates when
// cancellation eats the coefficient window.
LaurentSeries determinant(const SeriesMatrix& a);

// Determinant of the submatrix picked out by row/column index lists.
LaurentSeries minorDeterminant(const SeriesMatrix& a,
                               const std::vector<int>& rows,
                               const std::vector<int>& cols);

// Entrywise numeric evaluation at t.
ComplexMatrix evaluateMatrix(const SeriesMatrix& a, double t);

// Largest magnitude of any known coefficient of a - b, entrywise.
double maxCoeffDifference(const SeriesMatrix& a, const SeriesMatrix& b);

}  // namespace tropsvd

#endif  // TROPSVD_SERIES_MATRIX_HPP
