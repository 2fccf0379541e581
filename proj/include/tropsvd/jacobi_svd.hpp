#ifndef TROPSVD_JACOBI_SVD_HPP
#define TROPSVD_JACOBI_SVD_HPP

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <vector>

#include "tropsvd/errors.hpp"

namespace tropsvd {

template <typename Real>
using ComplexMatrixT =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// A = U * diag(singularValues) * W with U, W unitary and the singular values
// sorted ascending (d_1 <= ... <= d_n).
template <typename Real>
struct SvdResultT {
  ComplexMatrixT<Real> u;
  RealVectorT<Real> singularValues;
  ComplexMatrixT<Real> w;
};

using SvdResult = SvdResultT<double>;

namespace detail {

// Unitary 2x2 factor diagonalizing the Hermitian Gram block
// [[app, apq], [conj(apq), aqq]]. Returned as (c, s, phase) with the columns
// transforming as
//   p' = c*e^{i phase} * p + s * q
//   q' = -s*e^{i phase} * p + c * q.
template <typename Real>
struct PlaneRotation {
  Real c;
  Real s;
  std::complex<Real> phase;
};

template <typename Real>
PlaneRotation<Real> makeRotation(Real app, Real aqq, std::complex<Real> apq) {
  const Real r = std::abs(apq);
  const std::complex<Real> phase = apq / r;
  const Real tau = (aqq - app) / (Real(2) * r);
  // Root of smaller magnitude of t^2 - 2*tau*t - 1 = 0.
  const Real sign = tau >= Real(0) ? Real(1) : Real(-1);
  const Real t = -sign / (std::abs(tau) + std::hypot(Real(1), tau));
  const Real c = Real(1) / std::hypot(Real(1), t);
  return {c, t * c, phase};
}

}  // namespace detail

// One-sided Jacobi SVD. Columns are orthogonalized by complex plane
// rotations applied on the right until every column pair passes the relative
// threshold |<v_p, v_q>| <= tol * ||v_p|| * ||v_q||. Column norms then carry
// the singular values at high relative accuracy even when they span many
// orders of magnitude, which is what the convergence harness depends on;
// the Gram matrix A*A is never formed.
//
// When the grading sits in the rows rather than the columns, the sweep runs
// on the adjoint (singular values are invariant; U and W swap roles), so
// both orientations of diag(t^v)-scaled matrices are handled.
template <typename Real>
SvdResultT<Real> svd(const ComplexMatrixT<Real>& a, Real tol = Real(1e-15),
                     int maxSweeps = 30) {
  using Cplx = std::complex<Real>;
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw InputError("svd expects a square matrix");
  if (!a.allFinite()) throw InputError("svd expects finite entries");

  // Pick the orientation whose columns carry the scale spread.
  bool flipped = false;
  {
    Real rowMax = 0, rowMin = 0, colMax = 0, colMin = 0;
    bool rowAny = false, colAny = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Real rn = a.row(i).norm();
      if (rn > Real(0)) {
        rowMax = rowAny ? std::max(rowMax, rn) : rn;
        rowMin = rowAny ? std::min(rowMin, rn) : rn;
        rowAny = true;
      }
      const Real cn = a.col(i).norm();
      if (cn > Real(0)) {
        colMax = colAny ? std::max(colMax, cn) : cn;
        colMin = colAny ? std::min(colMin, cn) : cn;
        colAny = true;
      }
    }
    if (rowAny && colAny && rowMax / rowMin > colMax / colMin) flipped = true;
  }

  ComplexMatrixT<Real> v = flipped ? ComplexMatrixT<Real>(a.adjoint()) : a;
  ComplexMatrixT<Real> acc = ComplexMatrixT<Real>::Identity(n, n);

  for (int sweep = 0; sweep < maxSweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real app = v.col(p).squaredNorm();
        const Real aqq = v.col(q).squaredNorm();
        const Cplx apq = v.col(p).dot(v.col(q));
        if (std::abs(apq) <= tol * std::sqrt(app) * std::sqrt(aqq)) continue;
        rotated = true;
        const auto rot = detail::makeRotation<Real>(app, aqq, apq);
        const Cplx cp = rot.c * rot.phase;
        const ComplexVectorT<Real> vp = v.col(p);
        v.col(p) = cp * vp + rot.s * v.col(q);
        v.col(q) = -rot.s * rot.phase * vp + rot.c * v.col(q);
        const ComplexVectorT<Real> ap = acc.col(p);
        acc.col(p) = cp * ap + rot.s * acc.col(q);
        acc.col(q) = -rot.s * rot.phase * ap + rot.c * acc.col(q);
      }
    }
    if (!rotated) break;
  }

  // Certify orthogonality; hitting the sweep cap while pairs still rotate
  // signals pathological input.
  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const Real np = v.col(p).norm();
      const Real nq = v.col(q).norm();
      if (std::abs(v.col(p).dot(v.col(q))) > Real(4) * tol * np * nq)
        throw NoConvergence(maxSweeps);
    }
  }

  SvdResultT<Real> result;
  result.singularValues.resize(n);
  result.u.resize(n, n);
  std::vector<Eigen::Index> zeroCols;
  for (Eigen::Index j = 0; j < n; ++j) {
    const Real norm = v.col(j).norm();
    result.singularValues[j] = norm;
    if (norm > Real(0)) {
      result.u.col(j) = v.col(j) / norm;
    } else {
      result.u.col(j).setZero();
      zeroCols.push_back(j);
    }
  }

  // Exactly-zero columns get an orthonormal completion so U stays unitary.
  for (Eigen::Index j : zeroCols) {
    ComplexVectorT<Real> best = ComplexVectorT<Real>::Zero(n);
    Real bestNorm = Real(-1);
    for (Eigen::Index b = 0; b < n; ++b) {
      ComplexVectorT<Real> cand = ComplexVectorT<Real>::Zero(n);
      cand[b] = Cplx(1, 0);
      for (Eigen::Index l = 0; l < n; ++l) {
        if (l == j || result.u.col(l).isZero()) continue;
        cand -= result.u.col(l).dot(cand) * result.u.col(l);
      }
      const Real cn = cand.norm();
      if (cn > bestNorm) {
        bestNorm = cn;
        best = cand;
      }
    }
    result.u.col(j) = best / bestNorm;
  }

  // Sort ascending, permuting U columns and W rows together.
  std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Eigen::Index(0));
  std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index x, Eigen::Index y) {
    return result.singularValues[x] < result.singularValues[y];
  });
  SvdResultT<Real> sorted;
  sorted.singularValues.resize(n);
  sorted.u.resize(n, n);
  sorted.w.resize(n, n);
  const ComplexMatrixT<Real> wFull = acc.adjoint();
  for (Eigen::Index i = 0; i < n; ++i) {
    sorted.singularValues[i] = result.singularValues[idx[static_cast<std::size_t>(i)]];
    sorted.u.col(i) = result.u.col(idx[static_cast<std::size_t>(i)]);
    sorted.w.row(i) = wFull.row(idx[static_cast<std::size_t>(i)]);
  }

  if (flipped) {
    SvdResultT<Real> back;
    back.singularValues = sorted.singularValues;
    back.u = sorted.w.adjoint();
    back.w = sorted.u.adjoint();
    return back;
  }
  return sorted;
}

// Eigenvalues of a Hermitian matrix, ascending, by two-sided cyclic Jacobi.
// Serves as the oracle route for the min-max checks: d_k(A)^2 equals the
// k-th eigenvalue of A*A.
template <typename Real>
RealVectorT<Real> hermitianEigenvalues(const ComplexMatrixT<Real>& h,
                                       Real tol = Real(1e-15),
                                       int maxSweeps = 30) {
  using Cplx = std::complex<Real>;
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw InputError("expected a square matrix");
  const Real scale = h.norm();
  if ((h - h.adjoint()).norm() > Real(1e-12) * scale) throw NotHermitian();

  ComplexMatrixT<Real> m = ((h + h.adjoint()) / Real(2)).eval();
  for (int sweep = 0; sweep < maxSweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real app = m(p, p).real();
        const Real aqq = m(q, q).real();
        const Cplx apq = m(p, q);
        if (std::abs(apq) <=
            tol * std::sqrt(std::abs(app)) * std::sqrt(std::abs(aqq)))
          continue;
        rotated = true;
        const auto rot = detail::makeRotation<Real>(app, aqq, apq);
        const Cplx cp = rot.c * rot.phase;
        const ComplexVectorT<Real> colp = m.col(p);
        m.col(p) = cp * colp + rot.s * m.col(q);
        m.col(q) = -rot.s * rot.phase * colp + rot.c * m.col(q);
        const Eigen::Matrix<Cplx, 1, Eigen::Dynamic> rowp = m.row(p);
        m.row(p) = std::conj(cp) * rowp + rot.s * m.row(q);
        m.row(q) = -rot.s * std::conj(rot.phase) * rowp + rot.c * m.row(q);
        m(p, q) = Cplx(0, 0);
        m(q, p) = Cplx(0, 0);
        m(p, p) = Cplx(m(p, p).real(), 0);
        m(q, q) = Cplx(m(q, q).real(), 0);
      }
    }
    if (!rotated) break;
  }
  for (Eigen::Index p = 0; p + 1 < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q)
      if (std::abs(m(p, q)) >
          Real(4) * tol *
              std::sqrt(std::abs(m(p, p).real()) * std::abs(m(q, q).real())) +
              Real(4) * std::numeric_limits<Real>::epsilon() * scale)
        throw NoConvergence(maxSweeps);

  RealVectorT<Real> eig(n);
  for (Eigen::Index i = 0; i < n; ++i) eig[i] = m(i, i).real();
  std::sort(eig.data(), eig.data() + n);
  return eig;
}

// Rayleigh quotient (Hx, x)/(x, x); the residual imaginary part of a
// Hermitian quadratic form is discarded after a scale check.
template <typename Real>
Real rayleigh(const ComplexMatrixT<Real>& h, const ComplexVectorT<Real>& x) {
  if (x.norm() == Real(0)) throw ZeroVector();
  const std::complex<Real> num = x.dot(h * x);
  const Real scale = h.norm() * x.squaredNorm();
  if (std::abs(num.imag()) > Real(1e-12) * scale) throw NotHermitian();
  return num.real() / x.squaredNorm();
}

}  // namespace tropsvd

#endif  // TROPSVD_JACOBI_SVD_HPP
