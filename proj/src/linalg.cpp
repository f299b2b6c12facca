#include "ncg/linalg.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace ncg {

bool is_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

double spectral_norm(const CMatrix& m) {
  if (!is_finite(m)) throw InvalidInput("spectral_norm: non-finite entries");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index r = a.rows() * b.rows();
  const Eigen::Index c = a.cols() * b.cols();
  if (a.rows() != 0 && r / a.rows() != b.rows())
    throw StructuralError("kron: dimension overflow");
  CMatrix out(r, c);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix MatrixSpace::at(const RVector& p) const {
  CMatrix m = CMatrix::Zero(rows, cols);
  for (Eigen::Index k = 0; k < dim(); ++k) m += p(k) * basis[k];
  return m;
}

MatrixSpace hermitian_space(Eigen::Index n) {
  MatrixSpace s;
  s.rows = s.cols = n;
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    CMatrix e = CMatrix::Zero(n, n);
    e(i, i) = 1.0;
    s.basis.push_back(e);
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      CMatrix e = CMatrix::Zero(n, n);
      e(i, j) = r;
      e(j, i) = r;
      s.basis.push_back(e);
      CMatrix f = CMatrix::Zero(n, n);
      f(i, j) = Complex(0, r);
      f(j, i) = Complex(0, -r);
      s.basis.push_back(f);
    }
  return s;
}

MatrixSpace antihermitian_space(Eigen::Index n) {
  MatrixSpace s = hermitian_space(n);
  for (auto& b : s.basis) b *= Complex(0, 1);
  return s;
}

MatrixSpace real_span(const std::vector<CMatrix>& mats) {
  MatrixSpace s;
  if (mats.empty()) return s;
  s.rows = mats.front().rows();
  s.cols = mats.front().cols();
  for (const auto& m : mats) {
    s.basis.push_back(m);
    s.basis.push_back(Complex(0, 1) * m);
  }
  return s;
}

RVector realify(const CMatrix& m) {
  RVector v(2 * m.size());
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      v(k++) = m(i, j).real();
      v(k++) = m(i, j).imag();
    }
  return v;
}

std::vector<CMatrix> real_null_space(const MatrixSpace& space,
                                     const std::vector<RealLinearMap>& constraints,
                                     double eps) {
  const Eigen::Index n = space.dim();
  std::vector<CMatrix> result;
  if (n == 0) return result;
  if (constraints.empty()) return space.basis;

  // Stack constraint(B_k), realified, as column k.
  std::vector<RVector> cols(n);
  Eigen::Index total_rows = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<RVector> pieces;
    Eigen::Index rows = 0;
    for (const auto& c : constraints) {
      RVector v = realify(c(space.basis[k]));
      rows += v.size();
      pieces.push_back(std::move(v));
    }
    RVector col(rows);
    Eigen::Index off = 0;
    for (const auto& p : pieces) {
      col.segment(off, p.size()) = p;
      off += p.size();
    }
    cols[k] = std::move(col);
    total_rows = rows;
  }
  RMatrix stacked(total_rows, n);
  for (Eigen::Index k = 0; k < n; ++k) stacked.col(k) = cols[k];

  Eigen::JacobiSVD<RMatrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = eps * std::max(smax, 1.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  for (Eigen::Index k = rank; k < n; ++k)
    result.push_back(space.at(svd.matrixV().col(k)));
  return result;
}

std::vector<CMatrix> reduce_real_span(const std::vector<CMatrix>& mats,
                                      double eps) {
  std::vector<CMatrix> result;
  if (mats.empty()) return result;
  const Eigen::Index len = 2 * mats.front().size();
  RMatrix stacked(len, static_cast<Eigen::Index>(mats.size()));
  for (Eigen::Index k = 0; k < stacked.cols(); ++k)
    stacked.col(k) = realify(mats[static_cast<size_t>(k)]);
  Eigen::JacobiSVD<RMatrix> svd(stacked, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double cut = eps * std::max(smax, 1.0);
  const Eigen::Index r = mats.front().rows();
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= cut) break;
    RVector u = svd.matrixU().col(k);
    CMatrix m(r, mats.front().cols());
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      for (Eigen::Index i = 0; i < r; ++i) {
        m(i, j) = Complex(u(idx), u(idx + 1));
        idx += 2;
      }
    result.push_back(m);
  }
  return result;
}

}  // namespace ncg
