#ifndef NCG_LINALG_HPP
#define NCG_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ncg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct Tolerance {
  double eps = 1e-9;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural problems (dimension mismatch, malformed file) as opposed to a
// mathematical check failing.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_finite(const CMatrix& m);

// Largest singular value.
double spectral_norm(const CMatrix& m);

CMatrix kron(const CMatrix& a, const CMatrix& b);

inline CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  return a * b - b * a;
}

inline CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  return a * b + b * a;
}

// A real-parametrized subspace of complex matrices: matrix(p) = sum_k p_k B_k
// with p real. Hermitian n x n matrices, anti-Hermitian matrices, and spans
// of given matrices are all instances.
struct MatrixSpace {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::vector<CMatrix> basis;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  CMatrix at(const RVector& p) const;
};

// Orthonormal basis: diag E_ii, (E_ij + E_ji)/sqrt2, i(E_ij - E_ji)/sqrt2.
MatrixSpace hermitian_space(Eigen::Index n);

// i * (hermitian basis).
MatrixSpace antihermitian_space(Eigen::Index n);

// Real span of {m, i m} for the given matrices (not reduced).
MatrixSpace real_span(const std::vector<CMatrix>& mats);

using RealLinearMap = std::function<CMatrix(const CMatrix&)>;

// Basis of {m in space : L(m) = 0 for every constraint L}. Rank is decided
// by singular values below eps * sigma_max of the stacked constraint matrix.
// An empty constraint list returns the full-space basis.
std::vector<CMatrix> real_null_space(const MatrixSpace& space,
                                     const std::vector<RealLinearMap>& constraints,
                                     double eps = 1e-9);

// Reduce a list of matrices to a linearly independent subset (over the
// reals), using the same relative singular-value threshold.
std::vector<CMatrix> reduce_real_span(const std::vector<CMatrix>& mats,
                                      double eps = 1e-9);

// Flatten to a real vector (re, im interleaved), and back.
RVector realify(const CMatrix& m);

}  // namespace ncg

#endif
