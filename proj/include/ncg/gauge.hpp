#ifndef NCG_GAUGE_HPP
#define NCG_GAUGE_HPP

#include <vector>

#include "ncg/triple.hpp"

namespace ncg {

enum class SubalgebraKind { A_J, A_tilde_J };

struct SubalgebraBasis {
  SubalgebraKind kind = SubalgebraKind::A_tilde_J;
  std::vector<CMatrix> basis;  // real-linear basis inside span(rep_basis)

  Eigen::Index real_dim() const { return static_cast<Eigen::Index>(basis.size()); }
};

struct GaugeGroupInfo {
  Eigen::Index dim_u_A = 0;
  Eigen::Index dim_u_tilde = 0;
  Eigen::Index dim_gauge = 0;       // rank of X -> X + J X J^{-1} on u(A)
  Eigen::Index torus_rank = 0;      // = dim_gauge for commutative algebras
  bool commutative = true;          // noncommutative summands: Lie-algebra level only
  bool exact = false;               // dim_gauge == dim_u_A - dim_u_tilde
};

struct OneForm {
  CMatrix matrix;
};

// Real-linear basis of {a : aJ = Ja} (A_J) or {a : aJ = Ja*} (A_tilde_J)
// inside the represented algebra.
SubalgebraBasis subalgebra(const FiniteTriple& t, SubalgebraKind kind);

GaugeGroupInfo gauge_group(const FiniteTriple& t);

// Independent real basis of the self-adjoint part of span{a_i [D, b_j]}.
std::vector<OneForm> omega1_basis(const FiniteTriple& t);

// D + A + eps' J A J^{-1}.
CMatrix fluctuate(const FiniteTriple& t, const OneForm& A);

// A - J A J^{-1}; the combination in which a pointwise gauge potential
// enters the fluctuated Dirac operator of the product geometry.
CMatrix b_field(const FiniteTriple& t, const CMatrix& A);

// u J u J^* as a linear operator: u * (U conj(u) U^H).
CMatrix adjoint_unitary(const FiniteTriple& t, const CMatrix& u);

// A^u = u A u^* + u [D, u^*]. Asserts the covariance identity
// fluctuate(A^u) = Ad(u) fluctuate(A) Ad(u)^* and rejects non-unitary u.
OneForm gauge_transform(const OneForm& A, const CMatrix& u, const FiniteTriple& t);

}  // namespace ncg

#endif
