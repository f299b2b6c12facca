#ifndef NCG_TRIPLE_HPP
#define NCG_TRIPLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ncg/linalg.hpp"

namespace ncg {

// Signs (epsilon, epsilon', epsilon'') of a real structure. The third sign
// is absent for odd triples.
struct RealStructureSigns {
  int epsilon = 1;
  int epsilon_prime = 1;
  std::optional<int> epsilon_double_prime;
};

// KO dimension n mod 8 from the sign table, or nullopt if the triple of
// signs appears in no column.
std::optional<int> classify_KO(const RealStructureSigns& signs);

// Sign column for a given even KO dimension.
RealStructureSigns signs_for_KO(int n);

// J v = U * conj(v).
struct RealStructure {
  CMatrix unitary;
  RealStructureSigns signs;

  CMatrix apply(const CMatrix& v) const { return unitary * v.conjugate(); }
  // J b J^{-1} as a complex-linear matrix: U conj(b) U^H.
  CMatrix sandwich(const CMatrix& b) const {
    return unitary * b.conjugate() * unitary.adjoint();
  }
  // Right action b^0 = J b* J^{-1} = U b^T U^H.
  CMatrix right_action(const CMatrix& b) const {
    return unitary * b.transpose() * unitary.adjoint();
  }
};

struct FiniteTriple {
  Eigen::Index hilbert_dim = 0;
  std::vector<Eigen::Index> algebra_summands;  // bundled examples use {1, 1}
  std::vector<CMatrix> rep_basis;
  std::optional<CMatrix> dirac;
  std::optional<CMatrix> grading;
  std::optional<RealStructure> real;
  Tolerance tol;
};

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  std::optional<int> ko_dimension;
  bool all_pass = true;

  const AxiomCheck* find(const std::string& name) const;
};

// Verifies the full battery: D self-adjoint, grading relations, J unitary,
// J^2 = eps, JD = eps' DJ, Jgamma = eps'' gamma J, order-zero and order-one
// conditions over all algebra basis pairs. Throws StructuralError on
// dimension mismatches.
AxiomReport verify_axioms(const FiniteTriple& t);

enum class RealFormPattern { Diagonal, OffDiagonal };

struct RealStructureForm {
  bool ok = false;
  RealFormPattern pattern = RealFormPattern::Diagonal;
  int ko = -1;
  // Diagonal case: j_plus, j_minus. Off-diagonal case: only j_plus (= j).
  CMatrix j_plus;
  CMatrix j_minus;
  double residual = 0.0;
  std::string detail;
};

// Canonical block form of J in the grading eigenbasis, per even KO
// dimension: diagonal j+/j- (KO 0 symmetric, KO 4 antisymmetric) or
// off-diagonal j with -j^T / j^T (KO 2 / KO 6).
RealStructureForm real_structure_form(const FiniteTriple& t);

// Basis of self-adjoint D with D gamma = -gamma D, JD = eps' DJ, and the
// order-one condition over all algebra basis pairs.
std::vector<CMatrix> solve_dirac_space(const FiniteTriple& t);

}  // namespace ncg

#endif
