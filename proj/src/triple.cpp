#include "ncg/triple.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace ncg {

namespace {

// Sign table, even columns carry epsilon''.
struct KORow {
  int n, eps, epsp;
  std::optional<int> epspp;
};

const KORow kKOTable[] = {
    {0, 1, 1, 1},   {1, 1, -1, std::nullopt},  {2, -1, 1, -1},
    {3, -1, 1, std::nullopt}, {4, -1, 1, 1},   {5, -1, -1, std::nullopt},
    {6, 1, 1, -1},  {7, 1, 1, std::nullopt},
};

double residual(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

std::optional<int> classify_KO(const RealStructureSigns& signs) {
  for (const auto& row : kKOTable) {
    if (row.eps != signs.epsilon || row.epsp != signs.epsilon_prime) continue;
    if (row.epspp.has_value() != signs.epsilon_double_prime.has_value()) continue;
    if (row.epspp && *row.epspp != *signs.epsilon_double_prime) continue;
    return row.n;
  }
  return std::nullopt;
}

RealStructureSigns signs_for_KO(int n) {
  for (const auto& row : kKOTable)
    if (row.n == ((n % 8) + 8) % 8)
      return {row.eps, row.epsp, row.epspp};
  throw StructuralError("signs_for_KO: bad dimension");
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AxiomReport verify_axioms(const FiniteTriple& t) {
  const Eigen::Index n = t.hilbert_dim;
  for (const auto& a : t.rep_basis)
    if (a.rows() != n || a.cols() != n)
      throw StructuralError("rep matrix dimension mismatch");
  if (t.dirac && (t.dirac->rows() != n || t.dirac->cols() != n))
    throw StructuralError("dirac dimension mismatch");
  if (t.grading && (t.grading->rows() != n || t.grading->cols() != n))
    throw StructuralError("grading dimension mismatch");
  if (t.real && (t.real->unitary.rows() != n || t.real->unitary.cols() != n))
    throw StructuralError("real structure dimension mismatch");

  AxiomReport rep;
  const double tol = t.tol.eps;
  auto add = [&](const std::string& name, double res) {
    AxiomCheck c{name, res, res < tol};
    rep.all_pass = rep.all_pass && c.pass;
    rep.checks.push_back(std::move(c));
  };

  const CMatrix I = identity(n);
  if (t.dirac) add("dirac_self_adjoint", residual(*t.dirac - t.dirac->adjoint()));
  if (t.grading) {
    const CMatrix& g = *t.grading;
    add("grading_self_adjoint", residual(g - g.adjoint()));
    add("grading_squares_to_identity", residual(g * g - I));
    double r = 0;
    for (const auto& a : t.rep_basis) r = std::max(r, residual(commutator(g, a)));
    add("grading_commutes_with_algebra", r);
    if (t.dirac) add("dirac_odd", residual(anticommutator(*t.dirac, g)));
  }
  if (t.real) {
    const auto& J = *t.real;
    const CMatrix& U = J.unitary;
    add("J_unitary", residual(U * U.adjoint() - I));
    // J^2 v = U conj(U) v.
    add("J_squared", residual(U * U.conjugate() -
                              Complex(J.signs.epsilon, 0) * I));
    if (t.dirac) {
      // JD = eps' DJ  <=>  U conj(D) = eps' D U.
      add("JD_sign", residual(U * t.dirac->conjugate() -
                              Complex(J.signs.epsilon_prime, 0) * (*t.dirac) * U));
    }
    if (t.grading && J.signs.epsilon_double_prime) {
      add("Jgamma_sign",
          residual(U * t.grading->conjugate() -
                   Complex(*J.signs.epsilon_double_prime, 0) * (*t.grading) * U));
    }
    double r0 = 0, r1 = 0;
    for (const auto& a : t.rep_basis) {
      for (const auto& b : t.rep_basis) {
        const CMatrix b0 = J.right_action(b);
        r0 = std::max(r0, residual(commutator(a, b0)));
        if (t.dirac)
          r1 = std::max(r1, residual(commutator(commutator(*t.dirac, a), b0)));
      }
    }
    add("order_zero", r0);
    if (t.dirac) add("order_one", r1);
    rep.ko_dimension = classify_KO(J.signs);
    if (!rep.ko_dimension) {
      add("signs_in_KO_table", 1.0);
    }
  }
  // Unital *-homomorphism sanity: the represented algebra should be closed
  // under products of basis elements for C^k idempotent bases, and the sum
  // of idempotents should be the identity. Only meaningful when the algebra
  // is a sum of one-dimensional summands.
  bool all_scalar = true;
  for (auto s : t.algebra_summands) all_scalar = all_scalar && s == 1;
  if (all_scalar && !t.rep_basis.empty()) {
    CMatrix sum = CMatrix::Zero(n, n);
    double rid = 0;
    for (const auto& a : t.rep_basis) {
      sum += a;
      rid = std::max(rid, residual(a * a - a));
      rid = std::max(rid, residual(a - a.adjoint()));
    }
    add("rep_idempotents", rid);
    add("rep_unital", residual(sum - I));
  }
  return rep;
}

RealStructureForm real_structure_form(const FiniteTriple& t) {
  RealStructureForm out;
  if (!t.grading || !t.real) throw StructuralError("need grading and real structure");
  const double tol = t.tol.eps;

  // Orthonormal eigenbasis of the grading, + block first.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(*t.grading);
  std::vector<Eigen::Index> plus, minus;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    (es.eigenvalues()(i) > 0 ? plus : minus).push_back(i);
  const Eigen::Index np = static_cast<Eigen::Index>(plus.size());
  const Eigen::Index nm = static_cast<Eigen::Index>(minus.size());
  CMatrix P(t.hilbert_dim, t.hilbert_dim);
  Eigen::Index col = 0;
  for (auto i : plus) P.col(col++) = es.eigenvectors().col(i);
  for (auto i : minus) P.col(col++) = es.eigenvectors().col(i);

  // J in the eigenbasis: v' -> P^H U conj(P) conj(v').
  const CMatrix U = P.adjoint() * t.real->unitary * P.conjugate();
  const auto& signs = t.real->signs;
  auto ko = classify_KO(signs);
  if (!ko || *ko % 2 != 0) {
    out.detail = "signs do not match an even KO column";
    return out;
  }
  out.ko = *ko;

  const auto A = U.topLeftCorner(np, np);
  const auto B = U.topRightCorner(np, nm);
  const auto C = U.bottomLeftCorner(nm, np);
  const auto D = U.bottomRightCorner(nm, nm);

  double res = 0;
  if (*ko == 0 || *ko == 4) {
    out.pattern = RealFormPattern::Diagonal;
    out.j_plus = A;
    out.j_minus = D;
    res = std::max(residual(CMatrix(B)), residual(CMatrix(C)));
    const double sym = (*ko == 0) ? 1.0 : -1.0;
    res = std::max(res, residual(CMatrix(A - sym * A.transpose())));
    res = std::max(res, residual(CMatrix(D - sym * D.transpose())));
    res = std::max(res, residual(CMatrix(A * A.adjoint() - identity(np))));
    res = std::max(res, residual(CMatrix(D * D.adjoint() - identity(nm))));
  } else {
    out.pattern = RealFormPattern::OffDiagonal;
    out.j_plus = B;
    res = std::max(residual(CMatrix(A)), residual(CMatrix(D)));
    const double sgn = (*ko == 6) ? 1.0 : -1.0;
    res = std::max(res, residual(CMatrix(C - sgn * B.transpose())));
    res = std::max(res, residual(CMatrix(B * B.adjoint() - identity(np))));
  }
  out.residual = res;
  out.ok = res < std::max(10 * tol, 1e-8);
  if (!out.ok) out.detail = "block pattern residual too large";
  return out;
}

std::vector<CMatrix> solve_dirac_space(const FiniteTriple& t) {
  if (!t.grading || !t.real) throw StructuralError("need grading and real structure");
  const auto& J = *t.real;
  const CMatrix& g = *t.grading;
  const double epsp = J.signs.epsilon_prime;

  std::vector<RealLinearMap> constraints;
  constraints.push_back([&g](const CMatrix& D) { return CMatrix(anticommutator(D, g)); });
  constraints.push_back([&J, epsp](const CMatrix& D) {
    return CMatrix(J.unitary * D.conjugate() - epsp * D * J.unitary);
  });
  for (const auto& a : t.rep_basis) {
    for (const auto& b : t.rep_basis) {
      const CMatrix b0 = J.right_action(b);
      constraints.push_back([a, b0](const CMatrix& D) {
        return CMatrix(commutator(commutator(D, a), b0));
      });
    }
  }
  return real_null_space(hermitian_space(t.hilbert_dim), constraints, t.tol.eps);
}

}  // namespace ncg
