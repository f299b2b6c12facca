#include "ncg/gauge.hpp"

namespace ncg {

namespace {
double residual(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }
}  // namespace

SubalgebraBasis subalgebra(const FiniteTriple& t, SubalgebraKind kind) {
  if (!t.real) throw StructuralError("subalgebra: no real structure");
  const CMatrix& U = t.real->unitary;
  SubalgebraBasis out;
  out.kind = kind;
  std::vector<RealLinearMap> constraints;
  if (kind == SubalgebraKind::A_tilde_J) {
    // aJ = Ja*  <=>  a U = U a^T.
    constraints.push_back([&U](const CMatrix& a) {
      return CMatrix(a * U - U * a.transpose());
    });
  } else {
    // aJ = Ja  <=>  a U = U conj(a).
    constraints.push_back([&U](const CMatrix& a) {
      return CMatrix(a * U - U * a.conjugate());
    });
  }
  out.basis = real_null_space(real_span(t.rep_basis), constraints, t.tol.eps);
  return out;
}

GaugeGroupInfo gauge_group(const FiniteTriple& t) {
  if (!t.real) throw StructuralError("gauge_group: no real structure");
  GaugeGroupInfo info;
  for (auto s : t.algebra_summands) {
    info.dim_u_A += s * s;
    info.commutative = info.commutative && s == 1;
  }
  // u(A_tilde_J): the subalgebra is a complex involutive algebra; its
  // anti-Hermitian part has half the real dimension.
  const auto tilde = subalgebra(t, SubalgebraKind::A_tilde_J);
  info.dim_u_tilde = tilde.real_dim() / 2;

  // Rank of the Lie-algebra level Ad map X -> X + J X J^{-1} on u(A),
  // with u(A) spanned by i * rep_basis for commutative diagonal algebras.
  const CMatrix& U = t.real->unitary;
  std::vector<CMatrix> images;
  for (const auto& a : t.rep_basis) {
    const CMatrix X = Complex(0, 1) * a;
    images.push_back(CMatrix(X + U * X.conjugate() * U.adjoint()));
  }
  info.dim_gauge = static_cast<Eigen::Index>(reduce_real_span(images, t.tol.eps).size());
  if (info.commutative) info.torus_rank = info.dim_gauge;
  info.exact = info.dim_gauge == info.dim_u_A - info.dim_u_tilde;
  return info;
}

std::vector<OneForm> omega1_basis(const FiniteTriple& t) {
  if (!t.dirac) throw StructuralError("omega1_basis: no dirac");
  const CMatrix& D = *t.dirac;
  std::vector<CMatrix> span;
  for (const auto& a : t.rep_basis)
    for (const auto& b : t.rep_basis)
      span.push_back(CMatrix(a * commutator(D, b)));
  // Self-adjoint part of the complex span.
  std::vector<RealLinearMap> herm{[](const CMatrix& m) {
    return CMatrix(m - m.adjoint());
  }};
  MatrixSpace sp;
  {
    auto reduced = reduce_real_span(span, t.tol.eps);
    sp = real_span(reduced);
  }
  std::vector<OneForm> out;
  for (auto& m : real_null_space(sp, herm, t.tol.eps)) out.push_back({std::move(m)});
  return out;
}

CMatrix fluctuate(const FiniteTriple& t, const OneForm& A) {
  if (!t.dirac || !t.real) throw StructuralError("fluctuate: need dirac and real structure");
  if (residual(CMatrix(A.matrix - A.matrix.adjoint())) > 10 * t.tol.eps)
    throw InvalidInput("fluctuate: one-form not self-adjoint");
  const double epsp = t.real->signs.epsilon_prime;
  return *t.dirac + A.matrix + epsp * t.real->sandwich(A.matrix);
}

CMatrix b_field(const FiniteTriple& t, const CMatrix& A) {
  if (!t.real) throw StructuralError("b_field: no real structure");
  return A - t.real->sandwich(A);
}

CMatrix adjoint_unitary(const FiniteTriple& t, const CMatrix& u) {
  return u * t.real->sandwich(u);
}

OneForm gauge_transform(const OneForm& A, const CMatrix& u, const FiniteTriple& t) {
  if (!t.dirac || !t.real) throw StructuralError("gauge_transform: need dirac and real structure");
  const CMatrix I = identity(u.rows());
  if (residual(CMatrix(u * u.adjoint() - I)) > 10 * t.tol.eps)
    throw InvalidInput("gauge_transform: u not unitary");
  OneForm out;
  out.matrix = u * A.matrix * u.adjoint() + u * commutator(*t.dirac, u.adjoint());
  // Covariance: fluctuate(A^u) = Ad(u) fluctuate(A) Ad(u)^*, asserted on
  // every call.
  const CMatrix Ad = adjoint_unitary(t, u);
  const CMatrix lhs = fluctuate(t, out);
  const CMatrix rhs = Ad * fluctuate(t, A) * Ad.adjoint();
  if (residual(CMatrix(lhs - rhs)) > 1e3 * t.tol.eps)
    throw InvalidInput("gauge_transform: covariance identity violated");
  return out;
}

}  // namespace ncg
