#include "ncg/clifford.hpp"

namespace ncg {

namespace {

CMatrix pauli(int k) {
  CMatrix s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

}  // namespace

GammaSet build_gammas() {
  GammaSet g;
  const CMatrix I2 = identity(2);
  // Chiral basis: g^k = [[0, i s_k], [-i s_k, 0]], g^4 = [[0, I], [I, 0]].
  for (int k = 1; k <= 3; ++k) {
    CMatrix m = CMatrix::Zero(4, 4);
    m.topRightCorner(2, 2) = Complex(0, 1) * pauli(k);
    m.bottomLeftCorner(2, 2) = Complex(0, -1) * pauli(k);
    g.gammas[k - 1] = m;
  }
  {
    CMatrix m = CMatrix::Zero(4, 4);
    m.topRightCorner(2, 2) = I2;
    m.bottomLeftCorner(2, 2) = I2;
    g.gammas[3] = m;
  }
  g.gamma5 = CMatrix::Zero(4, 4);
  g.gamma5.topLeftCorner(2, 2) = I2;
  g.gamma5.bottomRightCorner(2, 2) = -I2;

  // Phase relating gamma5 to the ordered product.
  const CMatrix prod = g.gammas[0] * g.gammas[1] * g.gammas[2] * g.gammas[3];
  g.gamma5_phase = g.gamma5(0, 0) / prod(0, 0);

  // Construction-time invariants.
  const CMatrix I4 = identity(4);
  for (int mu = 0; mu < 4; ++mu) {
    if ((g.gammas[mu] - g.gammas[mu].adjoint()).cwiseAbs().maxCoeff() > 1e-14)
      throw StructuralError("gamma not self-adjoint");
    for (int nu = 0; nu < 4; ++nu) {
      const CMatrix ac = anticommutator(g.gammas[mu], g.gammas[nu]);
      const CMatrix want = (mu == nu) ? CMatrix(2.0 * I4) : CMatrix(CMatrix::Zero(4, 4));
      if ((ac - want).cwiseAbs().maxCoeff() > 1e-14)
        throw StructuralError("Clifford relation failed");
    }
    if (anticommutator(g.gamma5, g.gammas[mu]).cwiseAbs().maxCoeff() > 1e-14)
      throw StructuralError("gamma5 does not anticommute");
  }
  if ((g.gamma5 * g.gamma5 - I4).cwiseAbs().maxCoeff() > 1e-14 ||
      (g.gamma5 - g.gamma5.adjoint()).cwiseAbs().maxCoeff() > 1e-14 ||
      (g.gamma5 - g.gamma5_phase * prod).cwiseAbs().maxCoeff() > 1e-12)
    throw StructuralError("gamma5 invariants failed");
  return g;
}

double trace_quad(const GammaSet& g, int mu, int nu, int rho, int sigma) {
  const Complex tr =
      (0.25 * g.gammas[mu] * g.gammas[nu] * g.gammas[rho] * g.gammas[sigma]).trace();
  return tr.real();
}

ChargeConjugation charge_conjugation(const GammaSet& g) {
  // Linear constraints on U: U conj(g^mu) + g^mu U = 0, U conj(g5) - g5 U = 0.
  std::vector<RealLinearMap> constraints;
  for (int mu = 0; mu < 4; ++mu) {
    const CMatrix gm = g.gammas[mu];
    constraints.push_back([gm](const CMatrix& U) {
      return CMatrix(U * gm.conjugate() + gm * U);
    });
  }
  const CMatrix g5 = g.gamma5;
  constraints.push_back([g5](const CMatrix& U) {
    return CMatrix(U * g5.conjugate() - g5 * U);
  });

  MatrixSpace full;
  full.rows = full.cols = 4;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      CMatrix e = CMatrix::Zero(4, 4);
      e(i, j) = 1.0;
      full.basis.push_back(e);
      e(i, j) = Complex(0, 1);
      full.basis.push_back(e);
    }
  auto kernel = real_null_space(full, constraints, 1e-12);
  if (kernel.empty()) throw StructuralError("no charge conjugation in this basis");

  // Scale to a unitary; singular values of any kernel element are equal.
  CMatrix U = kernel.front();
  Eigen::JacobiSVD<CMatrix> svd(U);
  U /= svd.singularValues()(0);
  const CMatrix I4 = identity(4);
  if ((U * U.adjoint() - I4).cwiseAbs().maxCoeff() > 1e-10)
    throw StructuralError("charge conjugation candidate not unitary");
  // J_M^2 = U conj(U) must equal -1 (KO-dimension 4 column).
  if ((U * U.conjugate() + I4).cwiseAbs().maxCoeff() > 1e-10)
    throw StructuralError("charge conjugation has wrong J^2 sign");
  return {U};
}

}  // namespace ncg
