#include "ncg/fermionic.hpp"

#include <algorithm>
#include <set>

namespace ncg {

namespace {

Mode negate(const Mode& m) { return {-m[0], -m[1], -m[2], -m[3]}; }
Mode add(const Mode& a, const Mode& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

// Finite-triple data of the electrodynamics model on the basis
// (e_L, e_R, ebar_L, ebar_R).
CMatrix gamma_finite() {
  CMatrix g = CMatrix::Zero(4, 4);
  g.diagonal() << 1, -1, -1, 1;
  return g;
}

CMatrix unitary_finite() {
  CMatrix u = CMatrix::Zero(4, 4);
  u(2, 0) = u(3, 1) = u(0, 2) = u(1, 3) = 1;
  return u;
}

CMatrix dirac_finite(Complex d) {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 1) = d;
  m(1, 0) = std::conj(d);
  m(2, 3) = std::conj(d);
  m(3, 2) = d;
  return m;
}

CMatrix b_finite() {
  CMatrix b = CMatrix::Zero(4, 4);
  b.diagonal() << 1, 1, -1, -1;
  return b;
}

}  // namespace

ModeSpace ModeSpace::make(std::vector<Mode> modes, double side_length) {
  std::set<Mode> closed(modes.begin(), modes.end());
  for (const auto& m : modes) closed.insert(negate(m));
  ModeSpace ms;
  ms.modes.assign(closed.begin(), closed.end());
  ms.side_length = side_length;
  return ms;
}

int ModeSpace::index_of(const Mode& m) const {
  auto it = std::lower_bound(modes.begin(), modes.end(), m);
  if (it == modes.end() || *it != m) return -1;
  return static_cast<int>(it - modes.begin());
}

Eigen::Vector4d ModeSpace::momentum(int mode_index) const {
  const Mode& m = modes[static_cast<size_t>(mode_index)];
  Eigen::Vector4d p;
  const double k = 2.0 * M_PI / side_length;
  for (int i = 0; i < 4; ++i) p(i) = k * m[i];
  return p;
}

HPlusBasis build_hplus(const ModeSpace& ms, const GammaSet& g) {
  // Fiber index 4 * spinor + finite. Slots: chi_L = spinor+ (x) e_L,
  // chi_R = spinor- (x) e_R, psi_R = spinor- (x) ebar_L,
  // psi_L = spinor+ (x) ebar_R.
  const CMatrix grading = kron(g.gamma5, gamma_finite());
  struct SlotDef {
    SlotType slot;
    int fin;
    std::array<int, 2> spinor;
  };
  const SlotDef defs[] = {
      {SlotType::ChiL, 0, {0, 1}},
      {SlotType::ChiR, 1, {2, 3}},
      {SlotType::PsiR, 2, {2, 3}},
      {SlotType::PsiL, 3, {0, 1}},
  };
  HPlusBasis basis;
  for (int k = 0; k < ms.mode_count(); ++k) {
    for (const auto& def : defs) {
      for (int s : def.spinor) {
        HPlusElement e;
        e.mode = k;
        e.slot = def.slot;
        e.vector = CVector::Zero(ms.dim());
        const Eigen::Index fiber = 4 * s + def.fin;
        e.vector(16 * k + fiber) = 1.0;
        // Projector residual check.
        const CVector gv = grading * e.vector.segment(16 * k, 16);
        CVector full = CVector::Zero(ms.dim());
        full.segment(16 * k, 16) = gv;
        if ((full - e.vector).cwiseAbs().maxCoeff() > 1e-12)
          throw StructuralError("H+ basis element not in +1 eigenspace");
        basis.elements.push_back(std::move(e));
      }
    }
  }
  return basis;
}

CMatrix real_structure_matrix_unitary(const ModeSpace& ms, const GammaSet& g) {
  const CMatrix u16 = kron(charge_conjugation(g).unitary, unitary_finite());
  CMatrix U = CMatrix::Zero(ms.dim(), ms.dim());
  for (int k = 0; k < ms.mode_count(); ++k) {
    const int nk = ms.index_of(negate(ms.modes[static_cast<size_t>(k)]));
    if (nk < 0) throw StructuralError("mode set not closed under negation");
    U.block(16 * nk, 16 * k, 16, 16) = u16;
  }
  return U;
}

CVector apply_real_structure(const ModeSpace& ms, const GammaSet& g, const CVector& v) {
  return real_structure_matrix_unitary(ms, g) * v.conjugate();
}

CMatrix dirac_operator(const ModeSpace& ms, const GammaSet& g,
                       const std::vector<GaugeMode>& gauge, Complex d) {
  const Eigen::Index n = ms.dim();
  CMatrix D = CMatrix::Zero(n, n);
  const CMatrix I4 = identity(4);
  const CMatrix DF = dirac_finite(d);
  const CMatrix B = b_finite();

  for (int k = 0; k < ms.mode_count(); ++k) {
    const Eigen::Vector4d p = ms.momentum(k);
    CMatrix slash = CMatrix::Zero(4, 4);
    for (int mu = 0; mu < 4; ++mu) slash += p(mu) * g.gammas[mu];
    D.block(16 * k, 16 * k, 16, 16) = kron(slash, I4) + kron(g.gamma5, DF);
  }

  for (const auto& gm : gauge) {
    const bool zero_mode = gm.q == Mode{0, 0, 0, 0};
    if (zero_mode && (gm.coeff.imag().cwiseAbs().maxCoeff() > 1e-12))
      throw InvalidInput("zero-mode gauge coefficient must be real");
    bool coupled = false;
    auto add_term = [&](const Mode& q, const Eigen::Vector4cd& c) {
      CMatrix gc = CMatrix::Zero(4, 4);
      for (int mu = 0; mu < 4; ++mu) gc += c(mu) * g.gammas[mu];
      const CMatrix blk = kron(gc, B);
      for (int k = 0; k < ms.mode_count(); ++k) {
        const int to = ms.index_of(add(ms.modes[static_cast<size_t>(k)], q));
        if (to < 0) continue;
        D.block(16 * to, 16 * k, 16, 16) += blk;
        coupled = true;
      }
    };
    add_term(gm.q, gm.coeff);
    if (!zero_mode) add_term(negate(gm.q), gm.coeff.conjugate());
    if (!coupled)
      throw InvalidInput("gauge mode couples no fermion modes in the truncation");
  }
  return D;
}

GrassmannQuadratic fermionic_action_grassmann(const CMatrix& D_A,
                                              const HPlusBasis& basis,
                                              const ModeSpace& ms,
                                              const GammaSet& g) {
  const Eigen::Index n = basis.dim();
  const CMatrix UJ = real_structure_matrix_unitary(ms, g);
  CMatrix B(ms.dim(), n);
  for (Eigen::Index j = 0; j < n; ++j)
    B.col(j) = basis.elements[static_cast<size_t>(j)].vector;
  const CMatrix M = (UJ * B.conjugate()).adjoint() * (D_A * B);
  GrassmannQuadratic q;
  q.coeff = 0.5 * (M - M.transpose());
  return q;
}

GrassmannQuadratic decomposed_action(const HPlusBasis& basis, const ModeSpace& ms,
                                     const GammaSet& g,
                                     const std::vector<GaugeMode>& gauge, double m) {
  const Eigen::Index n = basis.dim();
  const CMatrix UM = charge_conjugation(g).unitary;
  const Complex d(0, -m);  // d = -i m

  auto spinor_of = [&](const HPlusElement& e) {
    // 4-spinor unit vector carried by the element.
    const Eigen::Index fiber = [&] {
      for (Eigen::Index idx = 0; idx < e.vector.size(); ++idx)
        if (std::abs(e.vector(idx)) > 0.5) return idx % 16;
      throw StructuralError("empty basis element");
    }();
    CVector s = CVector::Zero(4);
    s(fiber / 4) = 1.0;
    return s;
  };
  auto is_chi = [](SlotType s) { return s == SlotType::ChiL || s == SlotType::ChiR; };
  auto is_psi = [](SlotType s) { return s == SlotType::PsiL || s == SlotType::PsiR; };

  CMatrix N = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& ei = basis.elements[static_cast<size_t>(i)];
    if (!is_chi(ei.slot)) continue;
    const CVector jchi = UM * spinor_of(ei).conjugate();
    const Mode mi = ms.modes[static_cast<size_t>(ei.mode)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& ej = basis.elements[static_cast<size_t>(j)];
      if (!is_psi(ej.slot)) continue;
      const CVector psi = spinor_of(ej);
      const Mode mj = ms.modes[static_cast<size_t>(ej.mode)];

      // Kinetic term <J_M chi, slashD psi>: modes must satisfy -k_i = k_j.
      if (negate(mi) == mj) {
        const Eigen::Vector4d p = ms.momentum(ej.mode);
        CMatrix slash = CMatrix::Zero(4, 4);
        for (int mu = 0; mu < 4; ++mu) slash += p(mu) * g.gammas[mu];
        N(i, j) += jchi.dot(slash * psi);
        // Mass terms <J_M chi_L, dbar psi_L> - <J_M chi_R, d psi_R>.
        if (ei.slot == SlotType::ChiL && ej.slot == SlotType::PsiL)
          N(i, j) += std::conj(d) * jchi.dot(psi);
        if (ei.slot == SlotType::ChiR && ej.slot == SlotType::PsiR)
          N(i, j) -= d * jchi.dot(psi);
      }
      // Gauge term -<J_M chi, gamma^mu Y_mu psi>: -k_i = k_j + q.
      for (const auto& gm : gauge) {
        const bool zero_mode = gm.q == Mode{0, 0, 0, 0};
        auto add_term = [&](const Mode& q, const Eigen::Vector4cd& c) {
          if (negate(mi) != add(mj, q)) return;
          CMatrix gc = CMatrix::Zero(4, 4);
          for (int mu = 0; mu < 4; ++mu) gc += c(mu) * g.gammas[mu];
          N(i, j) -= jchi.dot(gc * psi);
        };
        add_term(gm.q, gm.coeff);
        if (!zero_mode) add_term(negate(gm.q), gm.coeff.conjugate());
      }
    }
  }
  GrassmannQuadratic q;
  // Each unordered (chi, psi) pair appears exactly once in the chi x psi
  // sum, with the 1/2 prefactor already absorbed; antisymmetrizing without
  // a further 1/2 reproduces the canonical coefficient matrix.
  q.coeff = N - N.transpose();
  return q;
}

double certify_decomposition(const ModeSpace& ms, const GammaSet& g,
                             const std::vector<GaugeMode>& gauge, double m) {
  const HPlusBasis basis = build_hplus(ms, g);
  const CMatrix D = dirac_operator(ms, g, gauge, Complex(0, -m));
  const GrassmannQuadratic lhs = fermionic_action_grassmann(D, basis, ms, g);
  const GrassmannQuadratic rhs = decomposed_action(basis, ms, g, gauge, m);
  return (lhs.coeff - rhs.coeff).cwiseAbs().maxCoeff();
}

}  // namespace ncg
