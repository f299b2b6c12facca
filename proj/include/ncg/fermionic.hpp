#ifndef NCG_FERMIONIC_HPP
#define NCG_FERMIONIC_HPP

#include <array>
#include <map>
#include <vector>

#include "ncg/clifford.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

using Mode = std::array<int, 4>;

// Finite Fourier truncation of L^2(M,S) (x) H_F on a flat 4-torus. The mode
// list must be closed under negation so that J acts within the space.
struct ModeSpace {
  std::vector<Mode> modes;
  double side_length = 2.0 * M_PI;

  static ModeSpace make(std::vector<Mode> modes, double side_length = 2.0 * M_PI);

  Eigen::Index mode_count() const { return static_cast<Eigen::Index>(modes.size()); }
  Eigen::Index dim() const { return 16 * mode_count(); }
  int index_of(const Mode& m) const;  // -1 if absent
  // Momentum 2*pi*kappa/L.
  Eigen::Vector4d momentum(int mode_index) const;
};

enum class SlotType { ChiL, ChiR, PsiR, PsiL };

struct HPlusElement {
  int mode = 0;
  SlotType slot = SlotType::ChiL;
  CVector vector;  // in the full ModeSpace (x) C^16 coordinates
};

struct HPlusBasis {
  std::vector<HPlusElement> elements;
  Eigen::Index dim() const { return static_cast<Eigen::Index>(elements.size()); }
};

// Single nonzero Fourier mode of the gauge field: Y_mu(x) ~ coeff_mu e^{iqx}.
// A real field carries the pair (q, c) and (-q, conj(c)).
struct GaugeMode {
  Mode q{};
  Eigen::Vector4cd coeff = Eigen::Vector4cd::Zero();
};

struct GrassmannQuadratic {
  CMatrix coeff;  // antisymmetric, indexed by the H+ basis

  double max_abs() const { return coeff.size() ? coeff.cwiseAbs().maxCoeff() : 0.0; }
};

// Ordered basis of the +1 eigenspace of gamma5 (x) gamma_F, tagged by the
// four-slot decomposition chi_L, chi_R, psi_R, psi_L.
HPlusBasis build_hplus(const ModeSpace& ms, const GammaSet& g);

// J = J_M (x) J_F on the truncated space (mode kappa -> -kappa).
CMatrix real_structure_matrix_unitary(const ModeSpace& ms, const GammaSet& g);

// Applies J to a coefficient vector: v -> U_J conj(v).
CVector apply_real_structure(const ModeSpace& ms, const GammaSet& g, const CVector& v);

// Truncated fluctuated Dirac operator slashD (x) I + gamma^mu (x) B_mu +
// gamma5 (x) D_F for mass parameter d = -i m and the given gauge modes.
// A gauge mode coupling a fermion mode outside the truncation is rejected.
CMatrix dirac_operator(const ModeSpace& ms, const GammaSet& g,
                       const std::vector<GaugeMode>& gauge, Complex d);

// c_{ij} = antisymmetrization of <J e_i, D_A e_j>, with the 1/2 factor.
GrassmannQuadratic fermionic_action_grassmann(const CMatrix& D_A,
                                              const HPlusBasis& basis,
                                              const ModeSpace& ms,
                                              const GammaSet& g);

// Right side of the decomposition: the kinetic, gauge-coupling and mass
// terms assembled directly from the (chi, psi) spinor content of the basis.
GrassmannQuadratic decomposed_action(const HPlusBasis& basis, const ModeSpace& ms,
                                     const GammaSet& g,
                                     const std::vector<GaugeMode>& gauge, double m);

// Max |coefficient| difference between the two assembly routes.
double certify_decomposition(const ModeSpace& ms, const GammaSet& g,
                             const std::vector<GaugeMode>& gauge, double m);

}  // namespace ncg

#endif
