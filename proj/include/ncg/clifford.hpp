#ifndef NCG_CLIFFORD_HPP
#define NCG_CLIFFORD_HPP

#include <array>

#include "ncg/linalg.hpp"

namespace ncg {

// Euclidean gamma matrices in the chiral basis, gamma5 = diag(1,1,-1,-1).
struct GammaSet {
  std::array<CMatrix, 4> gammas;
  CMatrix gamma5;
  Complex gamma5_phase;  // gamma5 = phase * g1 g2 g3 g4
};

GammaSet build_gammas();

// Tr(1/4 g_mu g_nu g_rho g_sigma); indices 0-based.
double trace_quad(const GammaSet& g, int mu, int nu, int rho, int sigma);

// Charge conjugation on spinors, J_M = unitary * complex conjugation, with
// KO-dimension 4 signs: J_M^2 = -1, J_M g^mu = -g^mu J_M, J_M g5 = g5 J_M.
struct ChargeConjugation {
  CMatrix unitary;
};

// Solves the sign constraints for the unitary part in the chosen basis.
// Throws if no antiunitary with the required signs exists.
ChargeConjugation charge_conjugation(const GammaSet& g);

}  // namespace ncg

#endif
