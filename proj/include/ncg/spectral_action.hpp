#ifndef NCG_SPECTRAL_ACTION_HPP
#define NCG_SPECTRAL_ACTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ncg/clifford.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

using Riemann = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

// Pointwise curvature data. Riemann carries the full index symmetries;
// Ricci and s are its contractions.
struct PointGeometry {
  double s = 0.0;
  Eigen::Matrix4d ricci = Eigen::Matrix4d::Zero();
  Riemann riemann{};
  double laplacian_s = 0.0;  // carried, excluded from comparisons by default

  static PointGeometry flat();
  // Builds from a Riemann tensor with exact symmetries; contracts Ricci and s.
  static PointGeometry from_riemann(const Riemann& r, double laplacian_s = 0.0);
  // Random tensor with exact Riemann symmetries, components O(scale).
  static PointGeometry random(std::uint64_t seed, double scale = 1.0);

  double ricci_sq() const;    // R_{mn} R^{mn}
  double riemann_sq() const;  // R_{mnrs} R^{mnrs}
  double weyl_sq() const;     // Riemann^2 - 2 Ricci^2 + s^2/3
  double euler_sq() const;    // R*R* = Riemann^2 - 4 Ricci^2 + s^2
  double bianchi_residual() const;
};

struct ModelPoint {
  Complex d = 0.0;
  Eigen::Matrix4d F = Eigen::Matrix4d::Zero();  // curvature of Y_mu, antisymmetric
};

struct EndomorphismData {
  CMatrix Q;                        // 16x16, self-adjoint
  std::array<CMatrix, 16> omegaE;   // Omega^E_{mu nu}, all index pairs
};

struct Moments {
  double f0 = 1.0;
  double f2 = 0.5;
  double f4 = 0.5;
  double Lambda = 1.0;
};

struct SeeleyCoefficients {
  double a0 = 0.0;
  double a2 = 0.0;
  double a4 = 0.0;
};

// Spin curvature Omega^S_{mu nu} = 1/4 R_{mu nu a b} g^a g^b.
CMatrix spin_curvature(const PointGeometry& geom, const GammaSet& g, int mu, int nu);

// Q = -1/4 s (x) I - I (x) D_F^2 + 1/2 i g^mu g^nu (x) F_{mu nu}, with the
// finite factor F_{mu nu} = curly-F_{mu nu} * diag(1,1,-1,-1).
CMatrix assemble_Q(const PointGeometry& geom, const ModelPoint& model, const GammaSet& g);

// Omega^E_{mu nu} = Omega^S_{mu nu} (x) I + i I (x) F_{mu nu}.
EndomorphismData assemble_omegaE(const PointGeometry& geom, const ModelPoint& model,
                                 const GammaSet& g);

struct GilkeyOptions {
  bool include_laplacian_terms = false;  // Delta(s) and Delta(Q) boundary terms
};

// Gilkey a0, a2, a4 densities with the (4 pi)^{-2} factor included; fiber
// traces over the given Q / Omega^E (fiber dimension from Q).
SeeleyCoefficients gilkey_a_k(const CMatrix& Q, const std::array<CMatrix, 16>& omegaE,
                              const PointGeometry& geom, const GilkeyOptions& opts = {});

struct LagrangianOptions {
  bool include_delta_s = false;
};

// 4 L_M + L_Y + L_H of the closed-form spectral action.
double paper_lagrangian(const PointGeometry& geom, const ModelPoint& model,
                        const Moments& mom, const LagrangianOptions& opts = {});

// 2 f4 L^4 a0 + 2 f2 L^2 a2 + f(0) a4.
double expansion_value(const SeeleyCoefficients& c, const Moments& mom);

// Relative deviation between the Gilkey route and the closed form,
// normalized by max(|terms|, 1).
double compare_lagrangian(const PointGeometry& geom, const ModelPoint& model,
                          const Moments& mom, const GammaSet& g);

struct HeatTraceResult {
  std::vector<double> t_values;
  std::vector<double> traces;
  double fitted_a0_density = 0.0;
  double fitted_a2_density = 0.0;
  double truncation_bound = 0.0;
};

// Flat 4-torus mode sums for D_A^2 = (-d^2 + |d|^2) (x) I_16, truncated at
// |n_mu| <= mode_cut. Throws when the truncation error bound at the
// smallest t exceeds 1e-8, reporting the required cut.
HeatTraceResult heat_trace_torus(double side_length, int mode_cut, Complex d,
                                 const std::vector<double>& t_values);

}  // namespace ncg

#endif
