#include "ncg/distance.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ncg {

namespace {

bool is_diagonal(const CMatrix& m, double tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && std::abs(m(i, j)) > tol) return false;
  return true;
}

struct Objective {
  const CMatrix* D;
  std::vector<const CMatrix*> proj;  // diagonal idempotents, one per point
  RVector base;                      // base point with c_i - c_j = 1
  RMatrix dirs;                      // basis of {v : v_i = v_j}

  CMatrix element(const RVector& y) const {
    RVector c = base + dirs * y;
    CMatrix a = CMatrix::Zero(D->rows(), D->cols());
    for (Eigen::Index p = 0; p < c.size(); ++p) a += c(p) * (*proj[p]);
    return a;
  }
  double operator()(const RVector& y) const {
    return spectral_norm(commutator(*D, element(y)));
  }
  // Subgradient via the top singular pair.
  RVector subgradient(const RVector& y) const {
    Eigen::JacobiSVD<CMatrix> svd(commutator(*D, element(y)),
                                  Eigen::ComputeThinU | Eigen::ComputeThinV);
    const CVector u = svd.matrixU().col(0);
    const CVector v = svd.matrixV().col(0);
    RVector g(dirs.cols());
    for (Eigen::Index k = 0; k < dirs.cols(); ++k) {
      CMatrix dM = CMatrix::Zero(D->rows(), D->cols());
      for (Eigen::Index p = 0; p < dirs.rows(); ++p)
        dM += dirs(p, k) * commutator(*D, *proj[p]);
      g(k) = (u.adjoint() * dM * v)(0).real();
    }
    return g;
  }
};

// Multiscale zooming grid: convex objective, tiny dimension. Each round
// shrinks the box around the grid minimizer.
RVector refine(const Objective& f, RVector y, double radius, int rounds) {
  const Eigen::Index d = y.size();
  if (d == 0) return y;
  const int steps = d <= 1 ? 41 : (d == 2 ? 15 : 9);
  for (int r = 0; r < rounds; ++r) {
    RVector best = y;
    double fbest = f(y);
    const Eigen::Index total = static_cast<Eigen::Index>(std::pow(steps, d));
    for (Eigen::Index n = 0; n < total; ++n) {
      RVector cand = y;
      Eigen::Index rem = n;
      for (Eigen::Index k = 0; k < d; ++k) {
        int s = static_cast<int>(rem % steps);
        rem /= steps;
        cand(k) += radius * (2.0 * s / (steps - 1) - 1.0);
      }
      double fc = f(cand);
      if (fc < fbest) {
        fbest = fc;
        best = cand;
      }
    }
    y = best;
    radius *= 2.5 / (steps - 1);  // keep a margin of a few cells
  }
  return y;
}

}  // namespace

DistanceResult two_point_closed_form(Complex t_param) {
  DistanceResult r;
  const double a = std::abs(t_param);
  if (a == 0.0) {
    r.unbounded = true;
    return r;
  }
  r.value = 1.0 / a;
  r.min_commutator_norm = a;
  r.certificate = RVector(2);
  r.certificate << 1.0 / a, 0.0;
  return r;
}

DistanceResult connes_distance(const FiniteTriple& t, int i, int j,
                               const DistanceOptions& opts) {
  if (!t.dirac) throw StructuralError("connes_distance: no dirac");
  const int k = static_cast<int>(t.rep_basis.size());
  if (i < 0 || j < 0 || i >= k || j >= k) throw StructuralError("point index out of range");
  for (const auto& p : t.rep_basis)
    if (!is_diagonal(p, t.tol.eps))
      throw InvalidInput("connes_distance: representation not diagonal");

  DistanceResult r;
  if (i == j) {
    r.certificate = RVector::Zero(k);
    return r;
  }

  Objective f;
  f.D = &*t.dirac;
  for (const auto& p : t.rep_basis) f.proj.push_back(&p);
  f.base = RVector::Zero(k);
  f.base(i) = 1.0;
  // Directions preserving c_i - c_j: all e_p for p not in {i,j}, plus e_i + e_j.
  RMatrix dirs(k, k - 1);
  Eigen::Index col = 0;
  for (int p = 0; p < k; ++p)
    if (p != i && p != j) dirs.col(col++) = RVector::Unit(k, p);
  dirs.col(col) = (RVector::Unit(k, i) + RVector::Unit(k, j)) / std::sqrt(2.0);
  f.dirs = dirs;

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> restart_values;
  RVector ybest;
  double fbest = std::numeric_limits<double>::infinity();
  for (int rs = 0; rs < opts.restarts; ++rs) {
    RVector y(k - 1);
    for (Eigen::Index q = 0; q < y.size(); ++q) y(q) = rs == 0 ? 0.0 : gauss(rng);
    double fy = f(y);
    RVector ymin = y;
    double fmin = fy;
    // Subgradient phase: normalized direction, diminishing y-space step.
    int last_improve = 0;
    for (int it = 0; it < opts.max_iters; ++it) {
      RVector g = f.subgradient(y);
      const double gn = g.norm();
      if (gn < 1e-15) break;
      y -= (2.0 / std::sqrt(it + 1.0)) * g / gn;
      fy = f(y);
      if (fy < fmin) {
        const bool converged = fmin - fy < opts.stop_improvement;
        fmin = fy;
        ymin = y;
        last_improve = it;
        if (converged) break;
      } else if (it - last_improve > 200) {
        break;
      }
    }
    // Polish with a zooming grid around the subgradient endpoint.
    ymin = refine(f, ymin, 1.0, 12);
    fmin = f(ymin);
    restart_values.push_back(fmin);
    if (fmin < fbest) {
      fbest = fmin;
      ybest = ymin;
    }
  }
  // Full-precision polish of the winning restart.
  ybest = refine(f, ybest, 1e-3, 25);
  fbest = f(ybest);
  const auto [lo, hi] = std::minmax_element(restart_values.begin(), restart_values.end());
  r.restart_spread = *hi - *lo;
  r.numerical_failure = r.restart_spread > 1e-4 * std::max(1.0, fbest);
  r.min_commutator_norm = fbest;
  const RVector copt = f.base + f.dirs * ybest;
  if (fbest < t.tol.eps) {
    r.unbounded = true;
    r.certificate = copt;
    return r;
  }
  r.value = 1.0 / fbest;
  r.certificate = copt / fbest;  // |a_i - a_j| = value, ||[D,a]|| = 1
  return r;
}

}  // namespace ncg
