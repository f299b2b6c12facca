#ifndef NCG_DISTANCE_HPP
#define NCG_DISTANCE_HPP

#include <cstdint>
#include <optional>

#include "ncg/triple.hpp"

namespace ncg {

struct DistanceResult {
  bool unbounded = false;
  double value = 0.0;                  // meaningless when unbounded
  RVector certificate;                 // real diagonal algebra element
  double min_commutator_norm = 0.0;    // min ||[D,a]|| over a_i - a_j = 1
  double restart_spread = 0.0;         // disagreement across restarts
  bool numerical_failure = false;      // restarts disagree beyond 1e-4
};

struct DistanceOptions {
  int restarts = 10;
  int max_iters = 10000;
  double stop_improvement = 1e-12;
  std::uint64_t seed = 1234;
};

// Connes distance between points i and j of a triple whose algebra C^k acts
// diagonally; points are the algebra summands. Computed as
// 1 / min{ ||[D,a]|| : a real diagonal in the algebra, a_i - a_j = 1 },
// UNBOUNDED when the minimum vanishes within tol.
DistanceResult connes_distance(const FiniteTriple& t, int i, int j,
                               const DistanceOptions& opts = {});

// 1/|t| for the two-point space, UNBOUNDED at t = 0.
DistanceResult two_point_closed_form(Complex t_param);

}  // namespace ncg

#endif
