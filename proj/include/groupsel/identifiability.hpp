#pragma once

#include <cstdint>
#include <vector>

#include "groupsel/matrix.hpp"
#include "groupsel/permutation.hpp"

namespace groupsel {

struct LatticeReport {
  double residual_g1 = 0.0;  // |reynolds_project(g1, R) - R|_F
  double residual_g2 = 0.0;  // |reynolds_project(g2, R) - R|_F
  double r_norm = 0.0;
  bool commutant_ok = false;  // in_commutant(g1, R) at 1e-10
};

// Draws random Hermitian W, projects onto the commutant of g2, and verifies
// that both projections fix the result; requires g1 to be a subgroup of g2.
LatticeReport lattice_insensitivity_check(const PermutationGroup& g1,
                                          const PermutationGroup& g2, std::uint64_t seed);

struct CollisionLog {
  int trial = 0;
  int block_a = 0;
  int block_b = 0;
  double value_a = 0.0;
  double value_b = 0.0;
};

struct GenerativeReport {
  bool predicted_identifiable = false;
  PermutationGroup hmax;
  int trials = 0;
  int exact_matches = 0;       // trials with Aut(R) = gstar
  int containment_holds = 0;   // trials with Aut(R) containing hmax
  std::vector<std::size_t> aut_orders;
  std::vector<CollisionLog> collisions;
};

// Per trial, builds R = reynolds_project(gstar, W) from the chosen ensemble
// and compares aut_bruteforce(R) against the orbit-pair classifier (with
// transpose-merged blocks for the real-symmetric ensemble).
GenerativeReport generative_experiment(const PermutationGroup& gstar, int trials,
                                       std::uint64_t seed, Ensemble ensemble);

}  // namespace groupsel
