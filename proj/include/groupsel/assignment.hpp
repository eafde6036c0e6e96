#pragma once

#include <vector>

#include "groupsel/permutation.hpp"

namespace groupsel {

struct AssignmentResult {
  Permutation sigma;
  double value = 0.0;
};

// Maximizes sum_i score(i, sigma(i)) over all permutations by the Hungarian
// method in O(M^3).  Among optimal assignments the lexicographically
// smallest image array is returned (post-pass over the tight-edge graph).
AssignmentResult max_assignment(int m, const std::vector<double>& score);

}  // namespace groupsel
