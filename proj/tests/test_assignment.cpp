#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "groupsel/assignment.hpp"
#include "groupsel/errors.hpp"
#include "groupsel/matrix.hpp"
#include "groupsel/rng.hpp"
#include "oracles.hpp"

using namespace groupsel;

namespace {

std::vector<double> flat(const ComplexMatrix& a) {
  std::vector<double> out(static_cast<std::size_t>(a.rows()) * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i * a.cols() + j] = a(i, j).real();
  return out;
}

ComplexMatrix random_score(int m, Rng& rng) {
  ComplexMatrix s(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s(i, j) = rng.uniform(-1.0, 1.0);
  return s;
}

}  // namespace

TEST_CASE("assignment on an identity score picks the identity") {
  const AssignmentResult r = max_assignment(4, flat(ComplexMatrix::identity(4)));
  CHECK(r.sigma.is_identity());
  CHECK(r.value == 4.0);
}

TEST_CASE("assignment recovers a planted permutation") {
  const Permutation sigma0 = Permutation::from_cycles(6, {{0, 3, 1}, {2, 5}});
  const AssignmentResult r = max_assignment(6, flat(perm_matrix(sigma0)));
  CHECK(r.sigma == sigma0);
  CHECK(r.value == 6.0);
}

TEST_CASE("assignment agrees with brute force on random scores") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix s = random_score(6, rng);
    const AssignmentResult fast = max_assignment(6, flat(s));
    const auto [oracle_images, oracle_value] = oracles::exhaustive_assignment(s);
    CHECK(std::abs(fast.value - oracle_value) <= 1e-12);
    CHECK(fast.sigma == Permutation(oracle_images));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix s = random_score(7, rng);
    const AssignmentResult fast = max_assignment(7, flat(s));
    const auto [oracle_images, oracle_value] = oracles::exhaustive_assignment(s);
    CHECK(std::abs(fast.value - oracle_value) <= 1e-12);
    CHECK(fast.sigma == Permutation(oracle_images));
  }
}

TEST_CASE("assignment is invariant under row and column potentials") {
  Rng rng(52);
  const int m = 5;
  const ComplexMatrix s = random_score(m, rng);
  std::vector<double> row(m), col(m);
  double shift = 0.0;
  for (int i = 0; i < m; ++i) {
    row[i] = rng.uniform(-2.0, 2.0);
    col[i] = rng.uniform(-2.0, 2.0);
    shift += row[i] + col[i];
  }
  std::vector<double> base = flat(s), shifted = flat(s);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) shifted[i * m + j] += row[i] + col[j];
  const AssignmentResult a = max_assignment(m, base);
  const AssignmentResult b = max_assignment(m, shifted);
  CHECK(a.sigma == b.sigma);
  CHECK(std::abs(b.value - a.value - shift) <= 1e-10);
}

TEST_CASE("assignment breaks ties toward the lexicographically smallest image") {
  const std::vector<double> all_equal(16, 3.5);
  const AssignmentResult flat_tie = max_assignment(4, all_equal);
  CHECK(flat_tie.sigma.is_identity());
  CHECK(std::abs(flat_tie.value - 14.0) <= 1e-12);

  std::vector<double> block = {1.0, 1.0, 0.0,
                               1.0, 1.0, 0.0,
                               0.0, 0.0, 1.0};
  const AssignmentResult two_by_two = max_assignment(3, block);
  CHECK(two_by_two.sigma.is_identity());
  CHECK(std::abs(two_by_two.value - 3.0) <= 1e-12);
}

TEST_CASE("assignment validates its input shape") {
  CHECK_THROWS_AS(max_assignment(0, {}), ValidationError);
  CHECK_THROWS_AS(max_assignment(2, {1.0, 2.0, 3.0}), ValidationError);
  std::vector<double> bad(4, 0.0);
  bad[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(max_assignment(2, bad), ValidationError);
}
