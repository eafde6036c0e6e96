#include <cmath>
#include <vector>

#include "doctest.h"
#include "groupsel/errors.hpp"
#include "groupsel/identifiability.hpp"
#include "groupsel/matrix.hpp"
#include "groupsel/permutation.hpp"
#include "oracles.hpp"

using namespace groupsel;

namespace {

PermutationGroup symmetric_group(int m) {
  return PermutationGroup::closure(
      m, {Permutation::cyclic(m), Permutation::transposition(m, 0, 1)});
}

}  // namespace

TEST_CASE("lattice projections are insensitive along subgroup chains") {
  const PermutationGroup cyc6 = PermutationGroup::closure(6, {Permutation::cyclic(6)});
  const PermutationGroup sub =
      PermutationGroup::closure(6, {Permutation::cyclic(6) * Permutation::cyclic(6) *
                                    Permutation::cyclic(6)});
  REQUIRE(sub.order() == 2);
  const LatticeReport report = lattice_insensitivity_check(sub, cyc6, 17);
  CHECK(report.r_norm > 0.0);
  CHECK(report.commutant_ok);
  CHECK(report.residual_g1 <= 1e-12 * report.r_norm);
  CHECK(report.residual_g2 <= 1e-12 * report.r_norm);
}

TEST_CASE("lattice insensitivity covers the trivial and dihedral extremes") {
  const PermutationGroup d6 = PermutationGroup::closure(
      6, {Permutation::cyclic(6), Permutation::reflection(6)});
  const LatticeReport from_trivial =
      lattice_insensitivity_check(PermutationGroup::trivial(6), d6, 18);
  CHECK(from_trivial.commutant_ok);
  CHECK(from_trivial.residual_g1 <= 1e-12 * from_trivial.r_norm);
  CHECK(from_trivial.residual_g2 <= 1e-12 * from_trivial.r_norm);

  const PermutationGroup cyc6 = PermutationGroup::closure(6, {Permutation::cyclic(6)});
  const LatticeReport mid = lattice_insensitivity_check(cyc6, d6, 19);
  CHECK(mid.commutant_ok);
  CHECK(mid.residual_g1 <= 1e-12 * mid.r_norm);
}

TEST_CASE("the lattice check requires an actual subgroup chain") {
  const PermutationGroup cyc6 = PermutationGroup::closure(6, {Permutation::cyclic(6)});
  const PermutationGroup flip =
      PermutationGroup::closure(6, {Permutation::transposition(6, 0, 1)});
  CHECK_THROWS_AS(lattice_insensitivity_check(cyc6, flip, 2), ValidationError);
  CHECK_THROWS_AS(lattice_insensitivity_check(
                      PermutationGroup::trivial(5),
                      PermutationGroup::closure(6, {Permutation::cyclic(6)}), 2),
                  ValidationError);
  CHECK_THROWS_AS(lattice_insensitivity_check(PermutationGroup::trivial(9),
                                              symmetric_group(9), 2),
                  ValidationError);
}

TEST_CASE("the symmetric group regenerates itself in every trial") {
  const GenerativeReport report =
      generative_experiment(symmetric_group(4), 20, 23, Ensemble::RealSymmetric);
  CHECK(report.predicted_identifiable);
  CHECK(report.trials == 20);
  CHECK(report.exact_matches == 20);
  CHECK(report.containment_holds == 20);
  REQUIRE(report.aut_orders.size() == 20);
  for (std::size_t order : report.aut_orders) CHECK(order == 24);
  CHECK(report.hmax.same_group(symmetric_group(4)));
}

TEST_CASE("the trivial group is identifiable outside a null set") {
  const GenerativeReport report = generative_experiment(PermutationGroup::trivial(4), 20,
                                                        24, Ensemble::RealSymmetric);
  CHECK(report.predicted_identifiable);
  CHECK(report.exact_matches >= 19);
  for (const CollisionLog& log : report.collisions) {
    CHECK(log.trial >= 0);
    CHECK(log.trial < 20);
    CHECK(log.block_a != log.block_b);
    CHECK(std::abs(log.value_a - log.value_b) <=
          1e-9 * std::max({1.0, std::abs(log.value_a), std::abs(log.value_b)}));
  }
}

TEST_CASE("the cyclic group is ambiguous under the symmetric ensemble") {
  const PermutationGroup cyc4 = PermutationGroup::closure(4, {Permutation::cyclic(4)});
  const GenerativeReport report =
      generative_experiment(cyc4, 20, 25, Ensemble::RealSymmetric);
  CHECK_FALSE(report.predicted_identifiable);
  CHECK(report.hmax.order() == 8);
  CHECK(cyc4.subgroup_of(report.hmax));
  CHECK(report.containment_holds == 20);
  CHECK(report.exact_matches == 0);
  for (std::size_t order : report.aut_orders) CHECK(order >= 8);
}

TEST_CASE("the complex ensemble removes the transpose ambiguity") {
  const PermutationGroup cyc4 = PermutationGroup::closure(4, {Permutation::cyclic(4)});
  const GenerativeReport report =
      generative_experiment(cyc4, 10, 26, Ensemble::ComplexHermitian);
  CHECK(report.predicted_identifiable);
  CHECK(report.hmax.same_group(cyc4));
  CHECK(report.exact_matches >= 9);
}

TEST_CASE("orbit indicator matrices populate the larger commutant") {
  const PermutationGroup d4 = PermutationGroup::closure(
      4, {Permutation::cyclic(4), Permutation::reflection(4)});
  const PermutationGroup cyc4 = PermutationGroup::closure(4, {Permutation::cyclic(4)});
  const OrbitPairPartition part = orbit_pairs(d4);
  for (int block = 0; block < part.block_count; ++block) {
    ComplexMatrix indicator(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (part.block_of(i, j) == block) indicator(i, j) = 1.0;
    CHECK(in_commutant(d4, indicator, 1e-12));
    CHECK(in_commutant(cyc4, indicator, 1e-12));
  }
}

TEST_CASE("the generative experiment validates its arguments") {
  CHECK_THROWS_AS(generative_experiment(symmetric_group(4), 0, 1, Ensemble::RealSymmetric),
                  ValidationError);
  CHECK_THROWS_AS(generative_experiment(symmetric_group(7), 5, 1, Ensemble::RealSymmetric),
                  ValidationError);
}
