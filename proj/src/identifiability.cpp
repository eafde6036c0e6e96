#include "groupsel/identifiability.hpp"

#include <algorithm>
#include <cmath>

#include "groupsel/errors.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

LatticeReport lattice_insensitivity_check(const PermutationGroup& g1,
                                          const PermutationGroup& g2, std::uint64_t seed) {
  require(g1.degree() == g2.degree(), "groups must share a degree");
  require(g1.degree() <= kBruteforceMaxDegree, "lattice check is capped at degree 8");
  require(g1.subgroup_of(g2), "the first group must be a subgroup of the second");
  Rng rng(seed);
  const HermitianMatrix w = random_hermitian(g1.degree(), Ensemble::RealSymmetric, rng);
  const ComplexMatrix r = reynolds_project(g2, w.matrix());
  LatticeReport report;
  report.r_norm = r.frobenius_norm();
  report.commutant_ok = in_commutant(g1, r, 1e-10);
  report.residual_g1 = (reynolds_project(g1, r) - r).frobenius_norm();
  report.residual_g2 = (reynolds_project(g2, r) - r).frobenius_norm();
  return report;
}

GenerativeReport generative_experiment(const PermutationGroup& gstar, int trials,
                                       std::uint64_t seed, Ensemble ensemble) {
  require(gstar.degree() <= 6, "the generative experiment is capped at degree 6");
  require(trials >= 1, "trial count must be positive");
  const int m = gstar.degree();
  const PairMode mode =
      ensemble == Ensemble::RealSymmetric ? PairMode::TransposeMerged : PairMode::Ordered;
  GroupClassification cls = classify_identifiability(gstar, mode);
  const OrbitPairPartition partition = orbit_pairs(gstar, mode);

  GenerativeReport report{cls.identifiable, std::move(cls.hmax), trials, 0, 0, {}, {}};
  Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.fork(static_cast<std::uint64_t>(t));
    const HermitianMatrix w = random_hermitian(m, ensemble, rng);
    const HermitianMatrix r(reynolds_project(gstar, w.matrix()));
    const PermutationGroup aut = aut_bruteforce(r, kZeroCertRel);
    report.aut_orders.push_back(aut.order());
    if (aut.same_group(gstar)) ++report.exact_matches;
    if (report.hmax.subgroup_of(aut)) ++report.containment_holds;

    // The projected matrix is constant on each pair-orbit; near-equal values
    // across distinct blocks are the measure-zero collisions of the theorem.
    std::vector<cplx> value(partition.block_count);
    std::vector<bool> seen(partition.block_count, false);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const int b = partition.block_of(i, j);
        if (!seen[b]) {
          value[b] = r(i, j);
          seen[b] = true;
        }
      }
    double scale = 1.0;
    for (const cplx& v : value) scale = std::max(scale, std::abs(v));
    for (int a = 0; a < partition.block_count; ++a)
      for (int b = a + 1; b < partition.block_count; ++b)
        if (std::abs(value[a] - value[b]) <= 1e-9 * scale)
          report.collisions.push_back(
              {t, a, b, value[a].real(), value[b].real()});
  }
  return report;
}

}  // namespace groupsel
