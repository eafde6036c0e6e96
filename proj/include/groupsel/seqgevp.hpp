#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groupsel/dcgevp.hpp"
#include "groupsel/permutation.hpp"

namespace groupsel {

struct IterationRecord {
  int index = 0;         // 1-based iteration counter
  int deflated_dim = 0;  // basis size the GEVP actually ran on
  GevpSolution gevp;
  Permutation rounded = Permutation::identity(1);
  double overlap = 0.0;            // Re<A*, P_sigma>, the assignment value
  double rounded_residual = 0.0;   // delta(P_sigma, R)
  bool accepted = false;
  std::size_t group_order_after = 1;
  double deflation_orthogonality = 0.0;  // max_h |<E, P_h>| / |E| over E and A*
};

enum class Termination { Rejected, IterationCap, BasisExhausted };

struct SubgroupTrace {
  std::vector<IterationRecord> records;
  PermutationGroup final_group;
  Termination termination = Termination::IterationCap;

  int accepted_count() const;
};

// Projects every element onto the Frobenius-orthogonal complement of
// span{P_g : g in group}; elements whose residual norm falls below
// drop_tol times their original norm are dropped.  Returns nullopt when
// nothing survives.
std::optional<GeneratorBasis> deflate_basis(const GeneratorBasis& basis,
                                            const PermutationGroup& group,
                                            double drop_tol = kDeflationDropTol);

// Hungarian rounding of Re(a); the overlap is the achieved maximum.
std::pair<Permutation, double> round_to_permutation(const ComplexMatrix& a);

// Sequential recovery.  tau = 0 selects the shared relative zero-tolerance mode:
// accept sigma iff |[P_sigma, R]|_F <= kZeroCertRel * |R|_F.
SubgroupTrace sequential_select(const HermitianMatrix& r, const GeneratorBasis& basis,
                                double tau, int k_max,
                                double drop_tol = kDeflationDropTol,
                                std::size_t closure_cap = kClosureCap);

}  // namespace groupsel
