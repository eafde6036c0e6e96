#pragma once

#include <utility>
#include <vector>

#include "groupsel/basis.hpp"
#include "groupsel/matrix.hpp"

namespace groupsel {

// Certificate object of the double-commutator GEVP.
struct GevpSolution {
  double lambda_min = 0.0;
  std::vector<cplx> coefficients;  // c*, normalized c*Gc = 1, phase-fixed
  ComplexMatrix generator;         // A* = sum_k c*_k B_k
  double residual = 0.0;           // delta(A*, R)
  std::vector<double> spectrum;    // ascending
  double condition_ratio = 0.0;    // lambda_min / lambda_max, 0 when lambda_max = 0
  int eigenspace_dim = 1;          // multiplicity of lambda_min within kDegenerateGap
  bool commuting_found = false;    // lambda_min <= kZeroCertRel * |R|_F^2
};

// M_ij = Tr(B_i^* [R, [R, B_j]]) and G_ij = Tr(B_i^* B_j).  The dense route
// precomputes R^2 and walks C_j = R^2 B_j - 2 R B_j R + B_j R^2; when every
// element is structured the commutator-Gram route M_ij = <[R,B_i], [R,B_j]>
// runs in O(d^2 M^2) instead.
std::pair<HermitianMatrix, HermitianMatrix> assemble(const HermitianMatrix& r,
                                                     const GeneratorBasis& basis);

GevpSolution select_generator(const HermitianMatrix& r, const GeneratorBasis& basis);

// |[A, R]|_F / (|A|_F |R|_F), in [0, 2].
double residual(const ComplexMatrix& a, const HermitianMatrix& r);

}  // namespace groupsel
