#include <cmath>
#include <vector>

#include "doctest.h"
#include "groupsel/basis.hpp"
#include "groupsel/dcgevp.hpp"
#include "groupsel/errors.hpp"
#include "groupsel/experiments.hpp"
#include "groupsel/matrix.hpp"
#include "groupsel/rng.hpp"
#include "groupsel/tolerances.hpp"
#include "oracles.hpp"
using namespace groupsel;

namespace {

BasisElement dense_element(std::string label, ComplexMatrix m) {
  BasisElement e;
  e.label = std::move(label);
  e.dense = std::move(m);
  return e;
}

// M_ij rebuilt from scratch with naive nested commutators.
ComplexMatrix naive_assemble_m(const HermitianMatrix& r, const GeneratorBasis& basis) {
  const int d = basis.size();
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const ComplexMatrix inner = oracles::naive_commutator(r.matrix(), basis[j].dense);
      const ComplexMatrix outer = oracles::naive_commutator(r.matrix(), inner);
      m(i, j) = oracles::naive_inner(basis[i].dense, outer);
    }
  return m;
}

}  // namespace

TEST_CASE("assembly vanishes when R is a multiple of the identity") {
  const GeneratorBasis basis = standard_catalog(5);
  const auto [m, g] = assemble(HermitianMatrix(ComplexMatrix::identity(5)), basis);
  CHECK(m.frobenius_norm() <= 1e-14);
  CHECK(g.dim() == basis.size());
}

TEST_CASE("assembly vanishes on a circulant with the shift basis") {
  const HermitianMatrix r = oracles::circulant_from_spectrum({1.0, 2.5, 0.7, 4.0, 3.1});
  std::vector<BasisElement> shift(1);
  shift[0] = dense_element("shift", cyclic_shift(5));
  const auto [m, g] = assemble(r, GeneratorBasis(5, std::move(shift)));
  CHECK(m.dim() == 1);
  CHECK(std::abs(m(0, 0)) <= 1e-12 * r.frobenius_norm() * r.frobenius_norm());
  CHECK(std::abs(g(0, 0) - cplx(5.0)) <= 1e-13);
}

TEST_CASE("assembly matches naive nested commutators on the catalog") {
  Rng rng(61);
  const HermitianMatrix r = random_hermitian(6, Ensemble::ComplexHermitian, rng);
  const GeneratorBasis basis = standard_catalog(6);
  const auto [m, g] = assemble(r, basis);
  const ComplexMatrix oracle = naive_assemble_m(r, basis);
  CHECK(oracles::entry_distance(m.matrix(), oracle) <= 1e-10 * (1.0 + oracle.max_abs()));
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j)
      CHECK(std::abs(g(i, j) - oracles::naive_inner(basis[i].dense, basis[j].dense)) <= 1e-12);
}

TEST_CASE("structured and dense assembly routes agree") {
  Rng rng(62);
  const HermitianMatrix r = random_hermitian(6, Ensemble::ComplexHermitian, rng);
  const GeneratorBasis structured = standard_catalog(6);
  REQUIRE(structured.all_structured());

  std::vector<BasisElement> stripped;
  for (const BasisElement& e : structured.elements())
    stripped.push_back(dense_element(e.label, e.dense));
  const GeneratorBasis dense_only(6, std::move(stripped));
  REQUIRE_FALSE(dense_only.all_structured());

  const auto [ms, gs] = assemble(r, structured);
  const auto [md, gd] = assemble(r, dense_only);
  CHECK(oracles::entry_distance(ms.matrix(), md.matrix()) <= 1e-11 * (1.0 + md.matrix().max_abs()));
  CHECK(oracles::entry_distance(gs.matrix(), gd.matrix()) <= 1e-12);
}

TEST_CASE("a planted commuting element drives lambda to the zero certificate") {
  Rng rng(63);
  const HermitianMatrix r = oracles::circulant_from_spectrum({0.9, 2.2, 1.4, 3.6, 2.8, 1.1});
  const GevpSolution sol = select_generator(r, standard_catalog(6));
  const double r2 = r.frobenius_norm() * r.frobenius_norm();
  CHECK(sol.lambda_min <= kZeroCertRel * r2);
  CHECK(sol.commuting_found);
  CHECK(residual(sol.generator, r) <= 1e-8);
  CHECK(sol.residual <= 1e-8);
}

TEST_CASE("a persymmetric matrix certifies the reflection") {
  Rng rng(64);
  const ComplexMatrix j = reflection(6);
  const ComplexMatrix x = oracles::random_uniform_hermitian(6, rng);
  const HermitianMatrix r(cplx(0.5) * (x + j * x * j));
  std::vector<BasisElement> refl(1);
  refl[0] = dense_element("J", j);
  const GevpSolution sol = select_generator(r, GeneratorBasis(6, std::move(refl)));
  CHECK(sol.commuting_found);
  CHECK(sol.lambda_min <= kZeroCertRel * r.frobenius_norm() * r.frobenius_norm());
}

TEST_CASE("the minimizer dominates every Rayleigh quotient over the basis span") {
  Rng rng(65);
  const HermitianMatrix r = random_hermitian(6, Ensemble::ComplexHermitian, rng);
  const GeneratorBasis basis = standard_catalog(6);
  const auto [m, g] = assemble(r, basis);
  const GevpSolution sol = select_generator(r, basis);
  CHECK(sol.lambda_min > 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<cplx> c(basis.size());
    for (cplx& v : c) v = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    CHECK(oracles::rayleigh(m, g, c) >= sol.lambda_min - 1e-10 * (1.0 + sol.lambda_min));
  }
  const double quotient = oracles::rayleigh(m, g, sol.coefficients);
  CHECK(std::abs(quotient - sol.lambda_min) <= 1e-9 * (1.0 + sol.lambda_min));
}

TEST_CASE("the two-element reduction matches a dense grid search") {
  Rng rng(66);
  const HermitianMatrix r = random_hermitian(4, Ensemble::ComplexHermitian, rng);
  std::vector<BasisElement> pair(2);
  pair[0] = dense_element("shift", cyclic_shift(4));
  pair[1] = dense_element("random", oracles::random_uniform_complex(4, 4, rng));
  const GeneratorBasis basis(4, std::move(pair));
  const auto [m, g] = assemble(r, basis);
  const GevpSolution sol = select_generator(r, basis);
  const double grid = oracles::rayleigh_grid_min_c2(m, g, 400);
  CHECK(sol.lambda_min <= grid + 1e-12);
  CHECK(grid - sol.lambda_min <= 1e-4 * (1.0 + std::abs(sol.lambda_min)));
  const double quadratic = oracles::pencil_min_2x2(m, g);
  CHECK(std::abs(sol.lambda_min - quadratic) <= 1e-9 * (1.0 + std::abs(quadratic)));
}

TEST_CASE("the certificate ties lambda to the squared residual") {
  Rng rng(67);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianMatrix r = random_hermitian(5, Ensemble::ComplexHermitian, rng);
    const GevpSolution sol = select_generator(r, standard_catalog(5));
    const double r2 = r.frobenius_norm() * r.frobenius_norm();
    const double delta2 = sol.residual * sol.residual;
    CHECK(std::abs(delta2 * r2 - sol.lambda_min) <= 1e-8 * (1.0 + sol.lambda_min));
  }
}

TEST_CASE("solution invariants hold on generic input") {
  Rng rng(68);
  const HermitianMatrix r = random_hermitian(6, Ensemble::RealSymmetric, rng);
  const GeneratorBasis basis = standard_catalog(6);
  const GevpSolution sol = select_generator(r, basis);
  REQUIRE(static_cast<int>(sol.spectrum.size()) == basis.size());
  CHECK(sol.lambda_min == sol.spectrum.front());
  for (std::size_t k = 1; k < sol.spectrum.size(); ++k)
    CHECK(sol.spectrum[k - 1] <= sol.spectrum[k]);
  CHECK(sol.condition_ratio >= 0.0);
  CHECK(sol.condition_ratio <= 1.0);
  CHECK(sol.eigenspace_dim >= 1);

  const auto [m, g] = assemble(r, basis);
  cplx norm = 0.0;
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j)
      norm += std::conj(sol.coefficients[i]) * g(i, j) * sol.coefficients[j];
  CHECK(std::abs(norm - cplx(1.0)) <= 1e-10);

  ComplexMatrix rebuilt(6, 6);
  for (int k = 0; k < basis.size(); ++k) rebuilt += sol.coefficients[k] * basis[k].dense;
  CHECK(oracles::entry_distance(rebuilt, sol.generator) <= 1e-12);
}

TEST_CASE("residual normalization is exact on automorphisms and scale-free") {
  const HermitianMatrix r = diffusion_covariance(make_graph("C6"), 1.0);
  CHECK(residual(ComplexMatrix::identity(6), r) == 0.0);
  CHECK(residual(cyclic_shift(6), r) <= 1e-10);

  Rng rng(69);
  const ComplexMatrix a = oracles::random_uniform_complex(6, 6, rng);
  const double base = residual(a, r);
  CHECK(base > 1e-3);
  CHECK(std::abs(residual(cplx(2.0) * a, r) - base) <= 1e-13);
  const HermitianMatrix scaled(cplx(3.0) * r.matrix());
  CHECK(std::abs(residual(a, scaled) - base) <= 1e-13);

  CHECK_THROWS_AS(residual(ComplexMatrix(6, 6), r), ValidationError);
  CHECK_THROWS_AS(residual(ComplexMatrix::identity(5), r), ValidationError);
}

TEST_CASE("selection rejects a basis whose Gram matrix is singular") {
  std::vector<BasisElement> dependent(2);
  dependent[0] = dense_element("p", cyclic_shift(4));
  dependent[1] = dense_element("p-copy", cyclic_shift(4));
  const GeneratorBasis basis(4, std::move(dependent));
  const HermitianMatrix r(ComplexMatrix::identity(4));
  CHECK_THROWS_AS(select_generator(r, basis), NumericalError);
}

TEST_CASE("selection rejects dimension mismatches") {
  const HermitianMatrix r(ComplexMatrix::identity(5));
  CHECK_THROWS_AS(select_generator(r, standard_catalog(6)), ValidationError);
}
