#include "groupsel/seqgevp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "groupsel/assignment.hpp"
#include "groupsel/errors.hpp"

namespace groupsel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

// Frobenius-orthonormal spanning system for {P_g : g in group}, built by
// modified Gram-Schmidt with one re-orthogonalization pass.
std::vector<ComplexMatrix> group_span_basis(const PermutationGroup& group) {
  std::vector<ComplexMatrix> qs;
  const double rank_tol = 1e-10 * std::sqrt(static_cast<double>(group.degree()));
  for (const Permutation& g : group.elements()) {
    ComplexMatrix v = perm_matrix(g);
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexMatrix& q : qs) {
        const cplx proj = frobenius_inner(q, v);
        ComplexMatrix sub = q;
        sub *= proj;
        v -= sub;
      }
    const double nv = v.frobenius_norm();
    if (nv > rank_tol) {
      v *= cplx(1.0 / nv, 0.0);
      qs.push_back(std::move(v));
    }
  }
  return qs;
}

// Max |<x, P_h>| / |x| over the group, the deflation-orthogonality measure.
double group_overlap(const PermutationGroup& group, const ComplexMatrix& x) {
  const double nx = x.frobenius_norm();
  if (nx <= 0.0) return 0.0;
  double worst = 0.0;
  for (const Permutation& h : group.elements()) {
    cplx s = 0.0;
    for (int i = 0; i < x.rows(); ++i) s += x(i, h(i));
    worst = std::max(worst, std::abs(s));
  }
  return worst / nx;
}

// Gram near-null analysis used when the deflated basis turns out numerically
// dependent; returns the index to drop (largest near-null coefficient,
// later element on ties).
int most_collinear_index(const GeneratorBasis& basis) {
  const int d = basis.size();
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const cplx v = frobenius_inner(basis[i].dense, basis[j].dense);
      g(i, j) = i == j ? cplx(v.real(), 0.0) : v;
      if (i != j) g(j, i) = std::conj(v);
    }
  const EigenDecomposition eig = hermitian_eig(HermitianMatrix(std::move(g)));
  int pick = 0;
  double best = -1.0;
  for (int k = 0; k < d; ++k) {
    const double mag = std::abs(eig.eigenvectors(k, 0));
    if (mag >= best) {
      best = mag;
      pick = k;
    }
  }
  return pick;
}

GeneratorBasis drop_element(const GeneratorBasis& basis, int index) {
  std::vector<BasisElement> kept;
  for (int k = 0; k < basis.size(); ++k)
    if (k != index) kept.push_back(basis[k]);
  return {basis.dim(), std::move(kept)};
}

}  // namespace

int SubgroupTrace::accepted_count() const {
  int n = 0;
  for (const IterationRecord& rec : records) n += rec.accepted;
  return n;
}

std::optional<GeneratorBasis> deflate_basis(const GeneratorBasis& basis,
                                            const PermutationGroup& group, double drop_tol) {
  require(basis.dim() == group.degree(), "basis and group dimensions differ");
  require(drop_tol > 0.0, "drop tolerance must be positive");
  const std::vector<ComplexMatrix> span = group_span_basis(group);
  std::vector<BasisElement> kept;
  for (const BasisElement& e : basis.elements()) {
    ComplexMatrix v = e.dense;
    for (int pass = 0; pass < 2; ++pass)
      for (const ComplexMatrix& q : span) {
        const cplx proj = frobenius_inner(q, v);
        ComplexMatrix sub = q;
        sub *= proj;
        v -= sub;
      }
    if (v.frobenius_norm() < drop_tol * e.dense.frobenius_norm()) continue;
    BasisElement out;
    out.label = e.label;
    out.dense = std::move(v);
    out.hint = SparsityHint::Dense;
    kept.push_back(std::move(out));
  }
  if (kept.empty()) return std::nullopt;
  return GeneratorBasis(basis.dim(), std::move(kept));
}

std::pair<Permutation, double> round_to_permutation(const ComplexMatrix& a) {
  require(a.square(), "rounding needs a square matrix");
  const int m = a.rows();
  std::vector<double> score(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) score[static_cast<std::size_t>(i) * m + j] = a(i, j).real();
  AssignmentResult res = max_assignment(m, score);
  return {std::move(res.sigma), res.value};
}

SubgroupTrace sequential_select(const HermitianMatrix& r, const GeneratorBasis& basis,
                                double tau, int k_max, double drop_tol,
                                std::size_t closure_cap) {
  require(tau >= 0.0, "acceptance threshold must be nonnegative");
  require(k_max >= 1, "iteration cap must be at least 1");
  require(r.dim() == basis.dim(), "covariance and basis dimensions differ");
  const int m = r.dim();
  const double r_norm = r.frobenius_norm();

  SubgroupTrace trace{{}, PermutationGroup::trivial(m), Termination::IterationCap};
  PermutationGroup group = PermutationGroup::trivial(m);

  for (int k = 1; k <= k_max; ++k) {
    std::optional<GeneratorBasis> deflated = deflate_basis(basis, group, drop_tol);
    if (!deflated) {
      trace.termination = Termination::BasisExhausted;
      break;
    }

    GeneratorBasis work = std::move(*deflated);
    GevpSolution sol;
    while (true) {
      try {
        sol = select_generator(r, work);
        break;
      } catch (const NumericalError&) {
        if (work.size() == 1) throw;
        work = drop_element(work, most_collinear_index(work));
      }
    }

    IterationRecord rec;
    rec.index = k;
    rec.deflated_dim = work.size();

    double orth = 0.0;
    for (const BasisElement& e : work.elements())
      orth = std::max(orth, group_overlap(group, e.dense));
    orth = std::max(orth, group_overlap(group, sol.generator));
    rec.deflation_orthogonality = orth;

    auto [sigma, overlap] = round_to_permutation(sol.generator);
    rec.overlap = overlap;
    rec.rounded_residual = residual(perm_matrix(sigma), r);

    const double comm_norm = rec.rounded_residual * std::sqrt(static_cast<double>(m)) * r_norm;
    const bool passes_tau =
        tau == 0.0 ? comm_norm <= kZeroCertRel * r_norm : rec.rounded_residual <= tau;
    const bool genuinely_new = overlap > kOverlapMin && !group.contains(sigma);
    rec.accepted = passes_tau && genuinely_new;
    rec.gevp = std::move(sol);
    rec.rounded = sigma;

    if (rec.accepted) {
      std::vector<Permutation> gens = group.generators();
      gens.push_back(sigma);
      group = PermutationGroup::closure(m, std::move(gens), closure_cap);
      rec.group_order_after = group.order();
      trace.records.push_back(std::move(rec));
    } else {
      rec.group_order_after = group.order();
      trace.records.push_back(std::move(rec));
      trace.termination = Termination::Rejected;
      break;
    }
  }

  trace.final_group = std::move(group);
  return trace;
}

}  // namespace groupsel
