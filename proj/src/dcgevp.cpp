#include "groupsel/dcgevp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "groupsel/errors.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

// Row a of [R, B] for a structured element, built from row a and the term
// image rows of R; keeps the commutator-Gram assembly inside the cache even
// when full M x M commutators would not fit.
void commutator_row(const HermitianMatrix& r, const BasisElement& e, int a, cplx* row) {
  const ComplexMatrix& rm = r.matrix();
  const int m = rm.cols();
  std::fill(row, row + m, cplx(0.0));
  for (const MonomialTerm& t : e.terms) {
    for (int k = 0; k < m; ++k) row[t.images[k]] += rm(a, k) * t.weights[k];
    const cplx w = t.weights[a];
    const int src = t.images[a];
    for (int b = 0; b < m; ++b) row[b] -= w * rm(src, b);
  }
}

struct Assembly {
  ComplexMatrix m;
  HermitianMatrix g;
  bool structured = false;
};

Assembly assemble_impl(const HermitianMatrix& r, const GeneratorBasis& basis) {
  require(r.dim() == basis.dim(), "covariance and basis dimensions differ");
  const int d = basis.size();
  Assembly out{ComplexMatrix(d, d), gram(basis), basis.all_structured()};
  if (out.structured) {
    const int n = r.dim();
    std::vector<std::vector<cplx>> rows(d, std::vector<cplx>(n));
    for (int a = 0; a < n; ++a) {
      for (int j = 0; j < d; ++j) commutator_row(r, basis[j], a, rows[j].data());
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          cplx acc = 0.0;
          for (int b = 0; b < n; ++b) acc += std::conj(rows[i][b]) * rows[j][b];
          out.m(i, j) += acc;
        }
    }
    for (int i = 0; i < d; ++i) {
      out.m(i, i) = out.m(i, i).real();
      for (int j = i + 1; j < d; ++j) out.m(j, i) = std::conj(out.m(i, j));
    }
    return out;
  }
  const ComplexMatrix& rm = r.matrix();
  const ComplexMatrix r2 = rm * rm;
  for (int j = 0; j < d; ++j) {
    const ComplexMatrix& b = basis[j].dense;
    ComplexMatrix c = r2 * b;
    c -= 2.0 * ((rm * b) * rm);
    c += b * r2;
    for (int i = 0; i < d; ++i) out.m(i, j) = frobenius_inner(basis[i].dense, c);
  }
  ComplexMatrix sym(d, d);
  for (int i = 0; i < d; ++i) {
    sym(i, i) = out.m(i, i).real();
    for (int j = i + 1; j < d; ++j) {
      const cplx avg = 0.5 * (out.m(i, j) + std::conj(out.m(j, i)));
      sym(i, j) = avg;
      sym(j, i) = std::conj(avg);
    }
  }
  out.m = std::move(sym);
  return out;
}

}  // namespace

std::pair<HermitianMatrix, HermitianMatrix> assemble(const HermitianMatrix& r,
                                                     const GeneratorBasis& basis) {
  Assembly a = assemble_impl(r, basis);
  return {HermitianMatrix(std::move(a.m)), std::move(a.g)};
}

GevpSolution select_generator(const HermitianMatrix& r, const GeneratorBasis& basis) {
  Assembly a = assemble_impl(r, basis);
  const int d = basis.size();
  const HermitianMatrix m(std::move(a.m));
  const double m_norm = m.frobenius_norm();

  GevpResult full = gevp(m, a.g);
  // Pencil eigenvalues carry R-energy units under c*Gc = 1, so a numerically
  // zero M (fully commuting R) is judged against the certificate scale, not
  // only against its own noise-level norm.
  const double r_energy = r.frobenius_norm() * r.frobenius_norm();
  const double floor = std::max(1e-10 * m_norm, kZeroCertRel * r_energy);
  if (full.eigenvalues.front() < -floor)
    throw NumericalError("assembled double-commutator matrix is significantly indefinite");
  for (double& lam : full.eigenvalues)
    if (lam < 0.0) lam = 0.0;

  GevpSolution sol;
  sol.spectrum = full.eigenvalues;
  sol.lambda_min = sol.spectrum.front();
  const double lambda_max = sol.spectrum.back();
  sol.condition_ratio = lambda_max > 0.0 ? sol.lambda_min / lambda_max : 0.0;

  int multiplicity = 1;
  while (multiplicity < d &&
         sol.spectrum[multiplicity] - sol.lambda_min < kDegenerateGap)
    ++multiplicity;
  sol.eigenspace_dim = multiplicity;

  std::vector<cplx> c(d);
  if (multiplicity == 1) {
    for (int k = 0; k < d; ++k) c[k] = full.eigenvectors(k, 0);
  } else {
    // Within the eigenspace, maximize |c_j| at the first row j where the
    // eigenspace has any mass; the result is the reproducible representative
    // with lexicographically greatest coefficient magnitudes.
    int pivot = -1;
    double pivot_norm = 0.0;
    for (int j = 0; j < d && pivot < 0; ++j) {
      double row = 0.0;
      for (int s = 0; s < multiplicity; ++s) row += std::norm(full.eigenvectors(j, s));
      if (std::sqrt(row) > 1e-9) {
        pivot = j;
        pivot_norm = std::sqrt(row);
      }
    }
    if (pivot < 0) {
      for (int k = 0; k < d; ++k) c[k] = full.eigenvectors(k, 0);
    } else {
      for (int k = 0; k < d; ++k) {
        cplx acc = 0.0;
        for (int s = 0; s < multiplicity; ++s)
          acc += full.eigenvectors(k, s) * std::conj(full.eigenvectors(pivot, s));
        c[k] = acc / pivot_norm;
      }
    }
  }

  int lead = 0;
  for (int k = 1; k < d; ++k)
    if (std::abs(c[k]) > std::abs(c[lead])) lead = k;
  if (std::abs(c[lead]) > 0.0) {
    const cplx phase = c[lead] / std::abs(c[lead]);
    for (cplx& v : c) v /= phase;
  }
  sol.coefficients = c;

  const int n = r.dim();
  sol.generator = ComplexMatrix(n, n);
  if (a.structured) {
    for (int k = 0; k < d; ++k)
      for (const MonomialTerm& t : basis[k].terms)
        for (int i = 0; i < n; ++i) sol.generator(i, t.images[i]) += c[k] * t.weights[i];
  } else {
    for (int k = 0; k < d; ++k) {
      ComplexMatrix scaled = basis[k].dense;
      scaled *= c[k];
      sol.generator += scaled;
    }
  }
  const double a_norm = sol.generator.frobenius_norm();
  if (a_norm <= 0.0) throw NumericalError("reconstructed generator collapsed to zero");

  if (a.structured) {
    std::vector<cplx> row(n), mix(n);
    double energy = 0.0;
    for (int i = 0; i < n; ++i) {
      std::fill(mix.begin(), mix.end(), cplx(0.0));
      for (int k = 0; k < d; ++k) {
        commutator_row(r, basis[k], i, row.data());
        for (int b = 0; b < n; ++b) mix[b] += c[k] * row[b];
      }
      for (int b = 0; b < n; ++b) energy += std::norm(mix[b]);
    }
    sol.residual = std::sqrt(energy) / (a_norm * r.frobenius_norm());
  } else {
    sol.residual = residual(sol.generator, r);
  }

  sol.commuting_found = sol.lambda_min <= kZeroCertRel * r_energy;
  return sol;
}

double residual(const ComplexMatrix& a, const HermitianMatrix& r) {
  require(a.square() && a.rows() == r.dim(), "residual arguments must match in dimension");
  const double a_norm = a.frobenius_norm();
  const double r_norm = r.frobenius_norm();
  require(a_norm > 0.0 && r_norm > 0.0, "residual requires nonzero arguments");
  return commutator(a, r.matrix()).frobenius_norm() / (a_norm * r_norm);
}

}  // namespace groupsel
