#include "groupsel/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "groupsel/errors.hpp"
#include "groupsel/rng.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

Graph build(const std::string& label, int vertices, std::vector<std::pair<int, int>> edges) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return {vertices, std::move(edges), label};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

template <typename F>
double time_seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

Graph make_graph(const std::string& label) {
  if (label == "C6")
    return build(label, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  if (label == "K4")
    return build(label, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (label == "P6")
    return build(label, 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  if (label == "prism")
    return build(label, 6,
                 {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  if (label == "K3") return build(label, 3, {{0, 1}, {0, 2}, {1, 2}});
  if (label == "S5")
    return build(label, 5, {{2, 0}, {2, 1}, {2, 3}, {2, 4}});
  throw ValidationError("unknown graph label: " + label);
}

HermitianMatrix laplacian(const Graph& g) {
  require(g.vertices >= 1, "graph needs at least one vertex");
  ComplexMatrix l(g.vertices, g.vertices);
  for (const auto& [a, b] : g.edges) {
    require(a >= 0 && b < g.vertices && a != b, "edge endpoints out of range");
    l(a, a) += 1.0;
    l(b, b) += 1.0;
    l(a, b) -= 1.0;
    l(b, a) -= 1.0;
  }
  return HermitianMatrix(std::move(l));
}

HermitianMatrix diffusion_covariance(const Graph& g, double beta) {
  require(beta > 0.0, "diffusion time must be positive");
  return matrix_exp_neg(laplacian(g), beta);
}

GraphAutReport graph_aut_experiment(const Graph& g, double beta) {
  require(g.vertices <= kBruteforceMaxDegree, "oracle cross-check is capped at 8 vertices");
  const HermitianMatrix r = diffusion_covariance(g, beta);
  const GeneratorBasis catalog = standard_catalog(g.vertices);
  const PermutationGroup oracle = aut_bruteforce(r);

  GraphAutReport report;
  report.graph = g.label;
  report.m = g.vertices;
  report.beta = beta;
  report.aut_order = oracle.order();
  bool match = true;
  for (const BasisElement& e : catalog.elements()) {
    GeneratorRow row;
    row.label = e.label;
    row.sigma = *e.permutation;
    row.delta = residual(e.dense, r);
    row.declared_automorphism = row.delta <= kZeroCertRel;
    row.oracle_automorphism = oracle.contains(row.sigma);
    match = match && row.declared_automorphism == row.oracle_automorphism;
    report.rows.push_back(std::move(row));
  }
  report.classification_matches_oracle = match;
  report.best_row = 0;
  for (int k = 1; k < static_cast<int>(report.rows.size()); ++k)
    if (report.rows[k].delta < report.rows[report.best_row].delta) report.best_row = k;
  report.best_is_oracle_automorphism = report.rows[report.best_row].oracle_automorphism;
  report.gevp = select_generator(r, catalog);
  return report;
}

std::vector<double> default_chirp_spectrum(int m, std::uint64_t seed) {
  require(m >= 1, "spectrum length must be positive");
  Rng rng(seed);
  std::vector<double> s(m);
  const double lo = std::log(0.5);
  const double hi = std::log(5.0);
  for (double& v : s) v = std::exp(rng.uniform(lo, hi));
  return s;
}

HermitianMatrix chirp_covariance(int m, double psi0, const std::vector<double>& spectrum,
                                 std::optional<double> snr_db, std::optional<int> snapshots,
                                 std::uint64_t seed) {
  require(m >= 1, "dimension must be positive");
  require(static_cast<int>(spectrum.size()) == m, "spectrum length must equal M");
  double lo = spectrum.front(), hi = spectrum.front(), mean = 0.0;
  for (double s : spectrum) {
    require(s > 0.0, "spectrum entries must be positive");
    lo = std::min(lo, s);
    hi = std::max(hi, s);
    mean += s;
  }
  mean /= m;
  require(hi - lo > 1e-9 * mean,
          "flat spectrum rejected: the covariance would commute with every generator");

  ComplexMatrix c(m, m);
  const double w = 2.0 * std::numbers::pi / m;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      cplx acc = 0.0;
      for (int k = 0; k < m; ++k) acc += spectrum[k] * std::polar(1.0, w * k * (a - b));
      c(a, b) = acc / static_cast<double>(m);
    }

  ComplexMatrix r0(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const double phase =
          -std::numbers::pi * psi0 *
          (static_cast<double>(a) * a - static_cast<double>(b) * b);
      r0(a, b) = std::polar(1.0, phase) * c(a, b);
    }
  if (snr_db) {
    const double sigma2 = mean / std::pow(10.0, *snr_db / 10.0);
    for (int a = 0; a < m; ++a) r0(a, a) += sigma2;
  }
  HermitianMatrix population(std::move(r0));
  if (!snapshots) return population;

  require(*snapshots >= 1, "snapshot count must be positive");
  const EigenDecomposition eig = hermitian_eig(population);
  ComplexMatrix root(m, m);
  for (int j = 0; j < m; ++j) {
    const double lam = std::max(eig.eigenvalues[j], 0.0);
    const double s = std::sqrt(lam);
    for (int i = 0; i < m; ++i) root(i, j) = s * eig.eigenvectors(i, j);
  }
  Rng rng(seed);
  ComplexMatrix acc(m, m);
  std::vector<cplx> z(m), x(m);
  for (int t = 0; t < *snapshots; ++t) {
    for (int i = 0; i < m; ++i) z[i] = rng.complex_normal();
    for (int i = 0; i < m; ++i) {
      cplx v = 0.0;
      for (int j = 0; j < m; ++j) v += root(i, j) * z[j];
      x[i] = v;
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) acc(a, b) += x[a] * std::conj(x[b]);
  }
  acc *= cplx(1.0 / *snapshots, 0.0);
  return HermitianMatrix(std::move(acc));
}

SweepResult chirp_sweep(const HermitianMatrix& r, double psi_lo, double psi_hi, int steps) {
  require(steps >= 2, "sweep needs at least two grid points");
  require(psi_hi > psi_lo, "sweep interval must be nondegenerate");
  SweepResult out;
  out.grid.resize(steps);
  out.lambda_min.resize(steps);
  int best = 0;
  for (int k = 0; k < steps; ++k) {
    const double psi = psi_lo + (psi_hi - psi_lo) * k / (steps - 1);
    out.grid[k] = psi;
    const auto [m, g] = assemble(r, chirp_basis(r.dim(), psi));
    out.lambda_min[k] = std::max(m(0, 0).real() / g(0, 0).real(), 0.0);
    if (out.lambda_min[k] < out.lambda_min[best]) best = k;
  }
  out.argmin_psi = out.grid[best];
  return out;
}

std::vector<BenchRow> benchmark(const std::vector<int>& m_values, int d, int repeats) {
  require(d >= 1, "benchmark needs at least one basis element");
  require(repeats >= 1, "benchmark needs at least one repeat");
  std::vector<BenchRow> rows;
  for (int m : m_values) {
    const GeneratorBasis catalog = standard_catalog(m);
    require(catalog.size() >= d, "catalog at this M has fewer elements than requested");
    std::vector<BasisElement> subset(catalog.elements().begin(),
                                     catalog.elements().begin() + d);
    const GeneratorBasis basis(m, std::move(subset));
    Rng rng(0x9e3779b9u ^ static_cast<std::uint64_t>(m));
    const HermitianMatrix r = random_hermitian(m, Ensemble::RealSymmetric, rng);

    BenchRow row;
    row.m = m;
    std::vector<double> t_gevp, t_lib, t_oracle;
    for (int rep = 0; rep < repeats; ++rep) {
      t_gevp.push_back(time_seconds([&] { select_generator(r, basis); }));
      t_lib.push_back(time_seconds([&] {
        for (const BasisElement& e : basis.elements()) residual(e.dense, r);
      }));
      if (m <= 7) t_oracle.push_back(time_seconds([&] { aut_bruteforce(r); }));
    }
    row.dcgevp_seconds = median(t_gevp);
    row.library_seconds = median(t_lib);
    row.oracle_seconds = t_oracle.empty() ? -1.0 : median(t_oracle);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace groupsel
