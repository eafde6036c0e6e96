#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupsel/basis.hpp"
#include "groupsel/dcgevp.hpp"
#include "groupsel/matrix.hpp"
#include "groupsel/permutation.hpp"

namespace groupsel {

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, stored (a < b)
  std::string label;
};

// label in {C6, K4, P6, prism, K3, S5}.
Graph make_graph(const std::string& label);

HermitianMatrix laplacian(const Graph& g);

// e^{-beta L}; shares the graph's automorphism group for every beta > 0.
HermitianMatrix diffusion_covariance(const Graph& g, double beta);

struct GeneratorRow {
  std::string label;
  Permutation sigma = Permutation::identity(1);
  double delta = 0.0;
  bool declared_automorphism = false;
  bool oracle_automorphism = false;
};

struct GraphAutReport {
  std::string graph;
  int m = 0;
  double beta = 0.0;
  std::size_t aut_order = 0;
  std::vector<GeneratorRow> rows;
  int best_row = 0;                     // index of the minimum-delta row
  bool best_is_oracle_automorphism = false;
  bool classification_matches_oracle = false;  // declared set == oracle set
  GevpSolution gevp;                    // GEVP selection on the full catalog
};

// Residual table of the standard catalog against the diffusion covariance,
// cross-checked against the brute-force automorphism oracle.
GraphAutReport graph_aut_experiment(const Graph& g, double beta);

// Log-uniform draw from [0.5, 5], the default circulant spectrum.
std::vector<double> default_chirp_spectrum(int m, std::uint64_t seed);

// Population covariance U(psi0) C U(psi0)^* (+ sigma^2 I when snr_db is
// given), C circulant with the given spectrum; with snapshots set, the
// empirical covariance of that many synthetic Gaussian draws instead.
HermitianMatrix chirp_covariance(int m, double psi0, const std::vector<double>& spectrum,
                                 std::optional<double> snr_db, std::optional<int> snapshots,
                                 std::uint64_t seed);

struct SweepResult {
  std::vector<double> grid;
  std::vector<double> lambda_min;
  double argmin_psi = 0.0;
};

// lambda_min(psi) of the one-element DC-GEVP over an even grid.
SweepResult chirp_sweep(const HermitianMatrix& r, double psi_lo, double psi_hi, int steps);

struct BenchRow {
  int m = 0;
  double dcgevp_seconds = 0.0;
  double library_seconds = 0.0;
  double oracle_seconds = -1.0;  // -1 when M > 7
};

// Median wall times: GEVP selection on a d-element permutation catalog, direct
// residual evaluation per catalog generator, and the exhaustive oracle.
std::vector<BenchRow> benchmark(const std::vector<int>& m_values, int d, int repeats);

}  // namespace groupsel
