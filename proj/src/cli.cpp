#include "groupsel/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "groupsel/basis.hpp"
#include "groupsel/dcgevp.hpp"
#include "groupsel/errors.hpp"
#include "groupsel/experiments.hpp"
#include "groupsel/identifiability.hpp"
#include "groupsel/io.hpp"
#include "groupsel/permutation.hpp"
#include "groupsel/seqgevp.hpp"
#include "groupsel/tolerances.hpp"

namespace groupsel {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

GeneratorBasis parse_basis_spec(const std::string& spec, int m) {
  if (spec == "standard") {
    std::vector<std::string> warnings;
    GeneratorBasis basis = standard_catalog(m, &warnings);
    for (const std::string& w : warnings) std::cerr << "note: " << w << '\n';
    return basis;
  }
  if (spec.rfind("permdiff:", 0) == 0) {
    const PermutationGroup group = read_group(spec.substr(9));
    if (group.degree() != m)
      throw ValidationError("basis group degree " + std::to_string(group.degree()) +
                            " does not match the matrix dimension " + std::to_string(m));
    if (group.generators().empty())
      throw ValidationError("basis group file lists no non-identity generators");
    return perm_diff_basis(group.generators());
  }
  if (spec.rfind("chirp:", 0) == 0) {
    const std::string arg = spec.substr(6);
    std::size_t used = 0;
    double psi = 0.0;
    try {
      psi = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != arg.size()) throw ValidationError("cannot parse chirp rate '" + arg + "'");
    return chirp_basis(m, psi);
  }
  throw ValidationError("unknown basis spec '" + spec +
                        "' (expected standard, permdiff:FILE, or chirp:PSI)");
}

void print_certificate(const GevpSolution& sol) {
  std::cout << "lambda_min " << format_double(sol.lambda_min) << '\n';
  std::cout << "delta " << format_double(sol.residual) << '\n';
  std::cout << "condition_ratio " << format_double(sol.condition_ratio) << '\n';
  std::cout << "eigenspace_dim " << sol.eigenspace_dim << '\n';
  std::cout << "commuting_found " << bool_str(sol.commuting_found) << '\n';
  std::cout << "spectrum";
  for (double v : sol.spectrum) std::cout << ' ' << format_double(v);
  std::cout << '\n';
  std::cout << "coefficients";
  for (const cplx& c : sol.coefficients)
    std::cout << ' ' << format_double(c.real()) << ' ' << format_double(c.imag());
  std::cout << '\n';
}

std::string termination_str(Termination t) {
  switch (t) {
    case Termination::Rejected:
      return "rejected";
    case Termination::IterationCap:
      return "iteration-cap";
    default:
      return "basis-exhausted";
  }
}

void emit_table(const TsvTable& table, const std::string& report_path) {
  std::cout << render_tsv(table);
  if (!report_path.empty()) write_tsv(report_path, table);
}

void run_select(const std::string& matrix_path, const std::string& basis_spec,
                const std::string& out_path) {
  const HermitianMatrix r(read_matrix(matrix_path));
  const GeneratorBasis basis = parse_basis_spec(basis_spec, r.dim());
  const GevpSolution sol = select_generator(r, basis);
  std::cout << "dim " << r.dim() << '\n';
  std::cout << "basis_size " << basis.size() << '\n';
  print_certificate(sol);
  if (!out_path.empty()) {
    write_matrix(out_path, sol.generator);
    std::cout << "wrote_generator " << out_path << '\n';
  }
}

void run_sequential(const std::string& matrix_path, const std::string& basis_spec, double tau,
                    int kmax, const std::string& report_path, const std::string& group_out) {
  const HermitianMatrix r(read_matrix(matrix_path));
  const GeneratorBasis basis = parse_basis_spec(basis_spec, r.dim());
  const SubgroupTrace trace = sequential_select(r, basis, tau, kmax);

  TsvTable table;
  table.columns = {"iteration", "deflated_dim", "lambda_min", "delta",     "sigma",
                   "overlap",   "sigma_delta",  "accepted",   "group_order"};
  for (const IterationRecord& rec : trace.records)
    table.rows.push_back({std::to_string(rec.index), std::to_string(rec.deflated_dim),
                          format_double(rec.gevp.lambda_min), format_double(rec.gevp.residual),
                          rec.rounded.cycle_notation(), format_double(rec.overlap),
                          format_double(rec.rounded_residual), bool_str(rec.accepted),
                          std::to_string(rec.group_order_after)});
  emit_table(table, report_path);

  std::cout << "termination " << termination_str(trace.termination) << '\n';
  std::cout << "accepted " << trace.accepted_count() << '\n';
  std::cout << "final_order " << trace.final_group.order() << '\n';
  for (const Permutation& g : trace.final_group.generators())
    std::cout << "generator " << g.cycle_notation() << '\n';
  if (!group_out.empty()) {
    write_group(group_out, trace.final_group);
    std::cout << "wrote_group " << group_out << '\n';
  }
}

void run_aut_graph(const std::string& graph_label, double beta, const std::string& report_path,
                   const std::string& svg_path) {
  const Graph graph = make_graph(graph_label);
  const GraphAutReport report = graph_aut_experiment(graph, beta);

  std::cout << "graph " << report.graph << '\n';
  std::cout << "m " << report.m << '\n';
  std::cout << "beta " << format_double(report.beta) << '\n';
  std::cout << "aut_order " << report.aut_order << '\n';
  std::cout << "best_generator " << report.rows[report.best_row].label << '\n';
  std::cout << "best_delta " << format_double(report.rows[report.best_row].delta) << '\n';
  std::cout << "best_is_oracle " << bool_str(report.best_is_oracle_automorphism) << '\n';
  std::cout << "classification_matches_oracle " << bool_str(report.classification_matches_oracle)
            << '\n';
  std::cout << "gevp_lambda_min " << format_double(report.gevp.lambda_min) << '\n';
  std::cout << "gevp_delta " << format_double(report.gevp.residual) << '\n';

  TsvTable table;
  table.columns = {"generator", "delta", "declared_automorphism", "oracle_automorphism"};
  std::vector<std::string> labels;
  std::vector<double> deltas;
  for (const GeneratorRow& row : report.rows) {
    table.rows.push_back({row.label, format_double(row.delta),
                          bool_str(row.declared_automorphism), bool_str(row.oracle_automorphism)});
    labels.push_back(row.label);
    deltas.push_back(row.delta);
  }
  emit_table(table, report_path);
  if (!svg_path.empty())
    write_svg_bars(svg_path, report.graph + " catalog residuals", labels, deltas);
}

void run_chirp_sweep(int m, double psi0, double snr_db, int grid, double psi_lo, double psi_hi,
                     std::optional<int> snapshots, std::uint64_t seed,
                     const std::string& report_path, const std::string& svg_path) {
  const std::vector<double> spectrum = default_chirp_spectrum(m, seed);
  const HermitianMatrix r = chirp_covariance(m, psi0, spectrum, snr_db, snapshots, seed);
  const SweepResult sweep = chirp_sweep(r, psi_lo, psi_hi, grid);

  const double rnorm = r.frobenius_norm();
  std::cout << "m " << m << '\n';
  std::cout << "psi0 " << format_double(psi0) << '\n';
  std::cout << "snr_db " << format_double(snr_db) << '\n';
  std::cout << "snapshots " << (snapshots ? std::to_string(*snapshots) : "population") << '\n';
  std::cout << "r_norm_sq " << format_double(rnorm * rnorm) << '\n';
  std::cout << "argmin " << format_double(sweep.argmin_psi) << '\n';
  const auto it = std::min_element(sweep.lambda_min.begin(), sweep.lambda_min.end());
  std::cout << "lambda_at_argmin " << format_double(*it) << '\n';

  TsvTable table;
  table.columns = {"psi", "lambda_min"};
  for (std::size_t i = 0; i < sweep.grid.size(); ++i)
    table.rows.push_back({format_double(sweep.grid[i]), format_double(sweep.lambda_min[i])});
  emit_table(table, report_path);
  if (!svg_path.empty())
    write_svg_polyline(svg_path, "chirp sweep lambda_min(psi)", sweep.grid, sweep.lambda_min);
}

void run_oracle_aut(const std::string& matrix_path, const std::string& graph_label, double beta,
                    double tol, const std::string& group_out) {
  if (matrix_path.empty() == graph_label.empty())
    throw ValidationError("pass exactly one of --matrix and --graph");
  std::optional<HermitianMatrix> r;
  if (!matrix_path.empty()) {
    r.emplace(read_matrix(matrix_path));
  } else {
    const Graph graph = make_graph(graph_label);
    r.emplace(diffusion_covariance(graph, beta));
    std::cout << "graph " << graph.label << '\n';
  }
  const PermutationGroup aut = aut_bruteforce(*r, tol);
  std::cout << "order " << aut.order() << '\n';
  for (const Permutation& g : aut.generators())
    std::cout << "generator " << g.cycle_notation() << '\n';
  if (!group_out.empty()) {
    write_group(group_out, aut);
    std::cout << "wrote_group " << group_out << '\n';
  }
}

void run_reynolds(const std::string& matrix_path, const std::string& group_path,
                  const std::string& out_path) {
  const ComplexMatrix x = read_matrix(matrix_path);
  const PermutationGroup group = read_group(group_path);
  const ComplexMatrix projected = reynolds_project(group, x);
  std::cout << "dim " << x.rows() << '\n';
  std::cout << "group_order " << group.order() << '\n';
  std::cout << "projection_residual " << format_double((projected - x).frobenius_norm()) << '\n';
  std::cout << "projected_in_commutant " << bool_str(in_commutant(group, projected, 1e-10))
            << '\n';
  if (!out_path.empty()) {
    write_matrix(out_path, projected);
    std::cout << "wrote_projection " << out_path << '\n';
  }
}

void run_classify_group(const std::string& group_path, bool merged) {
  const PermutationGroup group = read_group(group_path);
  const PairMode mode = merged ? PairMode::TransposeMerged : PairMode::Ordered;
  const GroupClassification cls = classify_identifiability(group, mode);
  std::cout << "degree " << group.degree() << '\n';
  std::cout << "order " << group.order() << '\n';
  std::cout << "mode " << (merged ? "transpose-merged" : "ordered") << '\n';
  std::cout << "identifiable " << bool_str(cls.identifiable) << '\n';
  std::cout << "hmax_order " << cls.hmax.order() << '\n';
  for (const Permutation& g : cls.hmax.generators())
    std::cout << "hmax_generator " << g.cycle_notation() << '\n';
}

void run_gen_experiment(const std::string& group_path, int trials, std::uint64_t seed,
                        const std::string& ensemble_name) {
  const PermutationGroup group = read_group(group_path);
  const Ensemble ensemble =
      ensemble_name == "complex" ? Ensemble::ComplexHermitian : Ensemble::RealSymmetric;
  const GenerativeReport report = generative_experiment(group, trials, seed, ensemble);
  std::cout << "degree " << group.degree() << '\n';
  std::cout << "group_order " << group.order() << '\n';
  std::cout << "ensemble " << ensemble_name << '\n';
  std::cout << "predicted " << (report.predicted_identifiable ? "identifiable" : "ambiguous")
            << '\n';
  std::cout << "hmax_order " << report.hmax.order() << '\n';
  std::cout << "trials " << report.trials << '\n';
  std::cout << "exact_matches " << report.exact_matches << '\n';
  std::cout << "containment_holds " << report.containment_holds << '\n';
  std::cout << "aut_orders";
  for (std::size_t v : report.aut_orders) std::cout << ' ' << v;
  std::cout << '\n';
  for (const CollisionLog& c : report.collisions)
    std::cout << "collision trial=" << c.trial << " blocks=" << c.block_a << ',' << c.block_b
              << " values=" << format_double(c.value_a) << ',' << format_double(c.value_b) << '\n';
}

void run_bench(const std::vector<int>& m_values, int d, int repeats,
               const std::string& report_path) {
  const std::vector<BenchRow> rows = benchmark(m_values, d, repeats);
  TsvTable table;
  table.columns = {"m", "dcgevp_seconds", "library_seconds", "oracle_seconds"};
  for (const BenchRow& row : rows)
    table.rows.push_back({std::to_string(row.m), format_double(row.dcgevp_seconds),
                          format_double(row.library_seconds),
                          row.oracle_seconds < 0.0 ? "-" : format_double(row.oracle_seconds)});
  emit_table(table, report_path);
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"Permutation-generator selection via the double-commutator GEVP", "groupsel"};
  app.require_subcommand(1);

  std::string matrix_path, basis_spec = "standard", out_path, report_path, svg_path;
  std::string group_path, group_out, graph_label, ensemble_name = "real";
  double tau = 0.0, beta = 1.0, tol = 1e-8;
  double psi0 = 0.15, snr_db = 10.0, psi_lo = 0.0, psi_hi = 0.3;
  int kmax = 8, m = 64, grid = 61, trials = 20, d = 5, repeats = 3;
  std::uint64_t seed = 1;
  std::optional<int> snapshots;
  bool merged = false;
  std::vector<int> bench_m = {64, 128, 256};

  CLI::App* select =
      app.add_subcommand("select", "Select the best single generator for a covariance file");
  select->add_option("--matrix", matrix_path, "Hermitian covariance file")->required();
  select->add_option("--basis", basis_spec, "standard | permdiff:FILE | chirp:PSI");
  select->add_option("--out", out_path, "Write the optimal generator here")
      ->default_val("astar.mat");
  select->callback([&] { run_select(matrix_path, basis_spec, out_path); });

  CLI::App* sequential =
      app.add_subcommand("sequential", "Recover a symmetry subgroup generator by generator");
  sequential->add_option("--matrix", matrix_path, "Hermitian covariance file")->required();
  sequential->add_option("--basis", basis_spec, "standard | permdiff:FILE | chirp:PSI");
  sequential->add_option("--tau", tau, "Acceptance threshold; 0 selects the zero-residual mode");
  sequential->add_option("--kmax", kmax, "Iteration cap")->check(CLI::PositiveNumber);
  sequential->add_option("--report", report_path, "Write the per-iteration TSV here");
  sequential->add_option("--group-out", group_out, "Write the final group here");
  sequential->callback(
      [&] { run_sequential(matrix_path, basis_spec, tau, kmax, report_path, group_out); });

  CLI::App* aut_graph =
      app.add_subcommand("aut-graph", "Catalog residual study on a named graph");
  aut_graph->add_option("--graph", graph_label, "C6 | K4 | P6 | prism | K3 | S5")->required();
  aut_graph->add_option("--beta", beta, "Diffusion time")->check(CLI::PositiveNumber);
  aut_graph->add_option("--report", report_path, "Write the residual TSV here");
  aut_graph->add_option("--svg", svg_path, "Write a bar chart of the residuals here");
  aut_graph->callback([&] { run_aut_graph(graph_label, beta, report_path, svg_path); });

  CLI::App* chirp =
      app.add_subcommand("chirp-sweep", "Sweep lambda_min(psi) for a chirped covariance");
  chirp->add_option("--m", m, "Signal dimension")->check(CLI::PositiveNumber);
  chirp->add_option("--psi0", psi0, "True chirp rate");
  chirp->add_option("--snr-db", snr_db, "Isotropic noise level");
  chirp->add_option("--grid", grid, "Grid point count")->check(CLI::PositiveNumber);
  chirp->add_option("--psi-min", psi_lo, "Grid lower edge");
  chirp->add_option("--psi-max", psi_hi, "Grid upper edge");
  chirp->add_option("--snapshots", snapshots, "Use an empirical covariance of this many draws");
  chirp->add_option("--seed", seed, "Spectrum and snapshot seed");
  chirp->add_option("--report", report_path, "Write the (psi, lambda_min) TSV here");
  chirp->add_option("--svg", svg_path, "Write a polyline chart here");
  chirp->callback([&] {
    run_chirp_sweep(m, psi0, snr_db, grid, psi_lo, psi_hi, snapshots, seed, report_path, svg_path);
  });

  CLI::App* oracle = app.add_subcommand("oracle-aut", "Exhaustive automorphism group search");
  oracle->add_option("--matrix", matrix_path, "Hermitian covariance file");
  oracle->add_option("--graph", graph_label, "C6 | K4 | P6 | prism | K3 | S5");
  oracle->add_option("--beta", beta, "Diffusion time for --graph")->check(CLI::PositiveNumber);
  oracle->add_option("--tol", tol, "Relative commutation tolerance")->check(CLI::PositiveNumber);
  oracle->add_option("--group-out", group_out, "Write the group here");
  oracle->callback([&] { run_oracle_aut(matrix_path, graph_label, beta, tol, group_out); });

  CLI::App* reynolds =
      app.add_subcommand("reynolds", "Project a matrix onto a group's commutant");
  reynolds->add_option("--matrix", matrix_path, "Matrix file")->required();
  reynolds->add_option("--group", group_path, "Group file")->required();
  reynolds->add_option("--out", out_path, "Write the projection here")
      ->default_val("projected.mat");
  reynolds->callback([&] { run_reynolds(matrix_path, group_path, out_path); });

  CLI::App* classify =
      app.add_subcommand("classify-group", "Identifiability via the orbit-pair dichotomy");
  classify->add_option("--group", group_path, "Group file")->required();
  classify->add_flag("--merged", merged, "Glue transposed pairs (real-symmetric ensembles)");
  classify->callback([&] { run_classify_group(group_path, merged); });

  CLI::App* genexp =
      app.add_subcommand("gen-experiment", "Generative identifiability trials");
  genexp->add_option("--group", group_path, "Group file")->required();
  genexp->add_option("--trials", trials, "Trial count")->check(CLI::PositiveNumber);
  genexp->add_option("--seed", seed, "Root seed");
  genexp->add_option("--ensemble", ensemble_name, "real | complex")
      ->check(CLI::IsMember({"real", "complex"}));
  genexp->callback([&] { run_gen_experiment(group_path, trials, seed, ensemble_name); });

  CLI::App* bench = app.add_subcommand("bench", "Median wall times per dimension");
  bench->add_option("--m", bench_m, "Dimensions to time");
  bench->add_option("--d", d, "Catalog size")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", repeats, "Repeats per median")->check(CLI::PositiveNumber);
  bench->add_option("--report", report_path, "Write the timing TSV here");
  bench->callback([&] { run_bench(bench_m, d, repeats, report_path); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace groupsel
