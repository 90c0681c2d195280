// Command-line front end: figure datasets, parameter sweeps, entanglement
// thresholds, the claim verification suite, and the acceleration -> r
// conversion. Emits CSV or JSON.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rindler/analysis.hpp"
#include "rindler/version.hpp"

namespace {

using namespace rindler;

constexpr double kPiQuarter = 3.14159265358979323846 / 4.0;

constexpr const char* kFigureHelp =
    "Figure dataset id:\n"
    "  1  discord D(A:I) over the (r, p) grid\n"
    "  2  logarithmic negativity N(rho_AI)\n"
    "  3  discord D(A:II)\n"
    "  4  logarithmic negativity N(rho_AII)\n"
    "  5  discord of all bipartitions vs r, both measurement directions, p = 1\n"
    "  6  entanglement of formation E_f(rho_AI)\n"
    "  7  negativity gap N(rho_IB) - N(rho_tilde_IB) over the (r, beta) grid";

struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";
  bool no_metadata = false;
};

struct GridOptions {
  int r_points = 65;
  int p_points = 65;
  bool force_oracle = false;
  int oracle_resolution = 64;
};

void write_table(const SweepTable& table, const OutputOptions& out) {
  std::ostringstream body;
  if (out.format == "json")
    table.write_json(body, !out.no_metadata);
  else
    table.write_csv(body, !out.no_metadata);

  if (out.path == "-") {
    std::cout << body.str();
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + out.path);
  f << body.str();
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--output", out.path, "Output path, '-' for stdout")->capture_default_str();
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_flag("--no-metadata", out.no_metadata,
                "Suppress the run-specific metadata header");
}

void add_grid_options(CLI::App* cmd, GridOptions& grid) {
  cmd->add_option("--r-points", grid.r_points, "Acceleration grid size")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  cmd->add_option("--p-points", grid.p_points, "Fraction (or beta) grid size")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  cmd->add_flag("--force-oracle", grid.force_oracle,
                "Use the brute-force measurement search even for X-states");
  cmd->add_option("--oracle-resolution", grid.oracle_resolution,
                  "Coarse grid resolution of the oracle search")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
}

SweepTable figure_table(int id, const GridOptions& grid) {
  const auto rs = uniform_grid(0.0, kPiQuarter, grid.r_points);
  const auto ps = uniform_grid(0.0, 1.0, grid.p_points);
  SweepSpec spec;
  spec.r_grid = rs;
  spec.p_grid = ps;
  spec.force_oracle = grid.force_oracle;
  spec.oracle_resolution = grid.oracle_resolution;
  switch (id) {
    case 1:
      spec.family = Family::AI;
      spec.measures = {Measure::Discord};
      return run_sweep(spec);
    case 2:
      spec.family = Family::AI;
      spec.measures = {Measure::Negativity};
      return run_sweep(spec);
    case 3:
      spec.family = Family::AII;
      spec.measures = {Measure::Discord};
      return run_sweep(spec);
    case 4:
      spec.family = Family::AII;
      spec.measures = {Measure::Negativity};
      return run_sweep(spec);
    case 5:
      return discord_direction_table(rs, FractionP(1.0), grid.force_oracle,
                                     grid.oracle_resolution);
    case 6:
      spec.family = Family::AI;
      spec.measures = {Measure::Eof};
      return run_sweep(spec);
    case 7:
      spec.family = Family::IBPair;
      spec.measures = {Measure::Negativity};
      return run_sweep(spec);
    default:
      throw CLI::ValidationError("figure", "unknown figure id");
  }
}

int run_verify(const std::string& output_path) {
  const ClaimReport rep = verify_claims();
  for (const auto& c : rep.entries) {
    std::printf("[%s] %-28s measured=%.6g target=%.6g tol=%.3g  (%s)\n",
                c.pass ? "PASS" : "FAIL", c.id.c_str(), c.measured, c.target, c.tolerance,
                c.description.c_str());
  }
  const int failures =
      static_cast<int>(std::count_if(rep.entries.begin(), rep.entries.end(),
                                     [](const ClaimResult& c) { return !c.pass; }));
  std::printf("%zu claims, %d failed\n", rep.entries.size(), failures);

  if (!output_path.empty()) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& c : rep.entries) {
      doc.push_back({{"id", c.id},
                     {"description", c.description},
                     {"target", c.target},
                     {"measured", c.measured},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}});
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + output_path);
    f << doc.dump(2) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlations of two-qubit states under uniform acceleration"};
  app.set_version_flag("--version", std::string("rindler ") + kVersion);
  app.require_subcommand(1);

  // figure
  auto* fig_cmd = app.add_subcommand("figure", "Emit one figure dataset");
  fig_cmd->footer(kFigureHelp);
  int figure_id = 0;
  fig_cmd->add_option("id", figure_id, "Figure id (1-7)")->required()->check(CLI::Range(1, 7));
  OutputOptions fig_out;
  GridOptions fig_grid;
  add_output_options(fig_cmd, fig_out);
  add_grid_options(fig_cmd, fig_grid);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate measures over a parameter grid");
  std::string sweep_family = "AI";
  std::vector<std::string> sweep_measures;
  sweep_cmd->add_option("--family", sweep_family, "State family")
      ->check(CLI::IsMember({"AI", "AII", "III", "IB_pair"}))
      ->capture_default_str();
  sweep_cmd
      ->add_option("--measures", sweep_measures,
                   "Comma-separated: negativity,eof,discord,mutual_info,classical_corr")
      ->required()
      ->delimiter(',');
  OutputOptions sweep_out;
  GridOptions sweep_grid;
  add_output_options(sweep_cmd, sweep_out);
  add_grid_options(sweep_cmd, sweep_grid);

  // threshold
  auto* thr_cmd = app.add_subcommand("threshold", "Entanglement threshold finder");
  std::string thr_family = "AI";
  double thr_r = -1.0, thr_p = -1.0;
  thr_cmd->add_option("--family", thr_family, "Family (AI or AII)")
      ->check(CLI::IsMember({"AI", "AII"}))
      ->capture_default_str();
  auto* thr_r_opt = thr_cmd->add_option("--r", thr_r, "Fixed r: report critical p");
  auto* thr_p_opt =
      thr_cmd->add_option("--p", thr_p, "Fixed p: report critical r (AI family)");
  thr_r_opt->excludes(thr_p_opt);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the claim verification suite");
  std::string verify_output;
  verify_cmd->add_option("--output", verify_output, "Also write a JSON report here");

  // convert
  auto* conv_cmd = app.add_subcommand("convert", "Acceleration to Rindler angle r");
  double conv_a = 0.0, conv_omega = 0.0;
  conv_cmd->add_option("--a", conv_a, "Proper acceleration (natural units, c = 1)")->required();
  conv_cmd->add_option("--omega", conv_omega, "Mode frequency")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fig_cmd->parsed()) {
      write_table(figure_table(figure_id, fig_grid), fig_out);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      SweepSpec spec;
      spec.family = sweep_family == "AI"    ? Family::AI
                    : sweep_family == "AII" ? Family::AII
                    : sweep_family == "III" ? Family::III
                                            : Family::IBPair;
      for (const auto& name : sweep_measures) {
        if (name == "negativity")
          spec.measures.push_back(Measure::Negativity);
        else if (name == "eof")
          spec.measures.push_back(Measure::Eof);
        else if (name == "discord")
          spec.measures.push_back(Measure::Discord);
        else if (name == "mutual_info")
          spec.measures.push_back(Measure::MutualInfo);
        else if (name == "classical_corr")
          spec.measures.push_back(Measure::ClassicalCorr);
        else {
          std::cerr << "unknown measure: " << name << "\n";
          return 2;
        }
      }
      spec.r_grid = uniform_grid(0.0, kPiQuarter, sweep_grid.r_points);
      spec.p_grid = uniform_grid(0.0, 1.0, sweep_grid.p_points);
      spec.force_oracle = sweep_grid.force_oracle;
      spec.oracle_resolution = sweep_grid.oracle_resolution;
      write_table(run_sweep(spec), sweep_out);
      return 0;
    }
    if (thr_cmd->parsed()) {
      if (thr_r_opt->count() == 0 && thr_p_opt->count() == 0) {
        std::cerr << "threshold: exactly one of --r or --p is required\n";
        return 2;
      }
      if (thr_r_opt->count() > 0) {
        const auto pc = critical_p(RindlerR(thr_r),
                                   thr_family == "AI" ? Family::AI : Family::AII);
        if (pc)
          std::printf("family=%s r=%.12g p_c=%.12g\n", thr_family.c_str(), thr_r, *pc);
        else
          std::printf("family=%s r=%.12g p_c=none\n", thr_family.c_str(), thr_r);
      } else {
        if (thr_family != "AI") {
          std::cerr << "threshold --p supports only the AI family\n";
          return 2;
        }
        const CriticalR cr = critical_r(FractionP(thr_p));
        switch (cr.kind) {
          case CriticalR::Kind::AlreadySeparable:
            std::printf("family=AI p=%.12g r_c=0 (already separable)\n", thr_p);
            break;
          case CriticalR::Kind::Threshold:
            std::printf("family=AI p=%.12g r_c=%.12g\n", thr_p, cr.r);
            break;
          case CriticalR::Kind::EntangledAtAllR:
            std::printf("family=AI p=%.12g r_c=none (entangled at all r)\n", thr_p);
            break;
        }
      }
      return 0;
    }
    if (verify_cmd->parsed()) return run_verify(verify_output);
    if (conv_cmd->parsed()) {
      std::printf("r = %.12g\n", acceleration_to_r(conv_a, conv_omega).value());
      return 0;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
