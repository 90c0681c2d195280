#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rindler/measures.hpp"
#include "rindler/states.hpp"

namespace rindler {

enum class Family { AI, AII, III, IBPair };
enum class Measure { Negativity, Eof, Discord, MutualInfo, ClassicalCorr };

std::string family_name(Family f);
std::string measure_name(Measure m);

/// Grid sweep request. For IBPair the second grid holds beta values; for the
/// other families it holds the mixing fraction p.
struct SweepSpec {
  Family family = Family::AI;
  std::vector<double> r_grid;
  std::vector<double> p_grid;
  std::vector<Measure> measures;
  bool force_oracle = false;
  int oracle_resolution = 64;
};

/// Rectangular result table, one row per (r, p) grid point, serializable to
/// CSV and JSON. Rows are ordered r-major; values are finite by construction.
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string family;
  std::string param_name;  // "p" or "beta"
  int r_points = 0;
  int param_points = 0;
  std::string version;
  std::string generated;  // UTC timestamp, metadata only

  /// CSV, 12 significant digits; optional leading "# ..." metadata line
  /// (the only run-specific content).
  void write_csv(std::ostream& os, bool with_metadata) const;

  /// Array of row objects plus a metadata object.
  void write_json(std::ostream& os, bool with_metadata) const;
};

/// Evaluate the requested measures over the grid. Cells are independent and
/// evaluated in parallel; the row order is fixed by the grid.
SweepTable run_sweep(const SweepSpec& spec);

/// Discord of all three bipartitions of the Unruh-transformed pseudo-entangled
/// state at fixed p, both measurement directions, as a function of r.
/// Columns: r, D_A_I, D_I_A, D_A_II, D_II_A, D_I_II, D_II_I.
SweepTable discord_direction_table(const std::vector<double>& r_grid, FractionP p,
                                   bool force_oracle = false, int oracle_resolution = 64);

/// n uniformly spaced points on [lo, hi] inclusive.
std::vector<double> uniform_grid(double lo, double hi, int n);

/// Entanglement threshold in p at fixed r: bisection on the sign of the
/// closed-form lambda2 of the partial transpose, tolerance 1e-10. Returns
/// nullopt when the eigenvalue never turns negative (AII at r = 0).
std::optional<double> critical_p(RindlerR r, Family family);

/// Acceleration threshold in r at fixed p for the Alice-Rob state.
struct CriticalR {
  enum class Kind { AlreadySeparable, Threshold, EntangledAtAllR };
  Kind kind = Kind::Threshold;
  double r = 0.0;  // meaningful for AlreadySeparable (0) and Threshold
};
CriticalR critical_r(FractionP p);

/// Maximize N(rho_IB) - N(rho_tilde_IB) over beta in [0, 1] at fixed r:
/// 1001-point scan, then golden-section to 1e-8.
struct BetaExtremum {
  double beta = 0.0;
  double gap = 0.0;
};
BetaExtremum extremal_beta(RindlerR r);

/// One verified quantitative claim.
struct ClaimResult {
  std::string id;
  std::string description;
  double target = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ClaimReport {
  std::vector<ClaimResult> entries;
  bool all_pass() const;
};

struct VerifyOptions {
  int oracle_resolution = 64;
};

/// Run every acceptance criterion and report measured deviations.
ClaimReport verify_claims(const VerifyOptions& options = {});

/// Run one numbered criterion group (1..14) of the verification suite.
ClaimReport verify_claim_group(int group, const VerifyOptions& options = {});

}  // namespace rindler
