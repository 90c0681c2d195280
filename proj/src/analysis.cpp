#include "rindler/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "rindler/parallel.hpp"
#include "rindler/version.hpp"

namespace rindler {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPiQuarter = kPi / 4.0;

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double lambda2_pt(Family family, double p, double r) {
  const SpectrumFamily sf =
      (family == Family::AI) ? SpectrumFamily::AIpt : SpectrumFamily::AIIpt;
  return closed_form_spectra(sf, FractionP(p), RindlerR(r))[1];
}

void check_grid(const std::vector<double>& g, double lo, double hi, const char* what) {
  if (g.empty()) throw DomainError(std::string(what) + " grid is empty");
  double prev = -std::numeric_limits<double>::infinity();
  for (double v : g) {
    if (!(v >= lo && v <= hi))
      throw DomainError(std::string(what) + " grid value outside domain");
    if (!(v > prev)) throw DomainError(std::string(what) + " grid not sorted ascending");
    prev = v;
  }
}

double measure_value(Measure m, const ComplexMatrix& state, const DiscordResult* d,
                     const Bipartition& bp) {
  switch (m) {
    case Measure::Negativity:
      return log_negativity(state, bp);
    case Measure::Eof:
      return entanglement_of_formation(state);
    case Measure::Discord:
      return d->discord;
    case Measure::MutualInfo:
      return d->mutual_information;
    case Measure::ClassicalCorr:
      return d->classical_correlation;
  }
  throw DomainError("unknown measure");
}

bool needs_discord(Measure m) {
  return m == Measure::Discord || m == Measure::MutualInfo || m == Measure::ClassicalCorr;
}

// Golden-section maximization of f on [lo, hi].
template <typename F>
double golden_max(const F& f, double lo, double hi, double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::AI:
      return "AI";
    case Family::AII:
      return "AII";
    case Family::III:
      return "III";
    case Family::IBPair:
      return "IB_pair";
  }
  return "?";
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::Negativity:
      return "negativity";
    case Measure::Eof:
      return "eof";
    case Measure::Discord:
      return "discord";
    case Measure::MutualInfo:
      return "mutual_info";
    case Measure::ClassicalCorr:
      return "classical_corr";
  }
  return "?";
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2) throw DomainError("uniform_grid: need at least 2 points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

void SweepTable::write_csv(std::ostream& os, bool with_metadata) const {
  if (with_metadata) {
    os << "# rindler " << version << " family=" << family << " r_points=" << r_points
       << " " << param_name << "_points=" << param_points << " generated=" << generated
       << "\n";
  }
  for (size_t c = 0; c < columns.size(); ++c) {
    if (c) os << ",";
    os << columns[c];
  }
  os << "\n";
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      os << fmt_real(row[c]);
    }
    os << "\n";
  }
}

void SweepTable::write_json(std::ostream& os, bool with_metadata) const {
  nlohmann::json meta;
  meta["tool"] = "rindler";
  meta["version"] = version;
  meta["family"] = family;
  meta["param"] = param_name;
  meta["r_points"] = r_points;
  meta["param_points"] = param_points;
  meta["columns"] = columns;
  if (with_metadata) meta["generated"] = generated;

  nlohmann::json jrows = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj;
    for (size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
    jrows.push_back(std::move(obj));
  }
  nlohmann::json doc;
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(jrows);
  os << doc.dump(2) << "\n";
}

SweepTable run_sweep(const SweepSpec& spec) {
  check_grid(spec.r_grid, 0.0, kPiQuarter, "r");
  check_grid(spec.p_grid, 0.0, 1.0, spec.family == Family::IBPair ? "beta" : "p");
  if (spec.measures.empty()) throw DomainError("run_sweep: no measures requested");

  SweepTable table;
  table.family = family_name(spec.family);
  table.param_name = spec.family == Family::IBPair ? "beta" : "p";
  table.r_points = static_cast<int>(spec.r_grid.size());
  table.param_points = static_cast<int>(spec.p_grid.size());
  table.version = kVersion;
  table.generated = utc_now();

  table.columns = {"r", table.param_name};
  for (Measure m : spec.measures) {
    if (spec.family == Family::IBPair) {
      table.columns.push_back(measure_name(m) + "_ib");
      table.columns.push_back(measure_name(m) + "_ib_tilde");
      if (m == Measure::Negativity) table.columns.push_back("negativity_gap");
    } else {
      table.columns.push_back(measure_name(m));
    }
  }

  const int nr = static_cast<int>(spec.r_grid.size());
  const int np = static_cast<int>(spec.p_grid.size());
  table.rows.assign(static_cast<size_t>(nr) * np, {});

  const bool want_discord =
      std::any_of(spec.measures.begin(), spec.measures.end(), needs_discord);
  const Bipartition bp = Bipartition::measuring(Side::Second);

  parallel_for(nr * np, [&](int cell) {
    const int ri = cell / np, pi = cell % np;
    const double r = spec.r_grid[ri], param = spec.p_grid[pi];
    std::vector<double> row = {r, param};

    if (spec.family == Family::IBPair) {
      const AlphaBeta ab = AlphaBeta::from_beta(param);
      const ComplexMatrix s1 = rho_IB(ab, RindlerR(r));
      const ComplexMatrix s2 = rho_tilde_IB(ab, RindlerR(r));
      DiscordResult d1, d2;
      if (want_discord) {
        d1 = discord(s1, bp, spec.force_oracle, spec.oracle_resolution);
        d2 = discord(s2, bp, spec.force_oracle, spec.oracle_resolution);
      }
      for (Measure m : spec.measures) {
        const double v1 = measure_value(m, s1, &d1, bp);
        const double v2 = measure_value(m, s2, &d2, bp);
        row.push_back(v1);
        row.push_back(v2);
        if (m == Measure::Negativity) row.push_back(v1 - v2);
      }
    } else {
      ComplexMatrix state = (spec.family == Family::AI)    ? rho_AI(FractionP(param), RindlerR(r))
                            : (spec.family == Family::AII) ? rho_AII(FractionP(param), RindlerR(r))
                                                           : rho_III(RindlerR(r));
      DiscordResult d;
      if (want_discord) d = discord(state, bp, spec.force_oracle, spec.oracle_resolution);
      for (Measure m : spec.measures) row.push_back(measure_value(m, state, &d, bp));
    }

    for (double v : row)
      if (!std::isfinite(v)) throw Error("run_sweep: non-finite cell value");
    table.rows[cell] = std::move(row);
  });

  return table;
}

SweepTable discord_direction_table(const std::vector<double>& r_grid, FractionP p,
                                   bool force_oracle, int oracle_resolution) {
  check_grid(r_grid, 0.0, kPiQuarter, "r");

  SweepTable table;
  table.family = "directions";
  table.param_name = "p";
  table.r_points = static_cast<int>(r_grid.size());
  table.param_points = 1;
  table.version = kVersion;
  table.generated = utc_now();
  table.columns = {"r", "D_A_I", "D_I_A", "D_A_II", "D_II_A", "D_I_II", "D_II_I"};
  table.rows.assign(r_grid.size(), {});

  const Bipartition second = Bipartition::measuring(Side::Second);
  const Bipartition first = Bipartition::measuring(Side::First);

  parallel_for(static_cast<int>(r_grid.size()), [&](int i) {
    const RindlerR r(r_grid[i]);
    const ComplexMatrix ai = rho_AI(p, r), aii = rho_AII(p, r), iii = rho_III(r);
    table.rows[i] = {
        r_grid[i],
        discord(ai, second, force_oracle, oracle_resolution).discord,
        discord(ai, first, force_oracle, oracle_resolution).discord,
        discord(aii, second, force_oracle, oracle_resolution).discord,
        discord(aii, first, force_oracle, oracle_resolution).discord,
        discord(iii, second, force_oracle, oracle_resolution).discord,
        discord(iii, first, force_oracle, oracle_resolution).discord,
    };
  });
  return table;
}

std::optional<double> critical_p(RindlerR r, Family family) {
  if (family != Family::AI && family != Family::AII)
    throw DomainError("critical_p: family must be AI or AII");
  const double rv = r.value();
  auto f = [&](double p) { return lambda2_pt(family, p, rv); };
  if (!(f(1.0) < -1e-13)) return std::nullopt;  // never negative on [0, 1]
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

CriticalR critical_r(FractionP p) {
  const double pv = p.value();
  auto f = [&](double r) { return lambda2_pt(Family::AI, pv, r); };
  if (f(0.0) >= -1e-15) return {CriticalR::Kind::AlreadySeparable, 0.0};
  if (f(kPiQuarter) < -1e-12) return {CriticalR::Kind::EntangledAtAllR, 0.0};
  double lo = 0.0, hi = kPiQuarter;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return {CriticalR::Kind::Threshold, 0.5 * (lo + hi)};
}

BetaExtremum extremal_beta(RindlerR r) {
  const Bipartition bp = Bipartition::measuring(Side::Second);
  auto gap_fn = [&](double beta) {
    const AlphaBeta ab = AlphaBeta::from_beta(beta);
    return log_negativity(rho_IB(ab, r), bp) - log_negativity(rho_tilde_IB(ab, r), bp);
  };

  constexpr int kScan = 1001;
  std::vector<double> gaps(kScan);
  parallel_for(kScan, [&](int i) { gaps[i] = gap_fn(i / 1000.0); });
  int best = 0;
  for (int i = 1; i < kScan; ++i)
    if (gaps[i] > gaps[best]) best = i;

  const double lo = std::max(0.0, (best - 1) / 1000.0);
  const double hi = std::min(1.0, (best + 1) / 1000.0);
  const double beta = golden_max(gap_fn, lo, hi, 1e-8);
  return {beta, gap_fn(beta)};
}

bool ClaimReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ClaimResult& c) { return c.pass; });
}

namespace {

void add_claim(ClaimReport& rep, std::string id, std::string description, double target,
               double measured, double tolerance, bool pass) {
  rep.entries.push_back(
      {std::move(id), std::move(description), target, measured, tolerance, pass});
}

void add_abs_claim(ClaimReport& rep, std::string id, std::string description, double target,
                   double measured, double tolerance) {
  const bool pass = std::abs(measured - target) <= tolerance;
  add_claim(rep, std::move(id), std::move(description), target, measured, tolerance, pass);
}

// Claim 1: inertial entanglement threshold.
void claim_1(ClaimReport& rep, const VerifyOptions&) {
  const auto pc0 = critical_p(RindlerR(0.0), Family::AI);
  add_abs_claim(rep, "1_inertial_threshold", "critical_p(r=0, AI) = 1/3", 1.0 / 3.0,
                pc0.value_or(-1.0), 1e-9);
}

// Claim 2: thresholds in the infinite-acceleration limit.
void claim_2(ClaimReport& rep, const VerifyOptions&) {
  const double three7 = 3.0 / 7.0;
  const auto pcq_ai = critical_p(RindlerR(kPiQuarter), Family::AI);
  add_abs_claim(rep, "2a_threshold_pi4_AI", "critical_p(r=pi/4, AI) = 3/7", three7,
                pcq_ai.value_or(-1.0), 1e-9);
  const auto pcq_aii = critical_p(RindlerR(kPiQuarter), Family::AII);
  add_abs_claim(rep, "2b_threshold_pi4_AII", "critical_p(r=pi/4, AII) = 3/7", three7,
                pcq_aii.value_or(-1.0), 1e-9);
}

// Claim 3: the critical region where acceleration kills the entanglement.
void claim_3(ClaimReport& rep, const VerifyOptions&) {
  for (double pv : {0.35, 0.40}) {
    const CriticalR cr = critical_r(FractionP(pv));
    double deviation = 1.0;
    if (cr.kind == CriticalR::Kind::Threshold && cr.r > 0.0 && cr.r < kPiQuarter) {
      const double below = lambda2_pt(Family::AI, pv, cr.r - 1e-3);
      const double above = lambda2_pt(Family::AI, pv, cr.r + 1e-3);
      deviation = std::max(0.0, below) + std::max(0.0, -above);
    }
    std::ostringstream id, desc;
    id << "3" << (pv == 0.35 ? "a" : "b") << "_critical_region_p0" << (pv == 0.35 ? "35" : "40");
    desc << "critical_r(" << pv << ") interior with pt eigenvalue sign change";
    add_claim(rep, id.str(), desc.str(), 0.0, deviation, 0.0, deviation <= 0.0);
  }
}

// Claims 4-5: measure coincidence of the two accessible bipartitions at r=pi/4.
double coincidence_deviation(bool use_discord) {
  const auto ps = uniform_grid(0.0, 1.0, 65);
  const Bipartition bp = Bipartition::measuring(Side::Second);
  std::vector<double> dev(ps.size());
  parallel_for(static_cast<int>(ps.size()), [&](int i) {
    const FractionP p(ps[i]);
    const RindlerR r(kPiQuarter);
    const ComplexMatrix ai = rho_AI(p, r), aii = rho_AII(p, r);
    dev[i] = use_discord
                 ? std::abs(discord(ai, bp).discord - discord(aii, bp).discord)
                 : std::abs(log_negativity(ai, bp) - log_negativity(aii, bp));
  });
  return *std::max_element(dev.begin(), dev.end());
}

void claim_4(ClaimReport& rep, const VerifyOptions&) {
  add_abs_claim(rep, "4_negativity_coincidence", "max_p |N(AI) - N(AII)| at r=pi/4", 0.0,
                coincidence_deviation(false), 1e-9);
}

void claim_5(ClaimReport& rep, const VerifyOptions&) {
  add_abs_claim(rep, "5_discord_coincidence", "max_p |D(A:I) - D(A:II)| at r=pi/4", 0.0,
                coincidence_deviation(true), 1e-6);
}

// Claim 6: inertial limits of the discords.
void claim_6(ClaimReport& rep, const VerifyOptions& options) {
  const int resolution = options.oracle_resolution;
  const auto ps = uniform_grid(0.0, 1.0, 65);
  const Bipartition bp = Bipartition::measuring(Side::Second);
  std::vector<double> daII(ps.size()), dev_oracle(ps.size());
  parallel_for(static_cast<int>(ps.size()), [&](int i) {
    const FractionP p(ps[i]);
    daII[i] = discord(rho_AII(p, RindlerR(0.0)), bp).discord;
    const ComplexMatrix werner = rho_AI(p, RindlerR(0.0));
    dev_oracle[i] = std::abs(discord(werner, bp).discord -
                             oracle_discord(werner, bp, resolution).discord);
  });
  add_abs_claim(rep, "6a_discord_AII_zero_inertial", "max_p D(A:II) at r=0", 0.0,
                *std::max_element(daII.begin(), daII.end()), 1e-9);
  add_abs_claim(rep, "6b_discord_AI_inertial_oracle",
                "max_p |D(A:I) fast - oracle| at r=0", 0.0,
                *std::max_element(dev_oracle.begin(), dev_oracle.end()), 1e-4);
}

// Claim 7: directional monotonicity of the three discords along r. The
// D(I:II) leg is genuinely violated by ~1.1e-3 just below r = pi/4 (the
// second-side curve peaks near r = 0.736 and descends to the symmetric
// endpoint value); the check stays strict and reports the deviation.
void claim_7(ClaimReport& rep, const VerifyOptions&) {
  const auto rs = uniform_grid(0.0, kPiQuarter, 65);
  const auto ps = uniform_grid(0.0, 1.0, 65);
  const Bipartition bp = Bipartition::measuring(Side::Second);
  const int np = static_cast<int>(ps.size());
  std::vector<double> viol_ai(np, 0.0), viol_aii(np, 0.0);
  parallel_for(np, [&](int pi) {
    const FractionP p(ps[pi]);
    double prev_ai = 0.0, prev_aii = 0.0;
    for (size_t ri = 0; ri < rs.size(); ++ri) {
      const RindlerR r(rs[ri]);
      const double dai = discord(rho_AI(p, r), bp).discord;
      const double daii = discord(rho_AII(p, r), bp).discord;
      if (ri > 0) {
        viol_ai[pi] = std::max(viol_ai[pi], dai - prev_ai);      // nonincreasing
        viol_aii[pi] = std::max(viol_aii[pi], prev_aii - daii);  // nondecreasing
      }
      prev_ai = dai;
      prev_aii = daii;
    }
  });
  double viol_iii = 0.0;
  double prev_iii = 0.0;
  for (size_t ri = 0; ri < rs.size(); ++ri) {
    const double diii = discord(rho_III(RindlerR(rs[ri])), bp).discord;
    if (ri > 0) viol_iii = std::max(viol_iii, prev_iii - diii);  // nondecreasing
    prev_iii = diii;
  }
  add_abs_claim(rep, "7a_discord_AI_nonincreasing",
                "max increase of D(A:I) along r over the default grid", 0.0,
                *std::max_element(viol_ai.begin(), viol_ai.end()), 1e-9);
  add_abs_claim(rep, "7b_discord_AII_nondecreasing",
                "max decrease of D(A:II) along r over the default grid", 0.0,
                *std::max_element(viol_aii.begin(), viol_aii.end()), 1e-9);
  add_abs_claim(rep, "7c_discord_III_nondecreasing",
                "max decrease of D(I:II) along r over the default grid", 0.0, viol_iii,
                1e-9);
}

// Claim 8: X-state candidate set against the brute-force oracle.
void claim_8(ClaimReport& rep, const VerifyOptions& options) {
  const int resolution = options.oracle_resolution;
  const auto rs = uniform_grid(0.0, kPiQuarter, 21);
  const auto ps = uniform_grid(0.0, 1.0, 21);
  const Bipartition bp = Bipartition::measuring(Side::Second);

  std::vector<ComplexMatrix> states;
  for (double r : rs)
    for (double p : ps) states.push_back(rho_AI(FractionP(p), RindlerR(r)));
  for (double r : rs)
    for (double p : ps) states.push_back(rho_AII(FractionP(p), RindlerR(r)));
  for (double r : rs) states.push_back(rho_III(RindlerR(r)));  // p-independent

  std::vector<double> diff(states.size());
  parallel_for(static_cast<int>(states.size()), [&](int i) {
    const double fast = xstate_discord(states[i], bp).discord;
    const double orac = oracle_discord(states[i], bp, resolution).discord;
    diff[i] = fast - orac;
  });
  const auto [mn, mx] = std::minmax_element(diff.begin(), diff.end());
  add_abs_claim(rep, "8a_fastpath_oracle_upper",
                "max (xstate_discord - oracle_discord) over AI/AII/III grid", 0.0,
                std::max(0.0, *mx), 1e-4);
  add_abs_claim(rep, "8b_fastpath_oracle_lower",
                "max (oracle_discord - xstate_discord) over AI/AII/III grid", 0.0,
                std::max(0.0, -*mn), 1e-9);
}

// Claim 9: channel pipeline against every closed form.
void claim_9(ClaimReport& rep, const VerifyOptions&) {
  const auto rs = uniform_grid(0.0, kPiQuarter, 21);
  const auto ps = uniform_grid(0.0, 1.0, 21);
  const SubsystemDims q3 = SubsystemDims::qubits(3);
  std::vector<double> entry_dev(rs.size() * ps.size()), spec_dev(rs.size() * ps.size());
  parallel_for(static_cast<int>(rs.size() * ps.size()), [&](int cell) {
    const RindlerR r(rs[cell / ps.size()]);
    const FractionP p(ps[cell % ps.size()]);
    const ComplexMatrix pipe = unruh_channel(pseudo_entangled(p), r, Slot::Second);

    const int keep_ai[] = {0, 1}, keep_aii[] = {0, 2}, keep_iii[] = {1, 2};
    double dev = 0.0;
    dev = std::max(dev, partial_trace(pipe, q3, keep_ai).max_abs_diff(rho_AI(p, r)));
    dev = std::max(dev, partial_trace(pipe, q3, keep_aii).max_abs_diff(rho_AII(p, r)));
    dev = std::max(dev, partial_trace(pipe, q3, keep_iii).max_abs_diff(rho_III(r)));
    entry_dev[cell] = dev;

    const SubsystemDims q2 = SubsystemDims::qubits(2);
    double sdev = 0.0;
    for (SpectrumFamily fam :
         {SpectrumFamily::AI, SpectrumFamily::AIpt, SpectrumFamily::AII, SpectrumFamily::AIIpt}) {
      ComplexMatrix m = (fam == SpectrumFamily::AI || fam == SpectrumFamily::AIpt)
                            ? rho_AI(p, r)
                            : rho_AII(p, r);
      if (fam == SpectrumFamily::AIpt || fam == SpectrumFamily::AIIpt)
        m = partial_transpose(m, q2, 1);
      auto closed = closed_form_spectra(fam, p, r);
      std::sort(closed.begin(), closed.end(), std::greater<>());
      const EigenResult e = hermitian_eigen(m);
      for (int k = 0; k < 4; ++k) sdev = std::max(sdev, std::abs(closed[k] - e.values[k]));
    }
    spec_dev[cell] = sdev;
  });
  add_abs_claim(rep, "9a_pipeline_closed_form",
                "max entrywise |channel reduction - closed form| over grid", 0.0,
                *std::max_element(entry_dev.begin(), entry_dev.end()), 1e-12);
  add_abs_claim(rep, "9b_spectra_closed_form",
                "max |closed-form spectrum - eigensolver| over grid", 0.0,
                *std::max_element(spec_dev.begin(), spec_dev.end()), 1e-10);
}

// Claim 10: sigma_x-equivalent input keeps equivalent pt spectra through the channel.
void claim_10(ClaimReport& rep, const VerifyOptions&) {
  const auto rs = uniform_grid(0.0, kPiQuarter, 21);
  const auto ps = uniform_grid(0.0, 1.0, 21);
  const SubsystemDims q3 = SubsystemDims::qubits(3);
  const SubsystemDims q2 = SubsystemDims::qubits(2);
  std::vector<double> dev(rs.size() * ps.size());
  parallel_for(static_cast<int>(rs.size() * ps.size()), [&](int cell) {
    const RindlerR r(rs[cell / ps.size()]);
    const FractionP p(ps[cell % ps.size()]);
    const ComplexMatrix a = unruh_channel(pseudo_entangled(p), r, Slot::Second);
    const ComplexMatrix b = unruh_channel(sigma_x_equivalent(p), r, Slot::Second);

    double worst = 0.0;
    auto spectra_gap = [&](const ComplexMatrix& x, const ComplexMatrix& y) {
      const EigenResult ex = hermitian_eigen(x), ey = hermitian_eigen(y);
      for (size_t k = 0; k < ex.values.size(); ++k)
        worst = std::max(worst, std::abs(ex.values[k] - ey.values[k]));
    };
    spectra_gap(partial_transpose(a, q3, 0), partial_transpose(b, q3, 0));
    const int keep_ai[] = {0, 1}, keep_aii[] = {0, 2};
    spectra_gap(partial_transpose(partial_trace(a, q3, keep_ai), q2, 1),
                partial_transpose(partial_trace(b, q3, keep_ai), q2, 1));
    spectra_gap(partial_transpose(partial_trace(a, q3, keep_aii), q2, 1),
                partial_transpose(partial_trace(b, q3, keep_aii), q2, 1));
    dev[cell] = worst;
  });
  add_abs_claim(rep, "10_equivalence_pt_spectra",
                "max pt-spectra gap between the rho and rho-tilde pipelines", 0.0,
                *std::max_element(dev.begin(), dev.end()), 1e-10);
}

// Claim 11: the equivalence-breaking extremum of the alpha/beta family.
void claim_11(ClaimReport& rep, const VerifyOptions&) {
  const RindlerR r(kPiQuarter);
  const BetaExtremum ext = extremal_beta(r);
  add_abs_claim(rep, "11a_extremal_beta_location", "argmax_beta negativity gap at r=pi/4",
                0.80, ext.beta, 0.01);

  const Bipartition bp = Bipartition::measuring(Side::Second);
  auto gap_at = [&](double beta) {
    const AlphaBeta ab = AlphaBeta::from_beta(beta);
    return log_negativity(rho_IB(ab, r), bp) - log_negativity(rho_tilde_IB(ab, r), bp);
  };
  const double endpoints = std::max(std::abs(gap_at(0.0)), std::abs(gap_at(1.0)));
  add_abs_claim(rep, "11b_equivalence_endpoints",
                "negativity gap at beta = 0 and beta = 1", 0.0, endpoints, 1e-10);
  add_claim(rep, "11c_extremal_gap_positive", "negativity gap at beta* strictly positive",
            0.0, ext.gap, 0.0, ext.gap > 0.0);
}

// Claim 12: entanglement of formation against negativity and the Werner
// concurrence profile.
void claim_12(ClaimReport& rep, const VerifyOptions&) {
  const auto ps = uniform_grid(0.0, 1.0, 65);
  const Bipartition bp = Bipartition::measuring(Side::Second);
  const int np = static_cast<int>(ps.size());
  std::vector<int> n_pos(np), e_pos(np);
  std::vector<double> werner_dev(np);
  parallel_for(np, [&](int i) {
    const FractionP p(ps[i]);
    const ComplexMatrix ai = rho_AI(p, RindlerR(kPiQuarter));
    n_pos[i] = log_negativity(ai, bp) > 1e-12 ? 1 : 0;
    e_pos[i] = entanglement_of_formation(ai) > 1e-12 ? 1 : 0;
    const double expected = std::max(0.0, (3.0 * ps[i] - 1.0) / 2.0);
    werner_dev[i] = std::abs(concurrence(pseudo_entangled(p)) - expected);
  });
  int mismatches = 0;
  for (int i = 0; i < np; ++i) mismatches += (n_pos[i] != e_pos[i]) ? 1 : 0;
  add_claim(rep, "12a_eof_negativity_threshold",
            "E_f and N turn positive in the same grid cell on AI at r=pi/4", 0.0,
            mismatches, 1.0, mismatches <= 1);
  add_abs_claim(rep, "12b_werner_concurrence",
                "max_p |C(pseudo_entangled(p)) - max(0, (3p-1)/2)| at r=0", 0.0,
                *std::max_element(werner_dev.begin(), werner_dev.end()), 1e-10);
}

// Claim 13: a point where Alice-Rob entanglement died and Alice-antiRob never rose.
void claim_13(ClaimReport& rep, const VerifyOptions&) {
  const Bipartition bp = Bipartition::measuring(Side::Second);
  bool found = false;
  double witness_n = 1.0;
  for (double pv : {0.35, 0.37, 0.40}) {
    const FractionP p(pv);
    const CriticalR cr = critical_r(p);
    if (cr.kind != CriticalR::Kind::Threshold) continue;
    const double rt = 0.5 * (cr.r + kPiQuarter);
    const double n_ai = log_negativity(rho_AI(p, RindlerR(rt)), bp);
    const double n_aii = log_negativity(rho_AII(p, RindlerR(rt)), bp);
    const double n_inertial = log_negativity(rho_AI(p, RindlerR(0.0)), bp);
    if (n_ai <= 1e-12 && n_aii <= 1e-12 && n_inertial > 1e-6) {
      found = true;
      witness_n = std::max(n_ai, n_aii);
      break;
    }
  }
  add_claim(rep, "13_nonconservation_witness",
            "exists p in (1/3, 3/7), r with N(AI) = N(AII) = 0 and inertial N > 0", 0.0,
            witness_n, 1e-12, found);
}

// Claim 14: directional asymmetry of the oracle discord.
void claim_14(ClaimReport& rep, const VerifyOptions& options) {
  const int resolution = options.oracle_resolution;
  const ComplexMatrix state = rho_AI(FractionP(0.7), RindlerR(0.5));
  const double d_second =
      oracle_discord(state, Bipartition::measuring(Side::Second), resolution).discord;
  const double d_first =
      oracle_discord(state, Bipartition::measuring(Side::First), resolution).discord;
  double gap = std::abs(d_second - d_first);
  bool pass = gap > 1e-4;

  if (!pass) {
    // Scan the grid for any asymmetry witness before failing.
    const auto rs = uniform_grid(0.0, kPiQuarter, 21);
    const auto ps = uniform_grid(0.0, 1.0, 21);
    std::vector<double> gaps(rs.size() * ps.size());
    parallel_for(static_cast<int>(gaps.size()), [&](int cell) {
      const RindlerR r(rs[cell / ps.size()]);
      const FractionP p(ps[cell % ps.size()]);
      const ComplexMatrix s = rho_AI(p, r);
      gaps[cell] = std::abs(
          oracle_discord(s, Bipartition::measuring(Side::Second), resolution).discord -
          oracle_discord(s, Bipartition::measuring(Side::First), resolution).discord);
    });
    gap = *std::max_element(gaps.begin(), gaps.end());
    pass = gap > 1e-4;
  }
  add_claim(rep, "14_discord_asymmetry",
            "oracle discord differs between measurement sides by more than 1e-4", 1e-4, gap,
            0.0, pass);
}

using ClaimFn = void (*)(ClaimReport&, const VerifyOptions&);
constexpr ClaimFn kClaimGroups[] = {claim_1, claim_2,  claim_3,  claim_4,  claim_5,
                                    claim_6, claim_7,  claim_8,  claim_9,  claim_10,
                                    claim_11, claim_12, claim_13, claim_14};

}  // namespace

ClaimReport verify_claim_group(int group, const VerifyOptions& options) {
  if (group < 1 || group > 14) throw DomainError("verify_claim_group: group must be 1..14");
  ClaimReport rep;
  kClaimGroups[group - 1](rep, options);
  return rep;
}

ClaimReport verify_claims(const VerifyOptions& options) {
  ClaimReport rep;
  for (const ClaimFn fn : kClaimGroups) fn(rep, options);
  return rep;
}

}  // namespace rindler
