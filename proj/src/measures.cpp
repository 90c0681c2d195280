#include "rindler/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace rindler {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kXShapeTol = 1e-12;
constexpr double kDiscordClamp = 1e-9;
constexpr double kBranchCutoff = 1e-14;  // outcomes below this weight contribute 0

double binary_entropy(double x) {
  x = std::clamp(x, 0.0, 1.0);
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

// Two-outcome measurement basis on one qubit.
struct MeasBasis {
  std::array<Complex, 2> w0, w1;
};

MeasBasis bloch_basis(double theta, double phi) {
  const double ct = std::cos(theta / 2.0), st = std::sin(theta / 2.0);
  const Complex ph{std::cos(phi), std::sin(phi)};
  return {{Complex{ct, 0.0}, ph * st}, {Complex{st, 0.0}, -ph * ct}};
}

// S_Pi for a 4x4 state held in a flat row-major array; measurement projects
// onto w0/w1 on the given side. Hot path of the oracle: no allocation.
double cond_entropy_raw(const Complex* rho, Side side, const MeasBasis& basis) {
  double total = 0.0;
  for (const auto& w : {basis.w0, basis.w1}) {
    // Conditional (unnormalized) state of the unmeasured qubit:
    //   side Second: M[a,a'] = sum_{i,i'} rho[(a,i),(a',i')] w[i'] conj(w[i])
    //   side First:  M[b,b'] = sum_{a,a'} rho[(a,b),(a',b')] w[a'] conj(w[a])
    Complex m00{0, 0}, m01{0, 0}, m11{0, 0};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Complex wij = std::conj(w[i]) * w[j];
        if (side == Side::Second) {
          m00 += wij * rho[(0 * 2 + i) * 4 + (0 * 2 + j)];
          m01 += wij * rho[(0 * 2 + i) * 4 + (1 * 2 + j)];
          m11 += wij * rho[(1 * 2 + i) * 4 + (1 * 2 + j)];
        } else {
          m00 += wij * rho[(i * 2 + 0) * 4 + (j * 2 + 0)];
          m01 += wij * rho[(i * 2 + 0) * 4 + (j * 2 + 1)];
          m11 += wij * rho[(i * 2 + 1) * 4 + (j * 2 + 1)];
        }
      }
    const double pk = m00.real() + m11.real();
    if (pk < kBranchCutoff) continue;
    const double diff = m00.real() - m11.real();
    const double disc = std::sqrt(diff * diff + 4.0 * std::norm(m01));
    const double lam = std::clamp((1.0 + disc / pk) / 2.0, 0.0, 1.0);
    total += pk * binary_entropy(lam);
  }
  return total;
}

void copy_raw(const ComplexMatrix& rho, Complex* out) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i * 4 + j] = rho(i, j);
}

double reduced_entropy(const ComplexMatrix& rho, int keep_index) {
  const int keep[1] = {keep_index};
  return von_neumann_entropy(partial_trace(rho, SubsystemDims::qubits(2), keep));
}

struct GoldenResult {
  double x, value;
};

// Golden-section minimization of a unimodal section; iters counts function
// evaluations against the shared refinement budget.
template <typename F>
GoldenResult golden_min(const F& f, double lo, double hi, double tol, int& budget) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  budget -= 2;
  while (b - a > tol && budget > 0) {
    if (f1 <= f2) {
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
    --budget;
  }
  return f1 <= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

// Appendix closed form on raw X-state entries.
struct XEntries {
  double r11, r22, r33, r44, r14, r23;
};

XEntries xentries(const ComplexMatrix& rho) {
  return {rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
          rho(3, 3).real(), rho(0, 3).real(), rho(1, 2).real()};
}

double xstate_cond_entropy_entries(const XEntries& x, double kappa, double mu) {
  const double ell = 1.0 - kappa;
  const double p0 = (x.r22 + x.r44) * ell + (x.r11 + x.r33) * kappa;
  const double p1 = 1.0 - p0;
  const double beta =
      4.0 * kappa * ell * (x.r14 + x.r23) * (x.r14 + x.r23) - 16.0 * mu * x.r14 * x.r23;

  double total = 0.0;
  const double d13 = x.r11 - x.r33, d24 = x.r22 - x.r44;
  const std::array<std::array<double, 3>, 2> branches = {{{p0, kappa, ell}, {p1, ell, kappa}}};
  for (const auto& br : branches) {
    const double pk = br[0];
    if (pk < kBranchCutoff) continue;
    const double axis = d13 * br[1] + d24 * br[2];
    const double theta = std::min(std::sqrt(std::max(axis * axis + beta, 0.0)) / pk, 1.0);
    total += pk * binary_entropy((1.0 + theta) / 2.0);
  }
  return total;
}

void require_xstate(const ComplexMatrix& rho, const char* context) {
  if (rho.dim() != 4) throw ShapeError(std::string(context) + ": expected a 4x4 matrix");
  if (!is_real_symmetric_xstate(rho))
    throw ShapeError(std::string(context) + ": matrix is not real symmetric X-shaped");
}

// Assemble the result from the minimized conditional entropy. rho is arranged
// measured-side-last; S_unmeasured/S_measured are the marginal entropies.
// Roundoff negatives inside the clamping window are zeroed in an order that
// keeps I = C + D exact with C >= 0 and D >= 0.
DiscordResult finish_discord(double s_unmeasured, double s_measured, double s_total,
                             double min_cond, const MeasurementPoint& argmin,
                             DiscordResult::Method method) {
  double mi = s_unmeasured + s_measured - s_total;
  if (mi < 0.0) {
    if (mi < -kDiscordClamp) throw Error("discord: negative mutual information");
    mi = 0.0;
  }
  double cc = s_unmeasured - min_cond;
  if (cc < 0.0) {
    if (cc < -kDiscordClamp)
      throw Error("discord: conditional entropy above the unmeasured marginal");
    cc = 0.0;
  }
  if (cc > mi) {
    if (cc - mi > kDiscordClamp)
      throw Error("discord: negative beyond clamping window, minimization inconsistent");
    cc = mi;
  }
  DiscordResult res;
  res.mutual_information = mi;
  res.classical_correlation = cc;
  res.discord = mi - cc;
  res.argmin = argmin;
  res.method = method;
  return res;
}

}  // namespace

bool is_real_symmetric_xstate(const ComplexMatrix& rho) {
  if (rho.dim() != 4) return false;
  static constexpr bool on_x[4][4] = {{true, false, false, true},
                                      {false, true, true, false},
                                      {false, true, true, false},
                                      {true, false, false, true}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Complex e = rho(i, j);
      if (!on_x[i][j] && std::abs(e) > kXShapeTol) return false;
      if (std::abs(e.imag()) > kXShapeTol) return false;
      if (std::abs(e.real() - rho(j, i).real()) > kXShapeTol) return false;
    }
  return true;
}

ComplexMatrix swap_qubits(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("swap_qubits: expected 4x4");
  ComplexMatrix out(4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(2 * b + a, 2 * d + c) = rho(2 * a + b, 2 * c + d);
  return out;
}

MeasurementPoint appendix_to_bloch(double kappa, double mu) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw DomainError("appendix point: kappa outside [0, 1]");
  const double ell = 1.0 - kappa;
  if (!(mu >= 0.0 && mu <= kappa * ell + 1e-12))
    throw DomainError("appendix point: mu outside [0, kappa(1-kappa)]");
  double y1, y2;
  if (kappa < 1e-30) {
    y1 = 0.0;
    y2 = 1.0;
  } else {
    y1 = std::sqrt(std::min(mu / kappa, ell));
    y2 = std::sqrt(std::max(ell - y1 * y1, 0.0));
  }
  const double t = std::sqrt(kappa);
  const double theta = 2.0 * std::acos(std::clamp(t, 0.0, 1.0));
  double phi = std::atan2(y1, -y2);
  if (phi < 0.0) phi += 2.0 * kPi;
  return MeasurementPoint::bloch(theta, phi);
}

double log_negativity(const ComplexMatrix& rho, const Bipartition& bp) {
  bp.dims.check_against(rho);
  validate_density_matrix(rho, "log_negativity");
  const ComplexMatrix pt = partial_transpose(rho, bp.dims, 1);
  const EigenResult e = hermitian_eigen(pt);
  double sum = 0.0;
  for (double lam : e.values) sum += std::abs(lam);
  return std::log2(std::max(sum, 1.0));
}

double concurrence(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("concurrence: expected 4x4");
  validate_density_matrix(rho, "concurrence");

  ComplexMatrix flip(4);  // sigma_y (x) sigma_y
  flip(0, 3) = flip(3, 0) = -1.0;
  flip(1, 2) = flip(2, 1) = 1.0;

  const ComplexMatrix root = sqrt_psd(rho);
  const ComplexMatrix r_mat = flip * rho.conjugate() * flip;
  ComplexMatrix h = root * r_mat * root;
  // Symmetrize away roundoff before the eigensolver's Hermiticity gate.
  h = 0.5 * (h + h.adjoint());

  const EigenResult e = hermitian_eigen(h);
  std::array<double, 4> lt{};
  for (int i = 0; i < 4; ++i) lt[i] = std::sqrt(std::max(e.values[i], 0.0));
  const double c = lt[0] - lt[1] - lt[2] - lt[3];
  return std::clamp(c, 0.0, 1.0);
}

double entanglement_of_formation(const ComplexMatrix& rho) {
  const double c = concurrence(rho);
  return binary_entropy((1.0 + std::sqrt(std::max(1.0 - c * c, 0.0))) / 2.0);
}

double mutual_information(const ComplexMatrix& rho, const Bipartition& bp) {
  bp.dims.check_against(rho);
  return reduced_entropy(rho, 0) + reduced_entropy(rho, 1) - von_neumann_entropy(rho);
}

double measured_conditional_entropy(const ComplexMatrix& rho, const Bipartition& bp,
                                    const MeasurementPoint& m) {
  bp.dims.check_against(rho);
  validate_density_matrix(rho, "measured_conditional_entropy");
  const MeasurementPoint pt =
      (m.kind == MeasurementPoint::Kind::Appendix) ? appendix_to_bloch(m.kappa(), m.mu()) : m;
  Complex raw[16];
  copy_raw(rho, raw);
  return cond_entropy_raw(raw, bp.measured_side, bloch_basis(pt.theta(), pt.phi()));
}

double xstate_conditional_entropy(const ComplexMatrix& rho_x, double kappa, double mu) {
  require_xstate(rho_x, "xstate_conditional_entropy");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw DomainError("kappa outside [0, 1]");
  if (!(mu >= 0.0 && mu <= kappa * (1.0 - kappa) + 1e-12))
    throw DomainError("mu outside [0, kappa(1-kappa)]");
  return xstate_cond_entropy_entries(xentries(rho_x), kappa, mu);
}

DiscordResult xstate_discord(const ComplexMatrix& rho_x, const Bipartition& bp) {
  require_xstate(rho_x, "xstate_discord");
  validate_density_matrix(rho_x, "xstate_discord");
  const ComplexMatrix rho =
      (bp.measured_side == Side::First) ? swap_qubits(rho_x) : rho_x;

  const XEntries x = xentries(rho);
  // Candidate order fixes the tie-break: middle point first, then mu = 0.
  static constexpr std::array<std::array<double, 2>, 4> kCandidates = {
      {{0.5, 0.0}, {0.5, 0.25}, {0.0, 0.0}, {1.0, 0.0}}};
  double best = std::numeric_limits<double>::infinity();
  MeasurementPoint argmin;
  for (const auto& cand : kCandidates) {
    const double v = xstate_cond_entropy_entries(x, cand[0], cand[1]);
    if (v < best) {
      best = v;
      argmin = MeasurementPoint::appendix(cand[0], cand[1]);
    }
  }

  const double s_unmeasured = reduced_entropy(rho, 0);
  const double s_measured = reduced_entropy(rho, 1);
  const double s_total = von_neumann_entropy(rho);
  return finish_discord(s_unmeasured, s_measured, s_total, best, argmin,
                        DiscordResult::Method::XStateFast);
}

DiscordResult oracle_discord(const ComplexMatrix& rho, const Bipartition& bp, int resolution) {
  bp.dims.check_against(rho);
  validate_density_matrix(rho, "oracle_discord");
  if (resolution < 2) throw DomainError("oracle_discord: resolution must be >= 2");

  Complex raw[16];
  copy_raw(rho, raw);
  const Side side = bp.measured_side;
  auto eval = [&](double theta, double phi) {
    return cond_entropy_raw(raw, side, bloch_basis(theta, phi));
  };

  const int nth = resolution, nph = 2 * resolution;
  const double dth = kPi / (nth - 1);
  const double dph = 2.0 * kPi / nph;

  // Coarse scan; strict comparison keeps the lexicographically smallest
  // (theta index, phi index) among ties.
  double best = std::numeric_limits<double>::infinity();
  double best_th = 0.0, best_ph = 0.0;
  for (int i = 0; i < nth; ++i) {
    const double theta = i * dth;
    for (int j = 0; j < nph; ++j) {
      const double phi = j * dph;
      const double v = eval(theta, phi);
      if (v < best) {
        best = v;
        best_th = theta;
        best_ph = phi;
      }
    }
  }

  // Alternating golden-section refinement around the best grid point. The
  // (best, best_th, best_ph) triple always names an actually evaluated point.
  int budget = 200;
  double th = best_th, ph = best_ph;
  while (budget > 0) {
    const GoldenResult gt = golden_min(
        [&](double t) { return eval(t, ph); }, std::max(th - dth, 0.0),
        std::min(th + dth, kPi), 1e-8, budget);
    th = gt.x;
    if (gt.value < best) {
      best = gt.value;
      best_th = gt.x;
      best_ph = ph;
    }
    if (budget <= 0) break;
    const GoldenResult gp = golden_min(
        [&](double f) { return eval(th, f); }, ph - dph, ph + dph, 1e-8, budget);
    ph = gp.x;
    const bool improved = gp.value < best - 1e-15;
    if (gp.value < best) {
      best = gp.value;
      best_th = th;
      best_ph = gp.x;
    }
    if (!improved) break;
  }

  const int unmeasured = (side == Side::Second) ? 0 : 1;
  const int measured = 1 - unmeasured;
  return finish_discord(reduced_entropy(rho, unmeasured), reduced_entropy(rho, measured),
                        von_neumann_entropy(rho), best,
                        MeasurementPoint::bloch(best_th, best_ph),
                        DiscordResult::Method::Oracle);
}

DiscordResult discord(const ComplexMatrix& rho, const Bipartition& bp, bool force_oracle,
                      int oracle_resolution) {
  if (!force_oracle && is_real_symmetric_xstate(rho)) return xstate_discord(rho, bp);
  return oracle_discord(rho, bp, oracle_resolution);
}

}  // namespace rindler
