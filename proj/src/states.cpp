#include "rindler/states.hpp"

#include <cmath>
#include <sstream>

namespace rindler {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexMatrix projector4(const std::array<double, 4>& amps) {
  std::array<Complex, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = Complex{amps[i], 0.0};
  return ComplexMatrix::outer(v);
}

}  // namespace

FractionP::FractionP(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "fraction p = " << p << " outside [0, 1]";
    throw DomainError(os.str());
  }
}

RindlerR::RindlerR(double r) : r_(r) {
  if (!(r >= 0.0 && r <= kPi / 4.0)) {
    std::ostringstream os;
    os << "Rindler angle r = " << r << " outside [0, pi/4]";
    throw DomainError(os.str());
  }
}

AlphaBeta::AlphaBeta(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (alpha < 0.0 || beta < 0.0) throw DomainError("alpha and beta must be nonnegative");
  const double norm = 2.0 * alpha * alpha + beta * beta;
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "2 alpha^2 + beta^2 = " << norm << " deviates from 1";
    throw DomainError(os.str());
  }
}

AlphaBeta AlphaBeta::from_beta(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta outside [0, 1]");
  return AlphaBeta(std::sqrt((1.0 - beta * beta) / 2.0), beta);
}

ComplexMatrix pseudo_entangled(FractionP p) {
  const double pv = p.value();
  ComplexMatrix rho = projector4({kInvSqrt2, 0.0, 0.0, kInvSqrt2});  // |Phi+><Phi+|
  rho = pv * rho;
  const double bg = (1.0 - pv) / 4.0;
  for (int i = 0; i < 4; ++i) rho(i, i) += bg;
  return rho;
}

ComplexMatrix sigma_x_equivalent(FractionP p) {
  const double pv = p.value();
  ComplexMatrix rho = projector4({0.0, kInvSqrt2, kInvSqrt2, 0.0});  // |Psi+><Psi+|
  rho = pv * rho;
  const double bg = (1.0 - pv) / 4.0;
  for (int i = 0; i < 4; ++i) rho(i, i) += bg;
  return rho;
}

ComplexMatrix alpha_beta_pure(const AlphaBeta& ab, bool tilde) {
  const double a = ab.alpha(), b = ab.beta();
  if (tilde) return projector4({b, a, a, 0.0});  // alpha(|10>+|01>) + beta|00>
  return projector4({a, 0.0, b, a});             // alpha(|00>+|11>) + beta|10>
}

RindlerR acceleration_to_r(double a, double omega) {
  if (!(a > 0.0) || !(omega > 0.0))
    throw DomainError("acceleration_to_r: a and omega must be strictly positive");
  const double r = std::acos(1.0 / std::sqrt(1.0 + std::exp(-2.0 * kPi * omega / a)));
  return RindlerR(r);
}

ComplexMatrix unruh_channel(const ComplexMatrix& rho, RindlerR r, Slot slot) {
  if (rho.dim() != 4) throw DimensionError("unruh_channel: input must be 4x4");
  validate_density_matrix(rho, "unruh_channel input");

  const double c = std::cos(r.value()), s = std::sin(r.value());
  // Isometry components: |b> -> sum_k amp[b][k] |pair[b][k]> with the
  // (region-I, region-II) pair encoded as a 2-bit index.
  const int pair[2][2] = {{0b00, 0b11}, {0b10, 0b10}};
  const double amp[2][2] = {{c, s}, {1.0, 0.0}};
  const int terms[2] = {2, 1};

  ComplexMatrix out(8);
  for (int x = 0; x < 2; ++x)          // untouched qubit, row
    for (int xp = 0; xp < 2; ++xp)     // untouched qubit, column
      for (int b = 0; b < 2; ++b)      // accelerated qubit, row
        for (int bp = 0; bp < 2; ++bp) {
          const Complex rij = (slot == Slot::Second) ? rho(2 * x + b, 2 * xp + bp)
                                                     : rho(2 * b + x, 2 * bp + xp);
          if (rij == Complex{0.0, 0.0}) continue;
          for (int k = 0; k < terms[b]; ++k)
            for (int kp = 0; kp < terms[bp]; ++kp) {
              const double w = amp[b][k] * amp[bp][kp];
              // slot Second: ordering (A, I, II) -> index 4x + pair ;
              // slot First:  ordering (I, II, B) -> index 2*pair + x.
              const int row = (slot == Slot::Second) ? 4 * x + pair[b][k] : 2 * pair[b][k] + x;
              const int col =
                  (slot == Slot::Second) ? 4 * xp + pair[bp][kp] : 2 * pair[bp][kp] + xp;
              out(row, col) += w * rij;
            }
        }
  return out;
}

ComplexMatrix rho_AI(FractionP p, RindlerR r) {
  const double pv = p.value();
  const double c2 = std::cos(r.value()) * std::cos(r.value());
  const double s2 = 1.0 - c2;
  const double cc = std::cos(r.value());
  ComplexMatrix m(4);
  m(0, 0) = (1.0 + pv) * c2 / 4.0;
  m(1, 1) = (1.0 + s2 - pv * c2) / 4.0;
  m(2, 2) = (1.0 - pv) * c2 / 4.0;
  m(3, 3) = (1.0 + s2 + pv * c2) / 4.0;
  m(0, 3) = m(3, 0) = 2.0 * pv * cc / 4.0;
  return m;
}

ComplexMatrix rho_AII(FractionP p, RindlerR r) {
  const double pv = p.value();
  const double c2 = std::cos(r.value()) * std::cos(r.value());
  const double s2 = 1.0 - c2;
  const double ss = std::sin(r.value());
  ComplexMatrix m(4);
  m(0, 0) = (1.0 + c2 - pv * s2) / 4.0;
  m(1, 1) = (1.0 + pv) * s2 / 4.0;
  m(2, 2) = (1.0 + c2 + pv * s2) / 4.0;
  m(3, 3) = (1.0 - pv) * s2 / 4.0;
  m(1, 2) = m(2, 1) = 2.0 * pv * ss / 4.0;
  return m;
}

ComplexMatrix rho_III(RindlerR r) {
  const double c = std::cos(r.value()), s = std::sin(r.value());
  ComplexMatrix m(4);
  m(0, 0) = c * c / 2.0;
  m(2, 2) = 0.5;
  m(3, 3) = s * s / 2.0;
  m(0, 3) = m(3, 0) = s * c / 2.0;
  return m;
}

ComplexMatrix rho_IB(const AlphaBeta& ab, RindlerR r) {
  const double a = ab.alpha(), b = ab.beta();
  const double c = std::cos(r.value()), s = std::sin(r.value());
  ComplexMatrix m(4);
  m(0, 0) = a * a * c * c;
  m(2, 2) = b * b + a * a * s * s;
  m(3, 3) = a * a;
  m(0, 2) = m(2, 0) = a * b * c;
  m(0, 3) = m(3, 0) = a * a * c;
  m(2, 3) = m(3, 2) = a * b;
  return m;
}

ComplexMatrix rho_tilde_IB(const AlphaBeta& ab, RindlerR r) {
  const double a = ab.alpha(), b = ab.beta();
  const double c = std::cos(r.value()), s = std::sin(r.value());
  ComplexMatrix m(4);
  m(0, 0) = b * b * c * c;
  m(1, 1) = a * a * c * c;
  m(2, 2) = a * a + b * b * s * s;
  m(3, 3) = a * a * s * s;
  m(0, 1) = m(1, 0) = a * b * c * c;
  m(0, 2) = m(2, 0) = a * b * c;
  m(1, 2) = m(2, 1) = a * a * c;
  m(2, 3) = m(3, 2) = a * b * s * s;
  return m;
}

std::array<double, 4> closed_form_spectra(SpectrumFamily family, FractionP p, RindlerR r) {
  const double pv = p.value();
  const double c2 = std::cos(r.value()) * std::cos(r.value());
  const double s2 = 1.0 - c2;
  switch (family) {
    case SpectrumFamily::AI: {
      const double root = std::sqrt(4.0 * pv * pv * c2 + s2 * s2);
      return {(1.0 + pv * c2 + root) / 4.0, (1.0 + pv * c2 - root) / 4.0,
              (1.0 - pv * c2 + s2) / 4.0, (1.0 - pv * c2 - s2) / 4.0};
    }
    case SpectrumFamily::AIpt: {
      const double root = std::sqrt(s2 * s2 + 4.0 * pv * pv * c2);
      return {(1.0 - pv * c2 + root) / 4.0, (1.0 - pv * c2 - root) / 4.0,
              (1.0 + pv * c2 + s2) / 4.0, (1.0 + pv * c2 - s2) / 4.0};
    }
    case SpectrumFamily::AII: {
      const double root = std::sqrt(c2 * c2 + 4.0 * pv * pv * s2);
      return {(1.0 + pv * s2 + root) / 4.0, (1.0 + pv * s2 - root) / 4.0,
              (1.0 - pv * s2 + c2) / 4.0, (1.0 - pv * s2 - c2) / 4.0};
    }
    case SpectrumFamily::AIIpt: {
      const double root = std::sqrt(c2 * c2 + 4.0 * pv * pv * s2);
      return {(1.0 - pv * s2 + root) / 4.0, (1.0 - pv * s2 - root) / 4.0,
              (1.0 + pv * s2 + c2) / 4.0, (1.0 + pv * s2 - c2) / 4.0};
    }
  }
  throw DomainError("closed_form_spectra: unknown family");
}

}  // namespace rindler
