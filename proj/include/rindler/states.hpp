#pragma once

#include <array>

#include "rindler/linalg.hpp"

namespace rindler {

/// Mixing fraction p of the pseudo-entangled family, p in [0, 1].
class FractionP {
 public:
  explicit FractionP(double p);
  double value() const { return p_; }

 private:
  double p_;
};

/// Unruh mixing angle r in [0, pi/4]; r = 0 is inertial, r = pi/4 the
/// infinite-acceleration limit.
class RindlerR {
 public:
  explicit RindlerR(double r);
  double value() const { return r_; }

 private:
  double r_;
};

/// Amplitudes of |psi> = alpha(|00> + |11>) + beta|10>, both nonnegative,
/// with 2 alpha^2 + beta^2 = 1.
class AlphaBeta {
 public:
  AlphaBeta(double alpha, double beta);

  /// alpha = sqrt((1 - beta^2)/2) for beta in [0, 1].
  static AlphaBeta from_beta(double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Which qubit of a two-qubit state is handed to the accelerating observer.
enum class Slot { First, Second };

/// rho = (1-p)/4 I + p |Phi+><Phi+|; entangled iff p > 1/3.
ComplexMatrix pseudo_entangled(FractionP p);

/// rho-tilde = (1-p)/4 I + p |Psi+><Psi+| = (I(x)sigma_x) rho (I(x)sigma_x).
ComplexMatrix sigma_x_equivalent(FractionP p);

/// Projector onto alpha(|00>+|11>) + beta|10>, or onto its sigma_x (x) I image
/// alpha(|10>+|01>) + beta|00> when tilde is set.
ComplexMatrix alpha_beta_pure(const AlphaBeta& ab, bool tilde);

/// r = arccos(1/sqrt(1 + e^{-2 pi omega / a})), natural units c = 1.
RindlerR acceleration_to_r(double a, double omega);

/// Send the accelerated qubit through the fermionic Unruh isometry
/// |0> -> cos r |0>_I |0>_II + sin r |1>_I |1>_II, |1> -> |1>_I |0>_II.
/// slot = Second yields ordering (A, I, II); slot = First yields (I, II, B).
ComplexMatrix unruh_channel(const ComplexMatrix& rho, RindlerR r, Slot slot);

// Closed-form reductions of the Unruh-transformed pseudo-entangled state.
ComplexMatrix rho_AI(FractionP p, RindlerR r);
ComplexMatrix rho_AII(FractionP p, RindlerR r);
ComplexMatrix rho_III(RindlerR r);  // independent of p

// Closed-form reductions of the Unruh-transformed alpha/beta pure states,
// accelerated first qubit, region II traced out.
ComplexMatrix rho_IB(const AlphaBeta& ab, RindlerR r);
ComplexMatrix rho_tilde_IB(const AlphaBeta& ab, RindlerR r);

/// Which closed-form spectrum to evaluate.
enum class SpectrumFamily { AI, AIpt, AII, AIIpt };

/// The four closed-form eigenvalues, ordered as {lambda1, lambda2, lambda3,
/// lambda4}: the first pair carries the square root with +/- sign, the second
/// pair the +/- trigonometric term. lambda2 of the pt families is the only
/// eigenvalue that can turn negative.
std::array<double, 4> closed_form_spectra(SpectrumFamily family, FractionP p, RindlerR r);

}  // namespace rindler
