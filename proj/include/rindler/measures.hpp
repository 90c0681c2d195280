#pragma once

#include "rindler/linalg.hpp"

namespace rindler {

/// Which tensor factor the von Neumann projectors act on.
enum class Side { First, Second };

/// A two-qubit bipartition together with the measured side. Discord is
/// directional; negativity and mutual information ignore measured_side.
struct Bipartition {
  SubsystemDims dims = SubsystemDims::qubits(2);
  Side measured_side = Side::Second;

  static Bipartition measuring(Side s) { return Bipartition{SubsystemDims::qubits(2), s}; }
};

/// A projective-measurement direction, either as Bloch angles of the
/// projector axis or as the (kappa, mu) coordinates of the X-state
/// parametrization (kappa = t^2 + y3^2, mu = (t y1 + y2 y3)^2).
struct MeasurementPoint {
  enum class Kind { Bloch, Appendix };
  Kind kind = Kind::Bloch;
  double a = 0.0;  // theta or kappa
  double b = 0.0;  // phi or mu

  static MeasurementPoint bloch(double theta, double phi) {
    return {Kind::Bloch, theta, phi};
  }
  static MeasurementPoint appendix(double kappa, double mu) {
    return {Kind::Appendix, kappa, mu};
  }

  double theta() const { return a; }
  double phi() const { return b; }
  double kappa() const { return a; }
  double mu() const { return b; }
};

/// Output of a discord computation. mutual_information ==
/// classical_correlation + discord holds exactly by construction.
struct DiscordResult {
  enum class Method { XStateFast, Oracle };

  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  MeasurementPoint argmin;
  Method method = Method::XStateFast;
};

/// N(rho) = log2 sum_i |lambda_i(rho^pt)| in ebits; symmetric in the two
/// sides, zero exactly when the partial transpose is PSD.
double log_negativity(const ComplexMatrix& rho, const Bipartition& bp);

/// Wootters concurrence via the Hermitian reformulation: the lambda-tilde are
/// the square roots of the eigenvalues of sqrt(rho) R sqrt(rho) with
/// R = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
double concurrence(const ComplexMatrix& rho);

/// E_f = h((1 + sqrt(1 - C^2))/2) in bits, h the binary entropy.
double entanglement_of_formation(const ComplexMatrix& rho);

/// I(A:B) = S(rho_A) + S(rho_B) - S(rho) in bits.
double mutual_information(const ComplexMatrix& rho, const Bipartition& bp);

/// S_Pi(A|B) = sum_k p_k S(rho_{A|k}) for the projective measurement at the
/// given point on bp.measured_side. Appendix points are mapped to Bloch angles
/// through the documented y3 = 0 branch.
double measured_conditional_entropy(const ComplexMatrix& rho, const Bipartition& bp,
                                    const MeasurementPoint& m);

/// Closed-form S_Pi(A|B) for a real symmetric X-state measured on the second
/// side, evaluated directly from the (kappa, mu) coordinates. Requires
/// mu <= kappa (1 - kappa).
double xstate_conditional_entropy(const ComplexMatrix& rho_x, double kappa, double mu);

/// Discord through the X-state candidate set {(kappa=1/2, mu=0),
/// (kappa=1/2, mu=1/4), (kappa=0), (kappa=1)}; ties broken toward the middle
/// point, then toward mu = 0.
DiscordResult xstate_discord(const ComplexMatrix& rho_x, const Bipartition& bp);

/// Brute-force discord: coarse (theta, phi) grid (resolution x 2*resolution)
/// followed by alternating golden-section refinement. Independent of the
/// X-state closed forms; serves as the verification oracle.
DiscordResult oracle_discord(const ComplexMatrix& rho, const Bipartition& bp,
                             int resolution = 64);

/// Dispatching discord: the X-state fast path when rho is real symmetric
/// X-shaped, the oracle otherwise (or always, when force_oracle is set).
DiscordResult discord(const ComplexMatrix& rho, const Bipartition& bp,
                      bool force_oracle = false, int oracle_resolution = 64);

/// True when every off-X entry is below 1e-12 in magnitude and the X entries
/// are real and symmetric to the same tolerance.
bool is_real_symmetric_xstate(const ComplexMatrix& rho);

/// The y3 = 0 branch mapping (kappa, mu) -> Bloch angles:
/// t = sqrt(kappa), y1 = sqrt(mu/kappa), y2 = sqrt(1 - kappa - mu/kappa).
MeasurementPoint appendix_to_bloch(double kappa, double mu);

/// Exchange the two qubit factors of a 4x4 matrix.
ComplexMatrix swap_qubits(const ComplexMatrix& rho);

}  // namespace rindler
