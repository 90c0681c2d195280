#include <cmath>
#include <random>

#include "doctest.h"
#include "rindler/states.hpp"
#include "test_helpers.hpp"

using namespace rindler;
using namespace rindler::test;

namespace {

// Closed form of the full tripartite state in the |l m n> = |A I II> basis,
// assembled independently of the channel implementation.
ComplexMatrix tripartite_closed_form(double p, double r) {
  const double c = std::cos(r), s = std::sin(r);
  ComplexMatrix m(8);
  m(0, 0) = (1 + p) * c * c;
  m(0, 3) = m(3, 0) = (1 + p) * s * c;  // (1+p)/2 sin 2r
  m(0, 6) = m(6, 0) = 2 * p * c;
  m(2, 2) = 1 - p;
  m(3, 3) = (1 + p) * s * s;
  m(3, 6) = m(6, 3) = 2 * p * s;
  m(4, 4) = (1 - p) * c * c;
  m(4, 7) = m(7, 4) = (1 - p) * s * c;
  m(6, 6) = 1 + p;
  m(7, 7) = (1 - p) * s * s;
  return 0.25 * m;
}

}  // namespace

TEST_SUITE_BEGIN("states");

TEST_CASE("pseudo-entangled family") {
  SUBCASE("pure and maximally mixed limits") {
    CHECK(pseudo_entangled(FractionP(1.0)).max_abs_diff(bell_phi_plus()) < 1e-15);
    CHECK(pseudo_entangled(FractionP(0.0))
              .max_abs_diff(0.25 * ComplexMatrix::identity(4)) < 1e-15);
  }

  SUBCASE("separability boundary at p = 1/3") {
    const ComplexMatrix pt = partial_transpose(pseudo_entangled(FractionP(1.0 / 3.0)),
                                               SubsystemDims::qubits(2), 1);
    CHECK(std::abs(hermitian_eigen(pt).values.back()) < 1e-12);
  }

  SUBCASE("every constructor output is a valid state") {
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.7, 1.0}) {
      validate_density_matrix(pseudo_entangled(FractionP(p)), "pseudo");
      validate_density_matrix(sigma_x_equivalent(FractionP(p)), "tilde");
    }
  }

  SUBCASE("out-of-range fraction rejected") {
    CHECK_THROWS_AS(FractionP(-0.1), DomainError);
    CHECK_THROWS_AS(FractionP(1.1), DomainError);
  }
}

TEST_CASE("sigma_x equivalent is the conjugated family") {
  const ComplexMatrix u = tensor_product(ComplexMatrix::identity(2), pauli_x());
  for (double p : {0.0, 0.4, 1.0}) {
    const ComplexMatrix direct = sigma_x_equivalent(FractionP(p));
    const ComplexMatrix conj = u * pseudo_entangled(FractionP(p)) * u;
    CHECK(direct.max_abs_diff(conj) < 1e-14);

    const EigenResult ea = hermitian_eigen(direct);
    const EigenResult eb = hermitian_eigen(pseudo_entangled(FractionP(p)));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ea.values[i] - eb.values[i]) < 1e-13);
  }
}

TEST_CASE("alpha/beta pure states") {
  const AlphaBeta bell(kInvSqrt2, 0.0);
  CHECK(alpha_beta_pure(bell, false).max_abs_diff(bell_phi_plus()) < 1e-15);
  CHECK(alpha_beta_pure(bell, true).max_abs_diff(bell_psi_plus()) < 1e-15);

  ComplexMatrix ten(4);
  ten(2, 2) = 1.0;  // |10><10|
  CHECK(alpha_beta_pure(AlphaBeta(0.0, 1.0), false).max_abs_diff(ten) == 0.0);

  const AlphaBeta generic = AlphaBeta::from_beta(0.6);
  const ComplexMatrix proj = alpha_beta_pure(generic, false);
  CHECK(std::abs(proj.trace() - Complex{1.0, 0.0}) < 1e-14);
  CHECK((proj * proj).max_abs_diff(proj) < 1e-14);  // rank-1 projector

  CHECK_THROWS_AS(AlphaBeta(0.9, 0.9), DomainError);
  CHECK_THROWS_AS(AlphaBeta(-0.1, 1.0), DomainError);
}

TEST_CASE("acceleration to Rindler angle") {
  // a = 2 pi omega gives cos r = 1/sqrt(1 + e^{-1})
  CHECK(acceleration_to_r(2.0 * kPi, 1.0).value() ==
        doctest::Approx(0.545207623830584).epsilon(1e-12));
  CHECK(acceleration_to_r(1e-3, 1.0).value() < 1e-9);
  CHECK(acceleration_to_r(1e9, 1.0).value() == doctest::Approx(kPiQuarter).epsilon(1e-6));
  CHECK_THROWS_AS(acceleration_to_r(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(acceleration_to_r(1.0, -2.0), DomainError);
}

TEST_CASE("unruh channel against the closed-form tripartite state") {
  for (double p : {0.0, 0.3, 1.0}) {
    for (double r : {0.0, 0.4, kPiQuarter}) {
      const ComplexMatrix out =
          unruh_channel(pseudo_entangled(FractionP(p)), RindlerR(r), Slot::Second);
      CHECK(out.max_abs_diff(tripartite_closed_form(p, r)) < 1e-12);
      validate_density_matrix(out, "channel output");
    }
  }
}

TEST_CASE("unruh channel embeds the input at r = 0") {
  std::mt19937 rng(41);
  const ComplexMatrix rho = random_density_matrix(rng, 4);
  const ComplexMatrix out = unruh_channel(rho, RindlerR(0.0), Slot::Second);
  // (A, I) block with region II in |0>: out[(a,i,0),(a',i',0)] = rho
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int row = (i / 2) * 4 + (i % 2) * 2;
      const int col = (j / 2) * 4 + (j % 2) * 2;
      CHECK(std::abs(out(row, col) - rho(i, j)) < 1e-14);
    }
  const int keep_ii[] = {2};
  const ComplexMatrix ii = partial_trace(out, SubsystemDims::qubits(3), keep_ii);
  ComplexMatrix vac(2);
  vac(0, 0) = 1.0;
  CHECK(ii.max_abs_diff(vac) < 1e-14);
}

TEST_CASE("unruh channel preserves trace and positivity on random inputs") {
  std::mt19937 rng(43);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix rho = random_density_matrix(rng, 4);
    const ComplexMatrix out = unruh_channel(rho, RindlerR(0.31), Slot::First);
    validate_density_matrix(out, "channel output");
  }
  ComplexMatrix bad(4);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(unruh_channel(bad, RindlerR(0.1), Slot::Second), NotAStateError);
}

TEST_CASE("closed-form reductions match the channel pipeline") {
  const SubsystemDims q3 = SubsystemDims::qubits(3);
  const int keep_ai[] = {0, 1}, keep_aii[] = {0, 2}, keep_iii[] = {1, 2};
  for (double p : {0.1, 0.5, 0.9}) {
    for (double r : {0.0, 0.3, kPiQuarter}) {
      const FractionP fp(p);
      const RindlerR rr(r);
      const ComplexMatrix pipe = unruh_channel(pseudo_entangled(fp), rr, Slot::Second);
      CHECK(partial_trace(pipe, q3, keep_ai).max_abs_diff(rho_AI(fp, rr)) < 1e-12);
      CHECK(partial_trace(pipe, q3, keep_aii).max_abs_diff(rho_AII(fp, rr)) < 1e-12);
      CHECK(partial_trace(pipe, q3, keep_iii).max_abs_diff(rho_III(rr)) < 1e-12);
    }
  }
}

TEST_CASE("rho_III is independent of the mixing fraction") {
  const SubsystemDims q3 = SubsystemDims::qubits(3);
  const int keep_iii[] = {1, 2};
  const RindlerR r(0.5);
  const ComplexMatrix a =
      partial_trace(unruh_channel(pseudo_entangled(FractionP(0.1)), r, Slot::Second), q3,
                    keep_iii);
  const ComplexMatrix b =
      partial_trace(unruh_channel(pseudo_entangled(FractionP(0.9)), r, Slot::Second), q3,
                    keep_iii);
  CHECK(a.max_abs_diff(b) < 1e-12);
  CHECK(a.max_abs_diff(rho_III(r)) < 1e-12);
}

TEST_CASE("inertial reductions") {
  for (double p : {0.0, 0.5, 1.0}) {
    const FractionP fp(p);
    CHECK(rho_AI(fp, RindlerR(0.0)).max_abs_diff(pseudo_entangled(fp)) < 1e-14);
    ComplexMatrix expected(4);
    expected(0, 0) = expected(2, 2) = 0.5;
    CHECK(rho_AII(fp, RindlerR(0.0)).max_abs_diff(expected) < 1e-14);
  }
}

TEST_CASE("alpha/beta channel reductions match closed forms") {
  const SubsystemDims q3 = SubsystemDims::qubits(3);
  const int keep_ib[] = {0, 2};  // ordering (I, II, B): keep I and B
  for (double beta : {0.0, 0.3, 0.8, 1.0}) {
    for (double r : {0.0, 0.5, kPiQuarter}) {
      const AlphaBeta ab = AlphaBeta::from_beta(beta);
      const RindlerR rr(r);
      const ComplexMatrix pipe =
          unruh_channel(alpha_beta_pure(ab, false), rr, Slot::First);
      CHECK(partial_trace(pipe, q3, keep_ib).max_abs_diff(rho_IB(ab, rr)) < 1e-12);
      const ComplexMatrix pipe_t =
          unruh_channel(alpha_beta_pure(ab, true), rr, Slot::First);
      CHECK(partial_trace(pipe_t, q3, keep_ib).max_abs_diff(rho_tilde_IB(ab, rr)) < 1e-12);
      // trace 1 without any hidden normalization factor
      CHECK(std::abs(rho_IB(ab, rr).trace() - Complex{1.0, 0.0}) < 1e-14);
      validate_density_matrix(rho_IB(ab, rr), "rho_IB");
      validate_density_matrix(rho_tilde_IB(ab, rr), "rho_tilde_IB");
    }
  }
}

TEST_CASE("closed-form spectra") {
  SUBCASE("separability boundaries of the pt eigenvalue") {
    CHECK(std::abs(closed_form_spectra(SpectrumFamily::AIpt, FractionP(1.0 / 3.0),
                                       RindlerR(0.0))[1]) < 1e-12);
    CHECK(std::abs(closed_form_spectra(SpectrumFamily::AIpt, FractionP(3.0 / 7.0),
                                       RindlerR(kPiQuarter))[1]) < 1e-12);
    CHECK(std::abs(closed_form_spectra(SpectrumFamily::AIIpt, FractionP(1.0),
                                       RindlerR(0.0))[1]) < 1e-12);
  }

  SUBCASE("agreement with the eigensolver across a coarse grid") {
    const SubsystemDims q2 = SubsystemDims::qubits(2);
    for (int pi = 0; pi <= 6; ++pi) {
      for (int ri = 0; ri <= 6; ++ri) {
        const FractionP p(pi / 6.0);
        const RindlerR r(ri / 6.0 * kPiQuarter);
        for (SpectrumFamily fam : {SpectrumFamily::AI, SpectrumFamily::AIpt,
                                   SpectrumFamily::AII, SpectrumFamily::AIIpt}) {
          ComplexMatrix m = (fam == SpectrumFamily::AI || fam == SpectrumFamily::AIpt)
                                ? rho_AI(p, r)
                                : rho_AII(p, r);
          if (fam == SpectrumFamily::AIpt || fam == SpectrumFamily::AIIpt)
            m = partial_transpose(m, q2, 1);
          auto closed = closed_form_spectra(fam, p, r);
          std::sort(closed.begin(), closed.end(), std::greater<>());
          const EigenResult e = hermitian_eigen(m);
          for (int k = 0; k < 4; ++k) CHECK(std::abs(closed[k] - e.values[k]) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("entropy of the region-I marginal matches its closed form") {
  for (double r : {0.1, 0.5, kPiQuarter}) {
    const double c2 = std::cos(r) * std::cos(r), s2 = std::sin(r) * std::sin(r);
    const double expected = -(c2 / 2) * std::log2(c2 / 2) -
                            ((1 + s2) / 2) * std::log2((1 + s2) / 2);
    const int keep_i[] = {1};
    const ComplexMatrix marginal =
        partial_trace(rho_AI(FractionP(0.37), RindlerR(r)), SubsystemDims::qubits(2), keep_i);
    CHECK(von_neumann_entropy(marginal) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_SUITE_END();
