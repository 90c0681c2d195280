#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rindler/analysis.hpp"
#include "rindler/version.hpp"

namespace py = pybind11;
using namespace rindler;

namespace {

ComplexMatrix to_matrix(const py::array_t<Complex>& arr) {
  const auto buf = arr.request();
  if (buf.ndim != 2 || buf.shape[0] != buf.shape[1])
    throw DimensionError("expected a square 2-d array");
  const int n = static_cast<int>(buf.shape[0]);
  auto view = arr.unchecked<2>();
  std::vector<Complex> entries(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries[i * n + j] = view(i, j);
  return ComplexMatrix(n, std::move(entries));
}

py::array_t<Complex> to_array(const ComplexMatrix& m) {
  py::array_t<Complex> arr({m.dim(), m.dim()});
  auto view = arr.mutable_unchecked<2>();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) view(i, j) = m(i, j);
  return arr;
}

Side parse_side(const std::string& s) {
  if (s == "first") return Side::First;
  if (s == "second") return Side::Second;
  throw DomainError("measured side must be 'first' or 'second'");
}

Slot parse_slot(const std::string& s) {
  if (s == "first") return Slot::First;
  if (s == "second") return Slot::Second;
  throw DomainError("slot must be 'first' or 'second'");
}

SpectrumFamily parse_spectrum_family(const std::string& s) {
  if (s == "AI") return SpectrumFamily::AI;
  if (s == "AI_pt") return SpectrumFamily::AIpt;
  if (s == "AII") return SpectrumFamily::AII;
  if (s == "AII_pt") return SpectrumFamily::AIIpt;
  throw DomainError("spectrum family must be one of AI, AI_pt, AII, AII_pt");
}

SubsystemDims parse_dims(const std::vector<int>& dims) {
  SubsystemDims d;
  d.factors = dims;
  return d;
}

py::dict discord_to_dict(const DiscordResult& d) {
  py::dict out;
  out["mutual_information"] = d.mutual_information;
  out["classical_correlation"] = d.classical_correlation;
  out["discord"] = d.discord;
  out["method"] = d.method == DiscordResult::Method::XStateFast ? "xstate_fast" : "oracle";
  if (d.argmin.kind == MeasurementPoint::Kind::Bloch)
    out["argmin"] = py::make_tuple("bloch", d.argmin.theta(), d.argmin.phi());
  else
    out["argmin"] = py::make_tuple("appendix", d.argmin.kappa(), d.argmin.mu());
  return out;
}

}  // namespace

PYBIND11_MODULE(_rindler, m) {
  m.doc() = "Two-qubit quantum correlations under uniformly accelerated observers";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "RindlerError");

  // states
  m.def("pseudo_entangled",
        [](double p) { return to_array(pseudo_entangled(FractionP(p))); }, py::arg("p"));
  m.def("sigma_x_equivalent",
        [](double p) { return to_array(sigma_x_equivalent(FractionP(p))); }, py::arg("p"));
  m.def(
      "alpha_beta_pure",
      [](double alpha, double beta, bool tilde) {
        return to_array(alpha_beta_pure(AlphaBeta(alpha, beta), tilde));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("tilde") = false);
  m.def(
      "acceleration_to_r",
      [](double a, double omega) { return acceleration_to_r(a, omega).value(); },
      py::arg("a"), py::arg("omega"));
  m.def(
      "unruh_channel",
      [](const py::array_t<Complex>& rho, double r, const std::string& slot) {
        return to_array(unruh_channel(to_matrix(rho), RindlerR(r), parse_slot(slot)));
      },
      py::arg("rho"), py::arg("r"), py::arg("slot") = "second");
  m.def("rho_ai", [](double p, double r) { return to_array(rho_AI(FractionP(p), RindlerR(r))); },
        py::arg("p"), py::arg("r"));
  m.def("rho_aii",
        [](double p, double r) { return to_array(rho_AII(FractionP(p), RindlerR(r))); },
        py::arg("p"), py::arg("r"));
  m.def("rho_iii", [](double r) { return to_array(rho_III(RindlerR(r))); }, py::arg("r"));
  m.def(
      "rho_ib",
      [](double beta, double r, bool tilde) {
        const AlphaBeta ab = AlphaBeta::from_beta(beta);
        return to_array(tilde ? rho_tilde_IB(ab, RindlerR(r)) : rho_IB(ab, RindlerR(r)));
      },
      py::arg("beta"), py::arg("r"), py::arg("tilde") = false);
  m.def(
      "closed_form_spectra",
      [](const std::string& family, double p, double r) {
        const auto s = closed_form_spectra(parse_spectrum_family(family), FractionP(p), RindlerR(r));
        return std::vector<double>(s.begin(), s.end());
      },
      py::arg("family"), py::arg("p"), py::arg("r"));

  // linalg
  m.def(
      "partial_trace",
      [](const py::array_t<Complex>& m_, const std::vector<int>& dims,
         const std::vector<int>& keep) {
        return to_array(partial_trace(to_matrix(m_), parse_dims(dims), keep));
      },
      py::arg("m"), py::arg("dims"), py::arg("keep"));
  m.def(
      "partial_transpose",
      [](const py::array_t<Complex>& m_, const std::vector<int>& dims, int subsystem) {
        return to_array(partial_transpose(to_matrix(m_), parse_dims(dims), subsystem));
      },
      py::arg("m"), py::arg("dims"), py::arg("subsystem"));
  m.def("hermitian_eigenvalues",
        [](const py::array_t<Complex>& m_) { return hermitian_eigen(to_matrix(m_)).values; },
        py::arg("m"));
  m.def("von_neumann_entropy",
        [](const py::array_t<Complex>& m_) { return von_neumann_entropy(to_matrix(m_)); },
        py::arg("m"));

  // measures
  m.def(
      "log_negativity",
      [](const py::array_t<Complex>& rho) {
        return log_negativity(to_matrix(rho), Bipartition::measuring(Side::Second));
      },
      py::arg("rho"));
  m.def("concurrence",
        [](const py::array_t<Complex>& rho) { return concurrence(to_matrix(rho)); },
        py::arg("rho"));
  m.def("entanglement_of_formation",
        [](const py::array_t<Complex>& rho) {
          return entanglement_of_formation(to_matrix(rho));
        },
        py::arg("rho"));
  m.def(
      "mutual_information",
      [](const py::array_t<Complex>& rho) {
        return mutual_information(to_matrix(rho), Bipartition::measuring(Side::Second));
      },
      py::arg("rho"));
  m.def(
      "measured_conditional_entropy",
      [](const py::array_t<Complex>& rho, double theta, double phi,
         const std::string& measured) {
        return measured_conditional_entropy(to_matrix(rho),
                                            Bipartition::measuring(parse_side(measured)),
                                            MeasurementPoint::bloch(theta, phi));
      },
      py::arg("rho"), py::arg("theta"), py::arg("phi"), py::arg("measured") = "second");
  m.def(
      "xstate_conditional_entropy",
      [](const py::array_t<Complex>& rho, double kappa, double mu) {
        return xstate_conditional_entropy(to_matrix(rho), kappa, mu);
      },
      py::arg("rho"), py::arg("kappa"), py::arg("mu"));
  m.def(
      "discord",
      [](const py::array_t<Complex>& rho, const std::string& measured, bool force_oracle,
         int oracle_resolution) {
        return discord_to_dict(discord(to_matrix(rho), Bipartition::measuring(parse_side(measured)),
                                       force_oracle, oracle_resolution));
      },
      py::arg("rho"), py::arg("measured") = "second", py::arg("force_oracle") = false,
      py::arg("oracle_resolution") = 64);
  m.def(
      "oracle_discord",
      [](const py::array_t<Complex>& rho, const std::string& measured, int resolution) {
        return discord_to_dict(
            oracle_discord(to_matrix(rho), Bipartition::measuring(parse_side(measured)), resolution));
      },
      py::arg("rho"), py::arg("measured") = "second", py::arg("resolution") = 64);
  m.def(
      "xstate_discord",
      [](const py::array_t<Complex>& rho, const std::string& measured) {
        return discord_to_dict(
            xstate_discord(to_matrix(rho), Bipartition::measuring(parse_side(measured))));
      },
      py::arg("rho"), py::arg("measured") = "second");

  // analysis
  m.def(
      "critical_p",
      [](double r, const std::string& family) -> py::object {
        const Family f = family == "AI" ? Family::AI : Family::AII;
        if (family != "AI" && family != "AII") throw DomainError("family must be AI or AII");
        const auto pc = critical_p(RindlerR(r), f);
        if (!pc) return py::none();
        return py::float_(*pc);
      },
      py::arg("r"), py::arg("family") = "AI");
  m.def(
      "critical_r",
      [](double p) {
        const CriticalR cr = critical_r(FractionP(p));
        py::dict out;
        switch (cr.kind) {
          case CriticalR::Kind::AlreadySeparable:
            out["kind"] = "already_separable";
            out["r"] = 0.0;
            break;
          case CriticalR::Kind::Threshold:
            out["kind"] = "threshold";
            out["r"] = cr.r;
            break;
          case CriticalR::Kind::EntangledAtAllR:
            out["kind"] = "entangled_at_all_r";
            out["r"] = py::none();
            break;
        }
        return out;
      },
      py::arg("p"));
  m.def(
      "extremal_beta",
      [](double r) {
        const BetaExtremum e = extremal_beta(RindlerR(r));
        return py::make_tuple(e.beta, e.gap);
      },
      py::arg("r"));
  m.def("verify_claims", []() {
    const ClaimReport rep = verify_claims();
    py::list out;
    for (const auto& c : rep.entries) {
      py::dict d;
      d["id"] = c.id;
      d["description"] = c.description;
      d["target"] = c.target;
      d["measured"] = c.measured;
      d["tolerance"] = c.tolerance;
      d["pass"] = c.pass;
      out.append(std::move(d));
    }
    return out;
  });
}
