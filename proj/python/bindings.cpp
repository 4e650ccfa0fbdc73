#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempora/causal.hpp"
#include "tempora/errors.hpp"
#include "tempora/histories.hpp"
#include "tempora/oscillator.hpp"
#include "tempora/otoc.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"
#include "tempora/siggames.hpp"
#include "tempora/verify.hpp"

namespace py = pybind11;
using namespace tempora;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

CMatrix to_cmatrix(const CArray& a) {
  if (a.ndim() == 1) {
    std::vector<cplx> v(a.data(), a.data() + a.shape(0));
    return CMatrix(a.shape(0), 1, std::move(v));
  }
  if (a.ndim() != 2) throw DimensionError("expected a 1-D or 2-D array");
  std::vector<cplx> v(a.data(), a.data() + a.size());
  return CMatrix(a.shape(0), a.shape(1), std::move(v));
}

CArray to_array(const CMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

std::vector<CMatrix> to_list(const std::vector<CArray>& xs) {
  std::vector<CMatrix> out;
  for (const auto& x : xs) out.push_back(to_cmatrix(x));
  return out;
}

SpaceSpec to_spec(const std::vector<std::pair<std::string, std::size_t>>& slots) {
  std::vector<SpaceSpec::Factor> f;
  for (const auto& [label, dim] : slots) f.push_back({label, dim});
  return SpaceSpec(std::move(f));
}

PauliString parse_pauli(const std::string& s) {
  std::vector<std::uint8_t> letters;
  for (char c : s) {
    const auto pos = std::string("IXYZ").find(c);
    if (pos == std::string::npos) throw ValidationError("Pauli strings use the letters I, X, Y, Z");
    letters.push_back(static_cast<std::uint8_t>(pos));
  }
  return PauliString(std::move(letters));
}

py::dict report_dict(const ViolationReport& r) {
  py::dict d;
  d["gyni"] = r.gyni;
  d["lgyni"] = r.lgyni;
  d["causal"] = r.causal;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tempora, m) {
  m.doc() = "Temporal quantum correlations: PDMs, process matrices, histories, games, OTOCs";

  auto base = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ImpossiblePostselection>(m, "ImpossiblePostselection", PyExc_ValueError);
  py::register_exception<UndefinedCorrelation>(m, "UndefinedCorrelation", PyExc_ValueError);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);
  (void)base;

  m.def("pauli_matrix", [](const std::string& s) { return to_array(pauli_matrix(parse_pauli(s))); }, py::arg("letters"));
  m.def("partial_trace",
        [](const CArray& a, const std::vector<std::pair<std::string, std::size_t>>& spec,
           const std::vector<std::string>& keep) { return to_array(partial_trace(to_cmatrix(a), to_spec(spec), keep)); },
        py::arg("m"), py::arg("spec"), py::arg("keep"));
  m.def("partial_transpose",
        [](const CArray& a, const std::vector<std::pair<std::string, std::size_t>>& spec,
           const std::vector<std::string>& subset) {
          return to_array(partial_transpose(to_cmatrix(a), to_spec(spec), subset));
        },
        py::arg("m"), py::arg("spec"), py::arg("subset"));
  m.def("pearson", [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); });

  // pdm
  m.def("temporal_correlation_pair",
        [](const CArray& rho, const std::vector<CArray>& kraus, int i, int j) {
          return temporal_correlation_pair(to_cmatrix(rho), Channel{to_list(kraus)}, i, j);
        },
        py::arg("rho"), py::arg("kraus"), py::arg("i"), py::arg("j"));
  m.def("pdm_bipartite_channel",
        [](const CArray& rho, const std::vector<CArray>& kraus) {
          return to_array(pdm_bipartite_channel(to_cmatrix(rho), Channel{to_list(kraus)}).matrix);
        },
        py::arg("rho"), py::arg("kraus"));
  m.def("pdm_from_correlations",
        [](const std::map<std::string, double>& corr) {
          CorrelationMap c;
          std::size_t n = 0;
          for (const auto& [k, v] : corr) {
            c[parse_pauli(k)] = v;
            n = k.size();
          }
          return to_array(pdm_from_correlations(n, c).matrix);
        },
        py::arg("correlations"), "Keys are Pauli strings such as 'IZ'.");
  m.def("tripartite_loop_correlation",
        [](const CArray& rho, const CArray& u, int i, int j, int k) {
          return tripartite_loop_correlation(to_cmatrix(rho), to_cmatrix(u), i, j, k);
        });
  m.def("postselected_correlation",
        [](const CArray& rho, const std::vector<CArray>& kraus, int i, int j, const CArray& eta) {
          return postselected_correlation(to_cmatrix(rho), Channel{to_list(kraus)}, i, j, to_cmatrix(eta));
        });

  // procmat
  m.def("choi", [](const std::vector<CArray>& kraus) { return to_array(choi(to_list(kraus))); }, py::arg("kraus"));
  m.def("choi_apply", [](const CArray& c, const CArray& rho) { return to_array(choi_apply(to_cmatrix(c), to_cmatrix(rho))); });
  m.def("validate_process_matrix",
        [](const CArray& w, const std::vector<std::pair<std::string, std::size_t>>& slots) {
          const ValidityReport r = validate_process_matrix({to_cmatrix(w), to_spec(slots)});
          py::dict d;
          d["psd"] = r.psd;
          d["trace_ok"] = r.trace_ok;
          d["lv_fixed"] = r.lv_fixed;
          d["min_eig"] = r.min_eig;
          d["trace"] = r.trace;
          d["lv_residual"] = r.lv_residual;
          d["valid"] = r.valid();
          return d;
        },
        py::arg("w"), py::arg("slots"));
  m.def("channel_process",
        [](const CArray& rho, const CArray& u) { return to_array(channel_process(to_cmatrix(rho), to_cmatrix(u)).matrix); });
  m.def("pm_pauli_correlation",
        [](const CArray& w, const std::vector<std::pair<std::string, std::size_t>>& slots, int i, int j) {
          return pm_pauli_correlation({to_cmatrix(w), to_spec(slots)}, i, j);
        },
        py::arg("w"), py::arg("slots"), py::arg("i"), py::arg("j"));

  // causal
  m.def("causal_demo",
        [](const std::string& route, const std::string& ops) {
          return report_dict(indefinite_order_demo(parse_route(route), parse_ops(ops)));
        },
        py::arg("route") = "pm", py::arg("ops") = "reprepare");
  m.def("causal_vertex_count", &causal_vertex_count);
  m.def("count_causal_vertices", [](std::size_t ma, std::size_t mb, std::size_t ka, std::size_t kb) {
    return enumerate_causal_vertices(ma, mb, ka, kb).size();
  });
  m.def("is_causal",
        [](py::array_t<double, py::array::c_style | py::array::forcecast> p, double tol) {
          if (p.ndim() != 4) throw DimensionError("expected p[a][b][x][y]");
          CorrelationTable t(p.shape(2), p.shape(3), p.shape(0), p.shape(1));
          std::copy(p.data(), p.data() + p.size(), t.p.begin());
          return is_causal(t, tol);
        },
        py::arg("p"), py::arg("tol") = kCausalTol);

  // histories
  m.def("correlation_from_histories",
        [](const CArray& rho, const std::vector<CArray>& unitaries, const std::vector<std::string>& paulis) {
          std::vector<PauliString> ps;
          for (const auto& s : paulis) ps.push_back(parse_pauli(s));
          return correlation_from_histories(to_cmatrix(rho), to_list(unitaries), ps);
        },
        py::arg("rho"), py::arg("unitaries"), py::arg("paulis"));
  m.def("decoherence_matrix",
        [](const CArray& rho, const std::vector<CArray>& unitaries, const std::vector<std::string>& paulis) {
          std::vector<PauliString> ps;
          for (const auto& s : paulis) ps.push_back(parse_pauli(s));
          return to_array(decoherence_matrix(pauli_history_family(to_cmatrix(rho), to_list(unitaries), ps)));
        },
        py::arg("rho"), py::arg("unitaries"), py::arg("paulis"));

  // games
  m.def("chsh_classical_optimum", &chsh_classical_optimum);
  m.def("chsh_quantum_value",
        [](const CArray& state, const std::array<double, 4>& angles) {
          return chsh_quantum_value(to_cmatrix(state), angles);
        },
        py::arg("state"), py::arg("angles") = chsh_optimal_angles());

  // otoc
  m.def("otoc_direct", [](const CArray& v, const CArray& b, const CArray& u, const CArray& rho) {
    return otoc_direct({to_cmatrix(v), to_cmatrix(b), to_cmatrix(u), to_cmatrix(rho)});
  });
  m.def("otoc_via_pdm", [](const CArray& a, const CArray& b, const CArray& u, const CArray& rho) {
    return otoc_via_pdm(to_cmatrix(a), to_cmatrix(b), to_cmatrix(u), to_cmatrix(rho));
  });
  m.def("thermal_state", [](const CArray& h, double beta) { return to_array(thermal_state(to_cmatrix(h), beta)); });

  // oscillator
  py::class_<OscParams>(m, "OscParams")
      .def(py::init<>())
      .def_readwrite("m", &OscParams::m)
      .def_readwrite("omega", &OscParams::omega)
      .def_readwrite("hbar", &OscParams::hbar)
      .def_readwrite("beta", &OscParams::beta)
      .def_readwrite("n_lattice", &OscParams::n_lattice);
  m.def("lattice_twopoint", &lattice_twopoint, py::arg("params"), py::arg("t1"), py::arg("t2"));
  m.def("closed_form_twopoint",
        [](const OscParams& p, double tau, const std::string& measure) {
          if (measure != "amplitude" && measure != "probability")
            throw ValidationError("measure must be 'amplitude' or 'probability'");
          return closed_form_twopoint(p, tau, measure == "amplitude" ? Measure::AMPLITUDE : Measure::PROBABILITY);
        },
        py::arg("params"), py::arg("tau"), py::arg("measure"));
  m.def("partition_function_closed", &partition_function_closed);

  m.def("verify_all",
        [](std::uint64_t seed, double tol) {
          py::list out;
          for (const auto& r : verify_all(seed, tol)) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["max_error"] = r.max_error;
            d["threshold"] = r.threshold;
            d["cases"] = r.cases;
            out.append(d);
          }
          return out;
        },
        py::arg("seed") = 0, py::arg("tol") = kEquivalenceTol);
}
