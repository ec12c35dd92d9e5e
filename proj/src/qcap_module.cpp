// Python bindings for the qcap core. Channels cross the boundary as thin
// wrappers around the C++ value type; matrices convert to/from numpy
// complex arrays via pybind11's Eigen support.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcap/capacity.hpp"
#include "qcap/channel_io.hpp"
#include "qcap/sampling.hpp"

namespace py = pybind11;
using namespace qcap;

namespace {

py::dict report_dict(const DegradabilityReport& r) {
  py::dict d;
  d["verdict"] = to_string(r.verdict);
  d["deg_margin"] = r.deg_margin;
  d["antideg_margin"] = r.antideg_margin;
  d["condition_flags"] = r.condition_flags;
  return d;
}

py::dict capacity_dict(const CapacityResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["kind"] = to_string(r.kind);
  if (r.achieved_p) d["achieved_p"] = *r.achieved_p;
  if (r.achieved_input) d["achieved_input"] = *r.achieved_input;
  d["diagnostics"] = r.diagnostics;
  return d;
}

py::dict test_dict(const DegradabilityTest& t) {
  py::dict d;
  d["degradable"] = t.degradable ? py::cast(*t.degradable) : py::none();
  d["margin"] = t.margin;
  d["flags"] = t.flags;
  return d;
}

py::dict stats_dict(const SampleStats& s) {
  py::dict d;
  d["d"] = s.d;
  d["dE"] = s.d_env;
  d["n"] = s.n;
  d["seed"] = s.seed;
  py::dict f;
  f["degradable"] = s.degradable;
  f["anti-degradable"] = s.anti_degradable;
  f["both"] = s.both;
  f["neither"] = s.neither;
  f["inconclusive"] = s.inconclusive;
  d["fractions"] = f;
  d["wilson_halfwidth"] = s.wilson_halfwidth;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degradability and quantum capacity of channels with small "
            "environment";

  py::class_<QuantumChannel>(m, "Channel")
      .def(py::init<std::vector<CMatrix>>(), py::arg("kraus"))
      .def_property_readonly("d_in", &QuantumChannel::d_in)
      .def_property_readonly("d_out", &QuantumChannel::d_out)
      .def_property_readonly("env_dim", &QuantumChannel::env_dim)
      .def_property_readonly("kraus",
                             [](const QuantumChannel& t) { return t.kraus(); })
      .def("tp_residual", &QuantumChannel::tp_residual)
      .def("__repr__", [](const QuantumChannel& t) {
        return "Channel(d_in=" + std::to_string(t.d_in()) +
               ", d_out=" + std::to_string(t.d_out()) +
               ", env_dim=" + std::to_string(t.env_dim()) + ")";
      });

  m.def("identity_channel", &identity_channel, py::arg("d"));
  m.def(
      "from_normal_form",
      [](double alpha, double beta) {
        return from_normal_form({alpha, beta});
      },
      py::arg("alpha"), py::arg("beta"));
  m.def("from_isometry", &from_isometry, py::arg("v"), py::arg("env_dim"));
  m.def("apply", &qcap::apply, py::arg("channel"), py::arg("rho"));
  m.def("conjugate_channel", &conjugate, py::arg("channel"));
  m.def("compose", &compose, py::arg("t1"), py::arg("t2"));
  m.def("convex_mixture", &convex_mixture, py::arg("terms"));
  m.def(
      "jamiolkowski",
      [](const QuantumChannel& t) { return jamiolkowski(t).matrix; },
      py::arg("channel"));
  m.def(
      "transfer_matrix",
      [](const QuantumChannel& t) { return transfer_matrix(t).matrix; },
      py::arg("channel"));
  m.def("kraus_rank", &kraus_rank, py::arg("channel"));
  m.def(
      "validate",
      [](const QuantumChannel& t) {
        const ChannelReport r = validate(t);
        py::dict d;
        d["cp_margin"] = r.cp_margin;
        d["tp_residual"] = r.tp_residual;
        return d;
      },
      py::arg("channel"));

  m.def(
      "is_degradable",
      [](const QuantumChannel& t, double tolerance) {
        return test_dict(is_degradable(t, tolerance));
      },
      py::arg("channel"), py::arg("tolerance") = tol::psd);
  m.def(
      "is_antidegradable",
      [](const QuantumChannel& t, double tolerance) {
        return test_dict(is_antidegradable(t, tolerance));
      },
      py::arg("channel"), py::arg("tolerance") = tol::psd);
  m.def(
      "classify",
      [](const QuantumChannel& t, double tolerance) {
        return report_dict(classify(t, tolerance));
      },
      py::arg("channel"), py::arg("tolerance") = tol::psd);
  m.def(
      "is_degradable_via_h",
      [](const QuantumChannel& t, double tolerance) {
        const HCriterionResult r = is_degradable_via_h(t, tolerance);
        py::dict d;
        d["degradable"] = r.degradable ? py::cast(*r.degradable) : py::none();
        d["margin"] = r.margin;
        d["used_fallback"] = r.used_fallback;
        d["flags"] = r.flags;
        return d;
      },
      py::arg("channel"), py::arg("tolerance") = tol::psd);
  m.def(
      "twist_diagonalize",
      [](const QuantumChannel& t) {
        const TwistedDiagonalForm f = twist_diagonalize(t);
        py::dict d;
        d["x"] = f.x;
        d["y"] = f.y;
        d["diagonals"] = f.diagonals;
        d["psi"] = f.psi;
        d["residual"] = f.residual;
        d["perturbed"] = f.perturbed;
        return d;
      },
      py::arg("channel"));
  m.def(
      "h_matrix",
      [](const QuantumChannel& t) {
        const HMatrix h = h_matrix(twist_diagonalize(t));
        py::dict d;
        d["matrix"] = h.matrix;
        d["min_eigenvalue"] = h.min_eigenvalue;
        return d;
      },
      py::arg("channel"));

  m.def("coherent_information", &coherent_information, py::arg("channel"),
        py::arg("rho"));
  m.def(
      "qubit_capacity",
      [](double alpha, double beta) {
        return capacity_dict(qubit_capacity({alpha, beta}));
      },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "single_letter_capacity",
      [](const QuantumChannel& t, std::uint64_t seed) {
        return capacity_dict(single_letter_capacity(t, seed));
      },
      py::arg("channel"), py::arg("seed") = 0);
  m.def(
      "capacity_or_bounds",
      [](const QuantumChannel& t, std::uint64_t seed) {
        return capacity_dict(capacity_or_bounds(t, seed));
      },
      py::arg("channel"), py::arg("seed") = 0);
  m.def(
      "convex_upper_bound",
      [](const std::vector<std::pair<double, QuantumChannel>>& terms,
         std::uint64_t seed) {
        const ConvexBound b = convex_upper_bound(terms, seed);
        py::dict d;
        d["value"] = b.value;
        d["term_values"] = b.term_values;
        return d;
      },
      py::arg("terms"), py::arg("seed") = 0);
  m.def("bottleneck_bound", &bottleneck_bound, py::arg("q1"), py::arg("q2"));

  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def(
      "partial_trace",
      [](const CMatrix& mat, const std::string& traced, int dim_a, int dim_b) {
        if (traced != "A" && traced != "B") {
          throw std::invalid_argument("partial_trace: traced must be A or B");
        }
        return partial_trace(
            mat, traced == "A" ? Subsystem::A : Subsystem::B, dim_a, dim_b);
      },
      py::arg("matrix"), py::arg("traced"), py::arg("dim_a"),
      py::arg("dim_b"));

  m.def(
      "haar_random_channel",
      [](int d, int d_env, std::uint64_t seed) {
        auto rng = trial_rng(seed, 0);
        return haar_random_channel(d, d_env, rng);
      },
      py::arg("d"), py::arg("d_env"), py::arg("seed"));
  m.def(
      "degradable_fraction",
      [](int d, int d_env, long n, std::uint64_t seed, int threads) {
        return stats_dict(degradable_fraction(d, d_env, n, seed, threads));
      },
      py::arg("d"), py::arg("d_env"), py::arg("n"), py::arg("seed"),
      py::arg("threads") = 1);

  m.def("channel_to_json", &channel_to_json, py::arg("channel"));
  m.def("channel_from_json", &channel_from_json, py::arg("text"));

  m.attr("__version__") = "0.1.0";
}
