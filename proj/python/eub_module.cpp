#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eub/bounds.hpp"
#include "eub/families.hpp"
#include "eub/io.hpp"
#include "eub/statelab.hpp"

namespace py = pybind11;

namespace {

std::vector<eub::UnitaryMatrix> wrap_unitaries(
    const std::vector<eub::Matrix>& ms) {
  std::vector<eub::UnitaryMatrix> us;
  us.reserve(ms.size());
  for (const eub::Matrix& m : ms) {
    us.emplace_back(m);
  }
  return us;
}

py::dict report_to_dict(const eub::BoundReport& report) {
  py::dict values;
  for (const auto& [id, nats] : report.values) {
    values[py::str(id)] = nats;
  }
  py::dict params;
  for (const auto& [key, value] : report.parameters) {
    params[py::str(key)] = value;
  }
  py::dict out;
  out["values_nats"] = values;
  out["state_entropy"] = report.state_entropy;
  out["parameters"] = params;
  if (!report.rpz_q_label.empty()) {
    out["rpz_q"] = report.rpz_q_label;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_eub, m) {
  m.doc() = "Entropic uncertainty bounds for projective measurements";

  py::register_exception<eub::InvalidInputError>(m, "InvalidInputError",
                                                 PyExc_ValueError);
  py::register_exception<eub::UnitarityError>(m, "UnitarityError",
                                              PyExc_ValueError);
  py::register_exception<eub::NumericError>(m, "NumericError",
                                            PyExc_RuntimeError);

  m.def("fourier_matrix",
        [](int d) { return eub::fourier_matrix(d).matrix(); }, py::arg("d"));
  m.def("o3_matrix", [] { return eub::o3_matrix().matrix(); });
  m.def("haar_random_unitary",
        [](int d, std::uint64_t seed) {
          return eub::haar_random_unitary(d, seed).matrix();
        },
        py::arg("d"), py::arg("seed"));
  m.def("unitary_fractional_power",
        [](const eub::Matrix& u, double beta) {
          return eub::unitary_fractional_power(eub::UnitaryMatrix(u), beta)
              .matrix();
        },
        py::arg("u"), py::arg("beta"));
  m.def("operator_norm", &eub::operator_norm, py::arg("m"));

  m.def("shannon_entropy",
        [](const std::vector<double>& w) {
          return eub::shannon_entropy(eub::WeightVector(w));
        },
        py::arg("w"));
  m.def("renyi_entropy",
        [](const std::vector<double>& w, double alpha) {
          return eub::renyi_entropy(eub::WeightVector(w),
                                    eub::EntropyOrder(alpha));
        },
        py::arg("w"), py::arg("alpha"));
  m.def("tsallis_entropy",
        [](const std::vector<double>& w, double alpha) {
          return eub::tsallis_entropy(eub::WeightVector(w),
                                      eub::EntropyOrder(alpha));
        },
        py::arg("w"), py::arg("alpha"));
  m.def("majorizes",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return eub::majorizes(eub::WeightVector(a), eub::WeightVector(b));
        },
        py::arg("a"), py::arg("b"));

  m.def("overlap_vector",
        [](const eub::Matrix& u) {
          return eub::overlap_vector(eub::UnitaryMatrix(u)).c.entries();
        },
        py::arg("u"));
  m.def("sk_profile",
        [](const eub::Matrix& u) {
          return eub::sk_profile(eub::UnitaryMatrix(u)).values;
        },
        py::arg("u"));
  m.def("direct_sum_vector",
        [](const eub::Matrix& u) {
          return eub::direct_sum_vector(eub::sk_profile(eub::UnitaryMatrix(u)))
              .weights.entries();
        },
        py::arg("u"));
  m.def("multi_profile",
        [](const std::vector<eub::Matrix>& ms) {
          return eub::multi_profile(wrap_unitaries(ms)).values;
        },
        py::arg("unitaries"));

  m.def("bounds",
        [](const eub::Matrix& u) {
          return report_to_dict(eub::pairwise_report(eub::UnitaryMatrix(u)));
        },
        py::arg("u"), "All pairwise bounds in nats for one unitary.");
  m.def("multi_bounds",
        [](const std::vector<eub::Matrix>& ms) {
          return report_to_dict(eub::multi_report(wrap_unitaries(ms)));
        },
        py::arg("unitaries"));

  m.def("von_neumann_entropy",
        [](const eub::Matrix& rho) {
          return eub::von_neumann_entropy(eub::DensityMatrix(rho));
        },
        py::arg("rho"));
  m.def("measurement_probabilities",
        [](const eub::Matrix& rho, const eub::Matrix& u) {
          return eub::measurement_probabilities(eub::DensityMatrix(rho),
                                                eub::UnitaryMatrix(u))
              .entries();
        },
        py::arg("rho"), py::arg("u"));
  m.def("entropy_sum",
        [](const eub::Matrix& rho, const std::vector<eub::Matrix>& ms,
           double alpha) {
          return eub::entropy_sum(eub::DensityMatrix(rho),
                                  eub::MeasurementSet::of(wrap_unitaries(ms)),
                                  eub::EntropyOrder(alpha));
        },
        py::arg("rho"), py::arg("unitaries"), py::arg("alpha") = 1.0);
  m.def("optimal_bound_numeric",
        [](const std::vector<eub::Matrix>& ms, int restarts,
           std::uint64_t seed) {
          return eub::optimal_bound_numeric(
              eub::MeasurementSet::of(wrap_unitaries(ms)), restarts, seed);
        },
        py::arg("unitaries"), py::arg("restarts") = 64, py::arg("seed") = 1);
  m.def("validity_margin",
        [](const std::vector<eub::Matrix>& ms, double bound_nats, int samples,
           std::uint64_t seed, bool with_state_entropy) {
          return eub::validity_margin(
              eub::MeasurementSet::of(wrap_unitaries(ms)), bound_nats, samples,
              seed, with_state_entropy);
        },
        py::arg("unitaries"), py::arg("bound_nats"), py::arg("samples") = 1000,
        py::arg("seed") = 1, py::arg("with_state_entropy") = false);
  m.def("random_pure_state",
        [](int d, std::uint64_t seed) {
          return eub::random_pure_state(d, seed).amplitudes();
        },
        py::arg("d"), py::arg("seed"));

  m.def("build_family",
        [](const std::string& id, double parameter) {
          const auto ms = eub::build_family(
              eub::FamilySpec{eub::family_from_string(id), parameter});
          std::vector<eub::Matrix> out;
          for (const auto& u : ms.unitaries) {
            out.push_back(u.matrix());
          }
          return out;
        },
        py::arg("family"), py::arg("parameter"));
  m.def("sweep_csv",
        [](const std::string& id, double start, double end, int steps,
           bool bits) {
          return eub::sweep_to_csv(
              eub::sweep(eub::family_from_string(id), start, end, steps), bits);
        },
        py::arg("family"), py::arg("start"), py::arg("end"),
        py::arg("steps") = 101, py::arg("bits") = true);
}
