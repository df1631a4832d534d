#include "qsd/classifier.hpp"
#include "qsd/commands.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qsd;

namespace {

KossakowskiModel model_from_blocks(const Mat& a, const Mat& b) { return assemble(a, b); }

KossakowskiModel model_from_preset(const std::string& preset, double a, double b,
                                   double alpha) {
  ModelConfig cfg;
  cfg.preset = preset;
  return make_model(cfg, a, b, alpha);
}

py::dict report_to_dict(const AsymptoticReport& rep) {
  py::dict d;
  d["case"] = to_string(rep.classification.kind);
  d["n_plus"] = rep.classification.n_plus;
  d["n_minus"] = rep.classification.n_minus;
  d["xi"] = rep.classification.xi;
  d["alpha"] = rep.classification.alpha;
  d["dim_M"] = rep.dim_m;
  d["dim_M_prime"] = rep.dim_m_prime;
  d["dim_Z"] = rep.dim_z;
  d["oscillatory"] = rep.oscillatory;
  if (!rep.oscillatory) {
    d["rho_inf_oracle"] = rep.rho_inf_oracle;
    d["bloch_oracle"] =
        py::make_tuple(rep.bloch_oracle.x, rep.bloch_oracle.y, rep.bloch_oracle.z);
  }
  if (rep.tau) d["tau"] = *rep.tau;
  if (rep.bloch_formula)
    d["bloch_formula"] = py::make_tuple(rep.bloch_formula->x, rep.bloch_formula->y,
                                        rep.bloch_formula->z);
  if (rep.dev_formula) d["deviation_formula"] = *rep.dev_formula;
  if (rep.dev_theorem_2i) d["deviation_theorem_2i"] = *rep.dev_theorem_2i;
  if (rep.dev_theorem_2ii) d["deviation_theorem_2ii"] = *rep.dev_theorem_2ii;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qsd, m) {
  m.doc() = "Asymptotic states of a dissipatively coupled two-qubit semigroup";

  py::class_<KossakowskiModel>(m, "KossakowskiModel")
      .def_readonly("A", &KossakowskiModel::a)
      .def_readonly("B", &KossakowskiModel::b)
      .def_readonly("C", &KossakowskiModel::c)
      .def_readonly("min_eigenvalue", &KossakowskiModel::min_eigenvalue)
      .def_readonly("cp_valid", &KossakowskiModel::cp_valid);

  m.def("model_from_blocks", &model_from_blocks, py::arg("A"), py::arg("B"),
        "Assemble and validate the block Kossakowski matrix");
  m.def("model_from_preset", &model_from_preset, py::arg("preset"), py::arg("a") = 1.0,
        py::arg("b") = 0.5, py::arg("alpha") = 0.5);

  m.def("kron", &kron);
  m.def("partial_trace_ancilla",
        [](const Mat& rho) { return partial_trace_ancilla(rho); });
  m.def("expm", &expm);

  m.def(
      "classify",
      [](const KossakowskiModel& model) {
        const auto diag = diagonalize(model);
        return to_string(classify(model, diag).kind);
      },
      "Structural case of a model (Case1 | Case2 | Case3 | Trivial)");

  m.def(
      "rates",
      [](const KossakowskiModel& model) {
        const auto diag = diagonalize(model);
        std::vector<double> plus(3), minus(3);
        for (int i = 0; i < 3; ++i) {
          plus[i] = diag.lambda_plus(i);
          minus[i] = diag.lambda_minus(i);
        }
        return py::make_tuple(plus, minus);
      },
      "Eigenvalues (lambda+, lambda-) of the structured diagonalization");

  m.def(
      "evolve",
      [](const KossakowskiModel& model, const Mat& rho0, double t) {
        const auto set = lindblad_set(diagonalize(model));
        const auto l = build_superoperator(set);
        return evolve(l, DensityMatrix::from(rho0, default_tols(), 1e2), t).m;
      },
      py::arg("model"), py::arg("rho0"), py::arg("t"));

  m.def(
      "asymptotic_state",
      [](const KossakowskiModel& model, const Mat& rho0) {
        const auto set = lindblad_set(diagonalize(model));
        const auto l = build_superoperator(set);
        return asymptotic_state(l, DensityMatrix::from(rho0, default_tols(), 1e2)).m;
      },
      py::arg("model"), py::arg("rho0"));

  m.def(
      "verify_product",
      [](const KossakowskiModel& model, std::array<double, 3> bt,
         std::array<double, 3> ba) {
        const auto init = InitialState::product(BlochVector{bt[0], bt[1], bt[2]},
                                                BlochVector{ba[0], ba[1], ba[2]});
        return report_to_dict(verify_against_oracle(model, init));
      },
      py::arg("model"), py::arg("bloch_t"), py::arg("bloch_a"));

  m.def(
      "verify_entangled",
      [](const KossakowskiModel& model, double p) {
        return report_to_dict(verify_against_oracle(model, InitialState::entangled(p)));
      },
      py::arg("model"), py::arg("p"));
}
