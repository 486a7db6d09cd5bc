#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "asymcont/continuity.hpp"
#include "asymcont/io.hpp"
#include "asymcont/measures.hpp"
#include "asymcont/mixing.hpp"
#include "asymcont/protocols.hpp"
#include "asymcont/random.hpp"
#include "asymcont/states.hpp"

namespace py = pybind11;
using namespace asymcont;

namespace {

py::dict window_dict(const Window& w) {
  py::dict d;
  d["lo"] = w.lo;
  d["hi"] = w.hi;
  return d;
}

py::dict ball_constants_dict(const BallConstants& c) {
  py::dict d;
  d["ed_min_lower"] = c.ed_min_lower;
  d["ec_max_upper"] = c.ec_max_upper;
  d["r"] = c.r;
  d["delta"] = c.delta;
  d["reversible"] = c.reversible;
  d["conservative"] = c.conservative;
  d["ed_lipschitz"] = c.ed_lipschitz;
  d["ec_lipschitz"] = c.ec_lipschitz;
  d["evaluated"] = c.evaluated;
  d["provenance"] = c.provenance;
  return d;
}

EofSearchOptions eof_options(int decomposition_size, int budget, std::uint64_t seed) {
  return EofSearchOptions{decomposition_size, budget, seed};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entanglement measures, mixing bounds and continuity certificates for bipartite states";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<SizeLimitError>(m, "SizeLimitError", error.ptr());
  py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<InvalidState>(m, "InvalidState", error.ptr());
  py::register_exception<UndefinedRate>(m, "UndefinedRate", error.ptr());
  py::register_exception<BallNotCertified>(m, "BallNotCertified", error.ptr());

  m.attr("DEFAULT_SIZE_CAP") = kDefaultSizeCap;

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](int dim_a, int dim_b, const CMatrix& entries) {
             return DensityMatrix(dim_a, dim_b, entries);
           }),
           py::arg("dim_a"), py::arg("dim_b"), py::arg("entries"))
      .def_property_readonly("dim_a", &DensityMatrix::dim_a)
      .def_property_readonly("dim_b", &DensityMatrix::dim_b)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def_property_readonly("matrix", [](const DensityMatrix& r) { return CMatrix(r.matrix()); })
      .def("__repr__", [](const DensityMatrix& r) {
        return "<DensityMatrix " + std::to_string(r.dim_a()) + "x" + std::to_string(r.dim_b()) + ">";
      });

  py::class_<PureState>(m, "PureState")
      .def(py::init<int, int, CVector>(), py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"))
      .def_static("normalized", &PureState::normalized, py::arg("dim_a"), py::arg("dim_b"),
                  py::arg("amplitudes"))
      .def_property_readonly("dim_a", &PureState::dim_a)
      .def_property_readonly("dim_b", &PureState::dim_b)
      .def_property_readonly("amplitudes", [](const PureState& s) { return CVector(s.amplitudes()); })
      .def("projector", &PureState::projector);

  py::class_<MeasureValue>(m, "MeasureValue")
      .def_readonly("value", &MeasureValue::value)
      .def_property_readonly("kind", [](const MeasureValue& v) { return std::string(to_string(v.kind)); })
      .def_readonly("method", &MeasureValue::method)
      .def("__float__", [](const MeasureValue& v) { return v.value; })
      .def("__repr__", [](const MeasureValue& v) {
        return "<MeasureValue " + format_double(v.value) + " " + std::string(to_string(v.kind)) +
               " (" + v.method + ")>";
      });

  // linalg
  m.def("validate", [](int dim_a, int dim_b, const CMatrix& entries) {
    const Diagnostics d = validate(dim_a, dim_b, entries);
    py::dict out;
    out["pass"] = d.pass;
    out["shape_ok"] = d.shape_ok;
    out["hermiticity_defect"] = d.hermiticity_defect;
    out["trace_defect"] = d.trace_defect;
    out["min_eigenvalue"] = d.min_eigenvalue;
    return out;
  });
  m.def("tensor", [](const DensityMatrix& a, const DensityMatrix& b) { return tensor(a, b); });
  m.def("tensor_power", [](const DensityMatrix& r, int n) { return tensor_power(r, n); });
  m.def("partial_transpose", [](const DensityMatrix& r) { return partial_transpose(r); });
  m.def("trace_norm", [](const CMatrix& x) { return trace_norm(x); });
  m.def("trace_distance", [](const DensityMatrix& a, const DensityMatrix& b) { return trace_distance(a, b); });
  m.def("mix", &mix, py::arg("rho"), py::arg("sigma"), py::arg("p"));

  // states
  m.def("phi_plus", [] { return phi_plus().projector(); });
  m.def("maximally_mixed", &maximally_mixed, py::arg("dim_a"), py::arg("dim_b"));
  m.def("werner_state", &werner_state, py::arg("singlet_weight"));
  m.def("isotropic_2x3", &isotropic_2x3, py::arg("weight"));
  m.def("two_qubit_schmidt_state", &two_qubit_schmidt_state, py::arg("x"));
  m.def(
      "random_density",
      [](int dim_a, int dim_b, std::uint64_t seed) {
        Rng rng = make_rng(seed);
        return random_density(dim_a, dim_b, rng);
      },
      py::arg("dim_a"), py::arg("dim_b"), py::arg("seed") = 0);

  // measures
  m.def("is_ppt", [](const DensityMatrix& r) {
    const PptResult res = is_ppt(r);
    return py::make_tuple(res.ppt, res.margin);
  });
  m.def("log_negativity", &log_negativity);
  m.def("concurrence_2x2", &concurrence_2x2);
  m.def("eof_2x2", &eof_2x2);
  m.def("eof_from_concurrence", &eof_from_concurrence);
  m.def("entropy_of_entanglement", &entropy_of_entanglement);
  m.def(
      "eof_upper_general",
      [](const DensityMatrix& r, int decomposition_size, int budget, std::uint64_t seed) {
        return eof_upper_general(r, eof_options(decomposition_size, budget, seed));
      },
      py::arg("rho"), py::arg("decomposition_size") = 0, py::arg("budget") = 200, py::arg("seed") = 0);
  m.def("hashing_yield", [](std::array<double, 4> probs) { return hashing_yield(BellDiagonalProbs(probs)); });
  m.def("twirl_to_bell_diagonal", [](const DensityMatrix& r) { return twirl_to_bell_diagonal(r).values(); });
  m.def("ed_lower", &ed_lower);
  m.def(
      "ec_upper",
      [](const DensityMatrix& r, int decomposition_size, int budget, std::uint64_t seed) {
        return ec_upper(r, eof_options(decomposition_size, budget, seed));
      },
      py::arg("rho"), py::arg("decomposition_size") = 0, py::arg("budget") = 200, py::arg("seed") = 0);

  // mixing
  m.def("default_half_width", &default_half_width);
  m.def(
      "binomial_window",
      [](int n, double p, std::optional<double> half_width) {
        const BinomialWindow w = binomial_window(n, p, half_width);
        py::dict d = window_dict(w.window);
        d["tail_mass"] = w.tail_mass;
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("half_width") = py::none());
  m.def(
      "verify_mixing_bound",
      [](const DensityMatrix& rho, const DensityMatrix& sigma, double p, int n,
         std::optional<double> half_width, std::size_t cap) {
        const MixingCheck c = verify_mixing_bound(make_mixture_spec(rho, sigma, p, n, half_width), cap);
        py::dict d;
        d["trace_distance"] = c.trace_distance;
        d["tail_mass"] = c.tail_mass;
        d["pass"] = c.pass;
        return d;
      },
      py::arg("rho"), py::arg("sigma"), py::arg("p"), py::arg("n"), py::arg("half_width") = py::none(),
      py::arg("cap") = kDefaultSizeCap);
  m.def("tail_mass_scan", [](double p, const std::vector<int>& ns) {
    py::list rows;
    for (const TailRow& r : tail_mass_scan(p, ns)) {
      py::dict d = window_dict(r.window);
      d["n"] = r.n;
      d["tail_mass"] = r.tail_mass;
      d["hoeffding"] = r.hoeffding;
      rows.append(d);
    }
    return rows;
  });

  // protocols
  m.def("concentration_yield", [](const std::vector<double>& lam, long n) {
    return concentration_yield(lam, n);
  });
  m.def("conversion_rate", [](const DensityMatrix& rho, const DensityMatrix& sigma) {
    return conversion_rate(rho, sigma).rate;
  });
  m.def("eta_continuity_scan", [](const DensityMatrix& xi, const std::vector<double>& eps) {
    const EtaScan scan = eta_continuity_scan(xi, eps);
    std::vector<std::pair<double, double>> rows;
    for (const EtaRow& r : scan.rows) rows.emplace_back(r.epsilon, r.yield);
    py::dict d;
    d["rows"] = rows;
    d["lipschitz"] = scan.lipschitz;
    d["max_adjacent_jump"] = scan.max_adjacent_jump;
    return d;
  });
  m.def("catalytic_rate", [](double delta, double ec, double ed) {
    const CatalyticRate c = catalytic_rate(delta, ec, ed);
    py::dict d;
    d["p"] = c.p;
    d["k"] = c.k;
    d["factor"] = c.factor;
    return d;
  });

  // continuity
  m.def("kappa", &kappa, py::arg("p"), py::arg("r"));
  m.def(
      "ball_constants",
      [](const DensityMatrix& center, double epsilon, int samples, std::uint64_t seed,
         int surface_count, bool conservative) {
        const BallSpec spec{center, epsilon, samples, seed, surface_count};
        return ball_constants_dict(ball_constants(spec, Surrogates::defaults(), conservative));
      },
      py::arg("center"), py::arg("epsilon"), py::arg("samples") = 100, py::arg("seed") = 0,
      py::arg("surface_count") = 4, py::arg("conservative") = false);

  // io
  m.def("read_state_file", &read_state_file, py::arg("path"), py::arg("force") = false);
  m.def("write_state_file", &write_state_file, py::arg("path"), py::arg("rho"));
}
