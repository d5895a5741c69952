#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "utlab/classes.hpp"
#include "utlab/errors.hpp"
#include "utlab/functionals.hpp"
#include "utlab/schwarz.hpp"
#include "utlab/search.hpp"
#include "utlab/series.hpp"

namespace py = pybind11;
using namespace utlab;

namespace {

using Triple = std::tuple<Complex, Complex, Complex>;

TruncatedSeries from_list(const std::vector<Complex>& coeffs) { return TruncatedSeries(coeffs); }

std::vector<Complex> to_list(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

SchurParams to_params(const Triple& g) { return {std::get<0>(g), std::get<1>(g), std::get<2>(g)}; }

Triple from_params(const SchurParams& g) { return {g.gamma0, g.gamma1, g.gamma2}; }

SchwarzCoeffs to_schwarz(const Triple& c) { return {std::get<0>(c), std::get<1>(c), std::get<2>(c)}; }

py::tuple rational(const Rational& r) { return py::make_tuple(r.num(), r.den()); }

SearchProblem make_problem(ClassId cls, FunctionalId fn, int starts, int max_iters, std::uint64_t seed, double tol,
                           unsigned threads) {
  SearchProblem p;
  p.cls = cls;
  p.functional = fn;
  p.starts = starts;
  p.max_iters = max_iters;
  p.seed = seed;
  p.tol = tol;
  p.threads = threads;
  return p;
}

py::dict result_dict(const SearchResult& r) {
  py::dict d;
  d["best_value"] = r.best_value;
  d["argmax"] = from_params(r.argmax);
  d["evaluations"] = r.evaluations;
  d["gap"] = r.gap;
  d["per_start_bests"] = r.per_start_bests;
  d["max_observed"] = r.max_observed;
  d["converged"] = r.converged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coefficient machinery for inverses of univalent functions";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<OrderMismatchError>(m, "OrderMismatchError", PyExc_ValueError);
  py::register_exception<UnsupportedClassError>(m, "UnsupportedClassError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::enum_<ClassId>(m, "ClassId")
      .value("S", ClassId::S)
      .value("R", ClassId::R)
      .value("STARLIKE", ClassId::Starlike)
      .value("CONVEX", ClassId::Convex);

  py::enum_<FunctionalId>(m, "FunctionalId")
      .value("T21", FunctionalId::T21)
      .value("T31", FunctionalId::T31)
      .value("TS22", FunctionalId::TS22)
      .value("TS23", FunctionalId::TS23)
      .value("TS31", FunctionalId::TS31)
      .value("TS32", FunctionalId::TS32);

  // series: lists of coefficients, index k holding the z^k coefficient.
  m.def("multiply", [](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    return to_list(multiply(from_list(a), from_list(b)));
  });
  m.def("compose", [](const std::vector<Complex>& outer, const std::vector<Complex>& inner) {
    return to_list(compose(from_list(outer), from_list(inner)));
  });
  m.def("reverse", [](const std::vector<Complex>& f) { return to_list(reverse(from_list(f))); },
        "Compositional inverse of a normalized series [0, 1, a2, a3, ...].");
  m.def("inverse_coeffs", [](Complex a2, Complex a3, Complex a4) {
    const auto A = inverse_coeffs_closed_form({a2, a3, a4});
    return Triple{A.a2, A.a3, A.a4};
  });

  // schwarz
  m.def("schur_to_coeffs", [](const Triple& g) {
    const auto c = schur_to_coeffs(to_params(g));
    return Triple{c.c1, c.c2, c.c3};
  });
  m.def("sample_params", [](std::uint64_t seed, std::size_t count) {
    std::vector<Triple> out;
    for (const auto& g : sample_params(seed, count)) out.push_back(from_params(g));
    return out;
  });
  m.def("region_member", [](double mu, double nu) -> std::optional<std::string> {
    if (auto r = region_member(mu, nu)) return std::string(to_string(*r));
    return std::nullopt;
  });
  m.def("ps_functional", [](const Triple& c, double mu, double nu) { return ps_functional(to_schwarz(c), mu, nu); });

  // classes
  m.def("forward_map", [](ClassId cls, const Triple& c) {
    const auto a = forward_map(cls, to_schwarz(c));
    return Triple{a.a2, a.a3, a.a4};
  });
  m.def("inverse_map", [](ClassId cls, const Triple& c) {
    const auto A = inverse_map(cls, to_schwarz(c));
    return Triple{A.a2, A.a3, A.a4};
  });
  m.def("extremal_catalog", [] {
    py::list out;
    for (const auto& e : extremal_catalog()) {
      py::dict d;
      d["class"] = e.cls;
      d["label"] = e.label;
      d["formula"] = e.formula;
      d["forward"] = Triple{e.forward.a2, e.forward.a3, e.forward.a4};
      d["inverse"] = Triple{e.inverse.a2, e.inverse.a3, e.inverse.a4};
      py::dict attained;
      for (const auto& [fn, value] : e.attained) attained[py::str(std::string(to_string(fn)))] = rational(value);
      d["attained"] = attained;
      out.append(d);
    }
    return out;
  });

  // functionals
  m.def("t21", &t21);
  m.def("t31", &t31);
  m.def("ts22", &ts22);
  m.def("ts23", &ts23);
  m.def("ts31", &ts31);
  m.def("ts32", &ts32);
  m.def("evaluate", [](FunctionalId fn, Complex a2, Complex a3, Complex a4) { return evaluate(fn, a2, a3, a4); });

  // search
  m.def("exact_bound", [](ClassId cls, FunctionalId fn) -> std::optional<py::tuple> {
    if (auto b = exact_bound(cls, fn)) return rational(*b);
    return std::nullopt;
  });
  m.def("objective", [](ClassId cls, FunctionalId fn, const Triple& g) {
    return objective(make_problem(cls, fn, 1, 1, 0, 1e-10, 1), to_params(g));
  });
  m.def(
      "maximize",
      [](ClassId cls, FunctionalId fn, int starts, int max_iters, std::uint64_t seed, double tol, unsigned threads) {
        const auto problem = make_problem(cls, fn, starts, max_iters, seed, tol, threads);
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = maximize(problem);
        }
        return result_dict(r);
      },
      py::arg("cls"), py::arg("functional"), py::arg("starts") = 64, py::arg("max_iters") = 2000,
      py::arg("seed") = 0, py::arg("tol") = 1e-10, py::arg("threads") = 1);
  m.def(
      "grid_oracle",
      [](ClassId cls, FunctionalId fn, int resolution, unsigned threads) {
        const auto problem = make_problem(cls, fn, 1, 1, 0, 1e-10, threads);
        py::gil_scoped_release release;
        return grid_oracle(problem, resolution);
      },
      py::arg("cls"), py::arg("functional"), py::arg("resolution"), py::arg("threads") = 1);
  m.def(
      "refutation_report",
      [](int starts, int max_iters, std::uint64_t seed, unsigned threads) {
        std::vector<RefutationRow> rows;
        {
          py::gil_scoped_release release;
          rows = refutation_report({starts, max_iters, seed, threads});
        }
        py::list out;
        for (const auto& row : rows) {
          py::dict d;
          d["class"] = row.record.cls;
          d["functional"] = row.record.functional;
          d["prior_claim"] = *row.record.prior_claim;
          d["exact_bound"] = rational(row.record.exact_bound);
          d["numeric_max"] = row.search.best_value;
          d["witness"] = row.witness_label;
          d["witness_value"] = row.witness_value;
          d["verdict"] = std::string(to_string(row.verdict));
          out.append(d);
        }
        return out;
      },
      py::arg("starts") = 64, py::arg("max_iters") = 2000, py::arg("seed") = 0, py::arg("threads") = 1);
}
