/**
 * Copyright 2026 The darboux authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "darboux/error.hpp"
#include "darboux/evaluations.hpp"

namespace py = pybind11;
using namespace darboux;

namespace {

// Rationals cross the boundary as "p/q" strings.
HpgParams params_of(const std::array<std::string, 3> &p) {
  return {Rational::parse(p[0]), Rational::parse(p[1]), Rational::parse(p[2])};
}

std::array<std::string, 3> strs(const HpgParams &p) { return {p.A.str(), p.B.str(), p.C.str()}; }

py::dict report_dict(const VerificationReport &r) {
  py::dict d;
  d["id"] = r.id;
  d["ok"] = r.ok();
  d["order"] = r.order;
  d["mismatch_index"] = r.mismatch_index ? py::object(py::int_(*r.mismatch_index)) : py::object(py::none());
  d["error"] = r.error.empty() ? py::object(py::none()) : py::object(py::str(r.error));
  return d;
}

const Catalog &catalog_for(const std::optional<std::string> &path, Catalog &holder) {
  if (!path) return shipped_catalog();
  holder = Catalog::load(*path);
  return holder;
}

const WeierstrassCurve *curve_or_line(const std::string &key) { return key == "P1" ? nullptr : &curve(key); }

}  // namespace

PYBIND11_MODULE(_darboux, m) {
  m.doc() = "Exact hypergeometric evaluations from Darboux coverings";

  static py::exception<Error> base(m, "DarbouxError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParameterError &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const ParseError &e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error &e) {
      base(e.what());
    }
  });

  m.def("default_catalog_path", &default_catalog_path);
  m.def(
      "catalog_ids",
      [](std::optional<std::string> path) {
        Catalog holder;
        std::vector<std::string> ids;
        for (const auto &r : catalog_for(path, holder).records()) ids.push_back(r.id);
        return ids;
      },
      py::arg("catalog") = py::none());
  m.def(
      "catalog_json",
      [](std::optional<std::string> path) {
        Catalog holder;
        return catalog_for(path, holder).dump();
      },
      py::arg("catalog") = py::none());

  m.def(
      "verify",
      [](const std::string &id, int order, std::optional<std::string> path) {
        Catalog holder;
        const EvaluationRecord &r = catalog_for(path, holder).at(id);
        py::gil_scoped_release release;
        VerificationReport rep = verify(r, order);
        py::gil_scoped_acquire acquire;
        return report_dict(rep);
      },
      py::arg("id"), py::arg("order") = kDefaultVerifyOrder, py::arg("catalog") = py::none());
  m.def(
      "verify_all",
      [](int order, unsigned threads, std::optional<std::string> path) {
        Catalog holder;
        const Catalog &c = catalog_for(path, holder);
        std::vector<VerificationReport> reps;
        {
          py::gil_scoped_release release;
          reps = verify_all(c, order, threads);
        }
        py::list out;
        for (const auto &r : reps) out.append(report_dict(r));
        return out;
      },
      py::arg("order") = kDefaultVerifyOrder, py::arg("threads") = 0, py::arg("catalog") = py::none());

  m.def(
      "derive",
      [](const std::string &base_id, const std::array<std::string, 3> &target, std::optional<std::string> path) {
        Catalog holder;
        const EvaluationRecord &base = catalog_for(path, holder).at(base_id);
        return Catalog({derive_contiguous(params_of(target), base)}).dump();
      },
      py::arg("base"), py::arg("target"), py::arg("catalog") = py::none(),
      "Contiguous record as catalog JSON text.");

  m.def(
      "classify",
      [](const std::array<std::string, 3> &params) {
        const SchwartzType t = classify_schwartz(exponent_diffs(params_of(params)));
        py::dict d;
        d["type"] = type_label(t);
        d["order"] = group_order(t);
        switch (monodromy_group(t)) {
          case MonodromyGroup::Tetrahedral: d["group"] = "tetrahedral"; break;
          case MonodromyGroup::Octahedral: d["group"] = "octahedral"; break;
          case MonodromyGroup::Icosahedral: d["group"] = "icosahedral"; break;
          default: d["group"] = "other"; break;
        }
        return d;
      },
      py::arg("params"));
  m.def(
      "gauss_series",
      [](const std::array<std::string, 3> &params, int order) {
        const QSeries s = gauss_series(params_of(params), order);
        std::vector<std::string> out;
        for (int i = 0; i <= order; ++i) out.push_back(s.coeff(i).str());
        return out;
      },
      py::arg("params"), py::arg("order"), "Coefficients of z^0 .. z^order.");

  m.def(
      "principal_divisor",
      [](const std::string &curve_key, const std::string &function) {
        return principal_divisor(CurveFunction::parse(curve_or_line(curve_key), function)).str();
      },
      py::arg("curve"), py::arg("function"));
  m.def(
      "rhs_divisor", [](const std::string &id) { return radical_divisor(shipped_catalog().at(id).rhs_function()).str(); },
      py::arg("id"));
  m.def(
      "torsion_order",
      [](const std::string &curve_key, const std::string &x, const std::string &xi, int bound) -> std::optional<int> {
        const WeierstrassCurve &e = curve(curve_key);
        const QPoint p = QPoint::affine(Rational::parse(x), Rational::parse(xi));
        if (!on_curve(e, p)) throw ParameterError(p.str() + " is not on " + curve_key);
        return order_of(e, p, bound);
      },
      py::arg("curve"), py::arg("x"), py::arg("xi"), py::arg("bound") = 16);
  m.def("listed_points", [](const std::string &key) {
    std::vector<std::string> out;
    for (const auto &p : listed_points(key)) out.push_back(p.str());
    return out;
  });

  m.def("genus_table", [] {
    py::list rows;
    for (const auto &r : genus_table()) {
      rows.append(py::make_tuple(type_label(r.type), r.klein_degree,
                                 std::vector<int>(r.genus.begin(), r.genus.end())));
    }
    return rows;
  });
  m.def("covering_keys", &covering_keys);
  m.def(
      "branching",
      [](const std::string &key) {
        const Covering &c = covering(key);
        py::dict d;
        for (BaseValue v : kBaseValues) d[py::str(base_value_str(v))] = branching_data(c, v);
        return d;
      },
      py::arg("covering"));
  m.def(
      "check_dramifico",
      [](const std::string &key) {
        const Covering &c = covering(key);
        std::array<Partition, 3> parts;
        for (std::size_t i = 0; i < 3; ++i) parts[i] = branching_data(c, kBaseValues[i]);
        const auto placed = placement(parts);
        py::dict d;
        for (std::size_t i = 0; i < 3; ++i) {
          d[py::str(base_value_str(kBaseValues[i]))] = check_dramifico(c, kBaseValues[i], placed[i]);
        }
        return d;
      },
      py::arg("covering"));
}
