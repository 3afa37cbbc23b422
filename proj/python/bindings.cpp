#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rbf/bounds.hpp"
#include "rbf/constants.hpp"
#include "rbf/dist.hpp"
#include "rbf/moments.hpp"
#include "rbf/verify.hpp"

namespace py = pybind11;
using namespace rbf;

namespace {

ClassKind parse_class(const std::string& name) {
  if (name == "M1") return ClassKind::M1;
  if (name == "M2") return ClassKind::M2;
  throw std::invalid_argument("class must be 'M1' or 'M2'");
}

FormKind parse_form(const std::string& name) {
  if (name == "ordinary") return FormKind::ordinary;
  if (name == "decoupled") return FormKind::decoupled;
  throw std::invalid_argument("form must be 'ordinary' or 'decoupled'");
}

WhichConstant parse_which(const std::string& name) {
  if (name == "B4") return WhichConstant::B4;
  if (name == "B5") return WhichConstant::B5;
  if (name == "B6") return WhichConstant::B6;
  if (name == "B7") return WhichConstant::B7;
  throw std::invalid_argument("constant must be one of B4, B5, B6, B7");
}

std::vector<MomentProfile> make_profiles(const std::vector<double>& a,
                                         const std::vector<double>& b,
                                         double t, const std::string& cls) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("a and b must have the same length");
  }
  const ClassKind kind = parse_class(cls);
  std::vector<MomentProfile> profiles;
  profiles.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    profiles.emplace_back(a[i], b[i], t, kind);
  }
  return profiles;
}

py::dict report_dict(const BoundReport& report) {
  py::dict out;
  out["value"] = report.value;
  out["regime"] = regime_name(report.regime);
  out["product_term"] = report.terms.product_term;
  out["cross_terms"] = report.terms.cross_terms;
  out["chaos_term"] = report.terms.chaos_term;
  return out;
}

py::dict constant_dict(const ConstantReport& report) {
  py::dict out;
  out["which"] = which_name(report.which);
  out["t"] = report.t;
  out["n"] = report.n;
  out["literal"] = report.literal_value;
  out["derived"] = report.derived_value;
  out["relative_gap"] = report.relative_gap;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact moments and extremal bounds for symmetric bilinear forms";

  py::register_exception<FeasibilityError>(m, "FeasibilityError",
                                           PyExc_ValueError);
  py::register_exception<SamplingError>(m, "SamplingError",
                                        PyExc_RuntimeError);

  py::class_<SymmetricAtomDist>(m, "SymmetricAtomDist")
      .def(py::init([](double zero_mass,
                       const std::vector<std::pair<double, double>>& atoms) {
             std::vector<Atom> list;
             list.reserve(atoms.size());
             for (const auto& [magnitude, half_prob] : atoms) {
               list.push_back({magnitude, half_prob});
             }
             return SymmetricAtomDist(zero_mass, list);
           }),
           py::arg("zero_mass"), py::arg("atoms"))
      .def_property_readonly("zero_mass", &SymmetricAtomDist::zero_mass)
      .def_property_readonly(
          "atoms",
          [](const SymmetricAtomDist& dist) {
            std::vector<std::pair<double, double>> out;
            for (const auto& atom : dist.atoms()) {
              out.emplace_back(atom.magnitude, atom.half_prob);
            }
            return out;
          })
      .def("second_moment", &SymmetricAtomDist::second_moment)
      .def("abs_moment", &SymmetricAtomDist::abs_moment, py::arg("t"))
      .def("support_size", &SymmetricAtomDist::support_size)
      .def("__repr__", [](const SymmetricAtomDist& dist) {
        return "<SymmetricAtomDist with " +
               std::to_string(dist.support_size()) + " outcomes>";
      });

  m.def("make_extremal", &make_extremal, py::arg("a"), py::arg("b"),
        py::arg("t"),
        "Three-point law with second moment a^2 and t-th absolute moment b");
  m.def("make_rademacher", &make_rademacher, py::arg("scale") = 1.0);
  m.def(
      "make_approx",
      [](double a, double b, double t, int m) {
        return make_approx(a, b, t, m).first;
      },
      py::arg("a"), py::arg("b"), py::arg("t"), py::arg("m"),
      "m-th member of the approximating sequence for the extremal law");
  m.def(
      "sample_member",
      [](double a, double b, double t, const std::string& cls,
         int magnitude_count, std::uint64_t seed) {
        const MomentProfile profile(a, b, t, parse_class(cls));
        return sample_member(profile, magnitude_count, seed);
      },
      py::arg("a"), py::arg("b"), py::arg("t"), py::arg("cls"),
      py::arg("magnitude_count") = 2, py::arg("seed") = 1,
      "Random distribution from the moment class with the given targets");
  m.def(
      "moments",
      [](const SymmetricAtomDist& dist, double t) {
        const auto [second, t_abs] = moments(dist, t);
        return py::make_tuple(second, t_abs);
      },
      py::arg("dist"), py::arg("t"),
      "Pair (second moment, t-th absolute moment)");

  m.def(
      "moment_bilinear",
      [](const std::string& form, double t,
         const std::vector<SymmetricAtomDist>& x,
         const std::vector<SymmetricAtomDist>& y) {
        FormSpec spec;
        spec.kind = parse_form(form);
        spec.t = t;
        spec.x = x;
        spec.y = y;
        return moment_bilinear(spec);
      },
      py::arg("form"), py::arg("t"), py::arg("x"),
      py::arg("y") = std::vector<SymmetricAtomDist>{},
      "Exact t-th absolute moment of the bilinear form by enumeration");
  m.def(
      "mc_moment_bilinear",
      [](const std::string& form, double t,
         const std::vector<SymmetricAtomDist>& x,
         const std::vector<SymmetricAtomDist>& y, long samples,
         std::uint64_t seed) {
        FormSpec spec;
        spec.kind = parse_form(form);
        spec.t = t;
        spec.x = x;
        spec.y = y;
        const McEstimate est = mc_moment_bilinear(spec, samples, seed);
        return py::make_tuple(est.estimate, est.std_error);
      },
      py::arg("form"), py::arg("t"), py::arg("x"),
      py::arg("y") = std::vector<SymmetricAtomDist>{},
      py::arg("samples") = 100000, py::arg("seed") = 1,
      "Monte Carlo estimate (estimate, standard error)");

  m.def("rademacher_sum_moment", &rademacher_sum_moment, py::arg("n"),
        py::arg("t"));
  m.def("rademacher_chaos_ordinary", &rademacher_chaos_ordinary, py::arg("n"),
        py::arg("t"));
  m.def("rademacher_chaos_decoupled", &rademacher_chaos_decoupled,
        py::arg("n"), py::arg("t"));

  m.def(
      "sup_bound",
      [](const std::string& form, const std::vector<double>& a,
         const std::vector<double>& b, double t, const std::string& cls) {
        const auto profiles = make_profiles(a, b, t, cls);
        const BoundReport report =
            parse_form(form) == FormKind::ordinary
                ? sup_ordinary(profiles, t)
                : sup_decoupled(profiles, profiles, t);
        return report_dict(report);
      },
      py::arg("form"), py::arg("a"), py::arg("b"), py::arg("t"),
      py::arg("cls") = "M1",
      "Supremum of the t-th form moment over the moment class");
  m.def(
      "inf_bound",
      [](const std::string& form, const std::vector<double>& a,
         const std::vector<double>& b, double t, const std::string& cls) {
        const auto profiles = make_profiles(a, b, t, cls);
        const BoundReport report =
            parse_form(form) == FormKind::ordinary
                ? inf_ordinary(profiles, t)
                : inf_decoupled(profiles, profiles, t);
        return report_dict(report);
      },
      py::arg("form"), py::arg("a"), py::arg("b"), py::arg("t"),
      py::arg("cls") = "M1",
      "Infimum of the t-th form moment over the moment class");
  m.def(
      "sup_bound_decoupled",
      [](const std::vector<double>& ax, const std::vector<double>& bx,
         const std::vector<double>& ay, const std::vector<double>& by,
         double t, const std::string& cls) {
        return report_dict(sup_decoupled(make_profiles(ax, bx, t, cls),
                                         make_profiles(ay, by, t, cls), t));
      },
      py::arg("ax"), py::arg("bx"), py::arg("ay"), py::arg("by"), py::arg("t"),
      py::arg("cls") = "M1",
      "Decoupled supremum with separate profiles for the two sides");

  m.def(
      "best_constant",
      [](const std::string& which, double t, int n) {
        return constant_dict(best_constant({parse_which(which), t, n}));
      },
      py::arg("which"), py::arg("t"), py::arg("n"),
      "Best constant report: literal and derived values plus their gap");

  m.def(
      "check_convergence",
      [](double a, double b, double t, int n,
         const std::vector<int>& m_schedule, double threshold) {
        const ConvergenceReport report =
            check_convergence(a, b, t, n, m_schedule, threshold);
        py::dict out;
        out["bound"] = report.bound;
        out["passed"] = report.passed;
        std::vector<py::dict> rows;
        for (const auto& row : report.rows) {
          py::dict r;
          r["m"] = row.m;
          r["achieved"] = row.achieved;
          r["gap"] = row.gap;
          rows.push_back(r);
        }
        out["rows"] = rows;
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("t"), py::arg("n"),
      py::arg("m_schedule") = std::vector<int>{10, 100, 1000, 10000},
      py::arg("threshold") = 1e-2,
      "Approximating-sequence convergence check for the ordinary supremum");
}
