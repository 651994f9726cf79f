#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semico/cli.hpp"
#include "semico/core.hpp"
#include "semico/format.hpp"
#include "semico/reliability.hpp"
#include "semico/signature.hpp"
#include "semico/transform.hpp"
#include "semico/verify.hpp"

namespace py = pybind11;
using namespace semico;

namespace {

SubsetMask to_mask(const std::vector<int>& components, int n) {
  return SubsetMask::from_components(components, n);
}

py::object to_fraction(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(
      py::str(format_rational(q)));
}

// Accepts int, Fraction, or a string such as "1/2" or "0.25".
Rational from_python(const py::handle& value) {
  if (py::isinstance<py::float_>(value))
    throw InputError("use fractions.Fraction or strings for exact values");
  return cli::parse_rational(py::str(value).cast<std::string>());
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const Rational& q : values) out.append(to_fraction(q));
  return out;
}

std::vector<Rational> exact_vector(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const py::handle& item : seq) out.push_back(from_python(item));
  return out;
}

py::dict counts_dict(const SmallCounts& c) {
  py::dict d;
  d["alpha1"] = c.alpha1;
  d["alpha2"] = c.alpha2;
  d["beta1"] = c.beta1;
  d["beta2"] = c.beta2;
  return d;
}

}  // namespace

PYBIND11_MODULE(_semico, m) {
  m.doc() = "Exact analysis of semicoherent system structure functions";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<CapacityError> capacity_error(m, "CapacityError",
                                                     error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapacityError& e) {
      py::set_error(capacity_error, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("MAX_COMPONENTS") = kMaxComponents;
  m.attr("MAX_FAMILY_SIZE") = kMaxFamilySize;

  py::class_<TruthTable>(m, "TruthTable")
      .def(py::init(&TruthTable::from_bit_string), py::arg("n"),
           py::arg("bits"))
      .def_property_readonly("n", &TruthTable::n)
      .def_property_readonly("bits", &TruthTable::to_bit_string)
      .def("__call__",
           [](const TruthTable& t, const std::vector<int>& components) {
             return t[to_mask(components, t.n())];
           })
      .def(py::self == py::self)
      .def("__repr__", [](const TruthTable& t) {
        return "TruthTable(" + std::to_string(t.n()) + ", '" +
               t.to_bit_string() + "')";
      });

  py::class_<SetFamily>(m, "SetFamily")
      .def(py::init(&SetFamily::from_lists), py::arg("n"), py::arg("sets"))
      .def_property_readonly("n", &SetFamily::n)
      .def_property_readonly("sets",
                             [](const SetFamily& f) {
                               std::vector<std::vector<int>> out;
                               for (SubsetMask s : f) out.push_back(s.components());
                               return out;
                             })
      .def("is_antichain", &SetFamily::is_antichain)
      .def("__len__", &SetFamily::size)
      .def(py::self == py::self)
      .def("__repr__", [](const SetFamily& f) {
        return "SetFamily(" + std::to_string(f.n()) + ", " + f.to_string() +
               ")";
      });

  py::class_<MultilinearForm>(m, "MultilinearForm")
      .def(py::init([](int n, const std::map<std::vector<int>, Coefficient>& terms) {
             MultilinearForm::Terms out;
             for (const auto& [components, c] : terms)
               out.emplace(to_mask(components, n), c);
             return MultilinearForm(n, std::move(out));
           }),
           py::arg("n"), py::arg("terms"))
      .def_property_readonly("n", &MultilinearForm::n)
      .def_property_readonly("terms",
                             [](const MultilinearForm& f) {
                               py::dict out;
                               for (const auto& [mask, c] : f.terms())
                                 out[py::tuple(py::cast(mask.components()))] = c;
                               return out;
                             })
      .def(py::self == py::self)
      .def("__str__", &format_simple_form);

  py::class_<DiagonalPoly>(m, "DiagonalPoly")
      .def(py::init<int, std::vector<Coefficient>>(), py::arg("n"),
           py::arg("coefficients"))
      .def_property_readonly("n", &DiagonalPoly::n)
      .def_property_readonly("coefficients", &DiagonalPoly::coefficients)
      .def(py::self == py::self)
      .def("__str__", &format_diagonal);

  py::class_<SignatureVector>(m, "SignatureVector")
      .def(py::init([](int n, const py::sequence& values) {
             return SignatureVector(n, exact_vector(values));
           }),
           py::arg("n"), py::arg("values"))
      .def_property_readonly("n", &SignatureVector::n)
      .def_property_readonly(
          "values", [](const SignatureVector& s) { return fractions(s.values()); })
      .def(py::self == py::self)
      .def("__str__", &SignatureVector::to_string);

  m.def("validate_semicoherent", [](const TruthTable& t) {
    const ValidationReport r = validate_semicoherent(t);
    std::vector<std::string> problems;
    for (const Violation& v : r.violations) problems.push_back(v.describe());
    return py::make_tuple(r.ok(), problems);
  });
  m.def("zeta_transform", [](const MultilinearForm& f) { return zeta_transform(f); });
  m.def("mobius_transform", &mobius_transform);

  m.def("dualize_table", &dualize_table);
  m.def("minimal_path_sets", &minimal_path_sets);
  m.def("minimal_cut_sets", &minimal_cut_sets);
  m.def("table_from_paths", [](const SetFamily& f) { return table_from_paths(f); });
  m.def("table_from_cuts", [](const SetFamily& f) { return table_from_cuts(f); });
  m.def("simple_form_from_paths",
        [](const SetFamily& f) { return simple_form_from_paths(f); });
  m.def("dual_simple_form_from_cuts",
        [](const SetFamily& f) { return dual_simple_form_from_cuts(f); });
  m.def("paths_from_simple_form", &paths_from_simple_form);
  m.def("cuts_from_paths", [](const SetFamily& f) { return cuts_from_paths(f); });
  m.def("formation_balance",
        [](const SetFamily& f, const std::vector<int>& a) {
          return formation_balance(f, to_mask(a, f.n()));
        });

  m.def("reliability",
        [](const MultilinearForm& f, const std::vector<double>& p) {
          return evaluate_reliability<double>(f, p);
        },
        "Floating-point reliability of a simple form.");
  m.def("reliability_exact",
        [](const MultilinearForm& f, const py::sequence& p) {
          return to_fraction(evaluate_reliability<Rational>(f, exact_vector(p)));
        },
        "Exact reliability; p holds ints, Fractions or strings.");
  m.def("inclusion_exclusion_exact",
        [](const SetFamily& paths, const py::sequence& p) {
          return to_fraction(
              evaluate_inclusion_exclusion<Rational>(paths, exact_vector(p)));
        });
  m.def("diagonal_coefficients", &diagonal_coefficients);
  m.def("diagonal_from_paths",
        [](const SetFamily& f) { return diagonal_from_paths(f); });

  m.def("signature_boland", &signature_boland);
  m.def("signature_from_diagonal", &signature_from_diagonal);
  m.def("signature_from_paths",
        [](const SetFamily& f) { return signature_from_paths(f); });
  m.def("dual_signature", &dual_signature);
  m.def("small_counts_from_signature", [](const SignatureVector& s) {
    return counts_dict(small_counts_from_signature(s));
  });
  m.def("small_counts_from_coefficients",
        [](Coefficient d1, Coefficient d2, Coefficient d1_dual,
           Coefficient d2_dual) {
          return counts_dict(
              small_counts_from_coefficients({d1, d2, d1_dual, d2_dual}));
        },
        py::arg("d1"), py::arg("d2"), py::arg("d1_dual"), py::arg("d2_dual"));

  m.def("verify_system", [](const TruthTable& t) {
    const VerificationReport r = verify_system(t);
    std::vector<std::pair<std::string, bool>> out;
    for (const Check& c : r.checks) out.emplace_back(c.name, c.passed);
    return out;
  });

  m.def("run_command",
        [](const std::string& document, const std::string& command,
           const std::string& format) {
          cli::Options options;
          options.format = format == "json" ? cli::Format::kJson
                                            : cli::Format::kText;
          const cli::Report r =
              cli::run_command(cli::parse_spec(document), command, options);
          return py::make_tuple(r.exit_code, r.output);
        },
        py::arg("document"), py::arg("command"), py::arg("format") = "text");
}
