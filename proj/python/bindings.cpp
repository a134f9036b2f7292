#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "locred/certificate.hpp"
#include "locred/cli.hpp"
#include "locred/construct.hpp"
#include "locred/cyclotomic.hpp"
#include "locred/error.hpp"
#include "locred/ffcase.hpp"
#include "locred/groups.hpp"
#include "locred/padic.hpp"
#include "locred/ratfactor.hpp"

namespace py = pybind11;
using namespace locred;

namespace {

// Python ints cross the boundary as decimal text so no size is lost.
Integer to_integer(const py::handle& h) { return parse_integer(py::str(h).cast<std::string>()); }

py::int_ to_py(const Integer& a) { return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(a).c_str(), nullptr, 10)); }

IntPolynomial to_poly(const py::sequence& coeffs) {
  std::vector<Integer> c;
  for (const auto& x : coeffs) c.push_back(to_integer(x));
  return IntPolynomial(std::move(c));
}

py::list from_poly(const IntPolynomial& f) {
  py::list out;
  for (const auto& c : f.coefficients()) out.append(to_py(c));
  return out;
}

py::dict scan_dict(const ScanRecord& s) {
  py::dict d;
  d["bound"] = s.bound;
  d["primes"] = s.primes;
  d["irreducible_reductions"] = s.irreducible_primes;
  d["histogram"] = s.histogram;
  d["digest"] = s.digest;
  return d;
}

}  // namespace

PYBIND11_MODULE(_locred, m) {
  m.doc() = "Irreducible polynomials that are reducible locally everywhere";

  py::register_exception<Error>(m, "LocredError", PyExc_ValueError);

  m.def("resultant", [](const py::sequence& f, const py::sequence& g) { return to_py(resultant(to_poly(f), to_poly(g))); });
  m.def("discriminant", [](const py::sequence& f) { return to_py(discriminant(to_poly(f))); });

  m.def(
      "factor",
      [](const py::sequence& f, std::uint64_t seed) {
        const auto z = z_factor(to_poly(f), seed);
        py::list factors;
        for (const auto& x : z.factors) factors.append(py::make_tuple(from_poly(x.factor), x.multiplicity));
        return py::make_tuple(to_py(z.unit_content), factors);
      },
      py::arg("coeffs"), py::arg("seed") = 0,
      "Factor over Q; returns (content, [(coeffs, multiplicity), ...]), constant term first.");
  m.def("is_irreducible", [](const py::sequence& f) { return z_irreducible(to_poly(f)); });

  m.def(
      "factor_mod_p",
      [](const py::sequence& f, std::uint64_t p, std::uint64_t seed) {
        const auto k = fq_context(p, 1);
        py::list out;
        for (const auto& x : fq_poly_factor(FqPoly::from_int_poly(k, to_poly(f)), seed)) {
          out.append(py::make_tuple(x.factor.coefficients(), x.multiplicity));
        }
        return out;
      },
      py::arg("coeffs"), py::arg("p"), py::arg("seed") = 0);

  m.def("local_certificate", [](const py::sequence& f, std::uint64_t p) {
    const auto v = qp_certificate(to_poly(f), p);
    py::dict d;
    d["status"] = std::string(to_string(v.status));
    d["witness"] = std::string(to_string(v.witness.kind));
    d["description"] = v.describe();
    return d;
  });

  m.def(
      "scan", [](const py::sequence& f, std::uint64_t bound, std::uint64_t seed) { return scan_dict(scan(to_poly(f), bound, seed)); },
      py::arg("coeffs"), py::arg("bound") = 1000, py::arg("seed") = 0);

  m.def("period_minpoly", [](std::uint64_t ell, std::uint64_t d) { return from_poly(period_minpoly(ell, d).minpoly); });
  m.def("find_r", &find_r, py::arg("ell"), py::arg("q"), py::arg("bound") = kDefaultRSearchBound);

  m.def(
      "construct",
      [](std::uint64_t degree, const std::string& mode, std::uint64_t r_bound, std::uint64_t scan_bound, std::uint64_t seed) {
        ConstructOptions opts{r_bound, scan_bound, seed};
        if (mode != "modp" && mode != "padic") throw Error(ErrorCode::InvalidArgument, "mode must be modp or padic");
        return certificate_to_json(mode == "modp" ? construct_modp(degree, opts) : construct_padic(degree, opts));
      },
      py::arg("degree"), py::arg("mode") = "padic", py::arg("r_bound") = 1000000, py::arg("scan_bound") = 1000,
      py::arg("seed") = 0, "Certificate JSON text.");
  m.def(
      "verify",
      [](const std::string& cert_json, std::optional<std::uint64_t> scan_bound) {
        return verdict_to_json(verify_certificate(certificate_from_json(cert_json), scan_bound));
      },
      py::arg("cert_json"), py::arg("scan_bound") = py::none(), "Verdict JSON text.");

  m.def("group_check", [](const std::string& descriptor) {
    const auto fam = build_from_descriptor(descriptor);
    const std::uint64_t n = fam.group.order() / fam.designated.size();
    py::dict d;
    d["order"] = fam.group.order();
    d["index"] = n;
    d["lemma1"] = check_lemma1(fam.designated, n).pass;
    const auto l3 = check_lemma3(fam.designated, n);
    d["lemma3"] = l3.pass;
    d["max_product"] = l3.max_product;
    return d;
  });

  m.def(
      "function_field_case",
      [](std::uint64_t p, long e, int dmax) {
        const auto c = build_case3(p, e);
        const auto r = verify_case3(c.poly, c.params, dmax);
        py::dict d;
        d["polynomial"] = c.poly.to_string();
        d["places"] = r.places.size();
        d["pass"] = r.pass;
        return d;
      },
      py::arg("p"), py::arg("e"), py::arg("dmax") = 3);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
