#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signpat/adjacency.hpp"
#include "signpat/census.hpp"
#include "signpat/error.hpp"
#include "signpat/realize.hpp"
#include "signpat/report.hpp"

namespace py = pybind11;
using namespace signpat;

namespace {

std::vector<std::string> pq_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_pq_string(v));
  return out;
}

std::vector<Rational> rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sign patterns of real polynomials and orders of root moduli";

  static py::exception<Error> error(m, "SignpatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("classify", [](const std::string& pattern) {
    std::vector<std::pair<int, std::string>> hits;
    for (const auto& h : find_configurations(parse_pattern(pattern))) {
      hits.emplace_back(h.position, std::string(1, to_char(h.kind)));
    }
    return hits;
  }, py::arg("pattern"), "Positions and kinds of the A-D windows; empty means canonical.");

  m.def("is_canonical", [](const std::string& p) { return is_canonical(parse_pattern(p)); },
        py::arg("pattern"));

  m.def("canonical_order", [](const std::string& p) {
    return canonical_order(parse_pattern(p)).str();
  }, py::arg("pattern"));

  m.def("sign_counts", [](const std::string& p) {
    const SignCounts c = sign_counts(parse_pattern(p));
    return std::make_pair(c.changes, c.preservations);
  }, py::arg("pattern"), "(sign changes, sign preservations)");

  m.def("rigid", [](const std::string& order) -> std::optional<std::string> {
    const RigidVerdict v = classify_rigid(parse_order(order));
    if (!v.rigid) return std::nullopt;
    return v.pattern->str();
  }, py::arg("order"), "The single pattern of a rigid order, else None.");

  m.def("poly_from_roots", [](const std::vector<std::string>& roots) {
    return pq_strings(poly_from_roots(RootSet(rationals(roots))).coeffs());
  }, py::arg("roots"), "Ascending coefficients of the monic polynomial with these roots.");

  m.def("pattern_of_poly", [](const std::vector<std::string>& ascending) {
    return pattern_of_poly(ExactPoly(rationals(ascending))).str();
  }, py::arg("coefficients"));

  m.def("moduli_order", [](const std::vector<std::string>& roots) {
    return moduli_order_of_roots(RootSet(rationals(roots))).str();
  }, py::arg("roots"));

  m.def("realize", [](const std::string& p, const std::string& ratio) {
    return pq_strings(realize_canonical(parse_pattern(p), parse_rational(ratio)).roots());
  }, py::arg("pattern"), py::arg("ratio") = "4");

  m.def("witness", [](const std::string& p, const std::string& order, std::uint64_t budget,
                      std::uint64_t seed) -> std::optional<std::vector<std::string>> {
    const auto found = witness_search({parse_pattern(p), parse_order(order), budget, seed});
    if (!found) return std::nullopt;
    return pq_strings(found->roots());
  }, py::arg("pattern"), py::arg("order"), py::arg("budget") = 100000, py::arg("seed") = 42);

  m.def("orders_json", [](const std::string& p, std::uint64_t budget, std::uint64_t seed) {
    return to_json(realizable_orders(parse_pattern(p), budget, seed)).dump();
  }, py::arg("pattern"), py::arg("budget") = 100000, py::arg("seed") = 42);

  m.def("symbolic_lift", [](const std::string& source) {
    return symbolic_lift(parse_pattern(source)).compact();
  }, py::arg("source"));

  m.def("st_report_json", [](const std::string& source) {
    return to_json(st_report(parse_pattern(source))).dump();
  }, py::arg("source"));

  m.def("verify_proposition", [](int d) { return all_hold(verify_proposition(d)); },
        py::arg("d"));

  m.def("verify_theorem", [](int d, std::uint64_t budget, std::uint64_t seed) {
    return verify_theorem_small(d, budget, seed).passed();
  }, py::arg("d"), py::arg("budget") = 100000, py::arg("seed") = 42);

  m.def("census", [](int d) {
    const CensusRow r = census(d);
    py::dict row;
    row["d"] = r.degree;
    row["total"] = r.total;
    row["canonical"] = r.canonical;
    row["noncanonical"] = r.noncanonical;
    const char* kinds[] = {"A", "B", "C", "D"};
    for (int k = 0; k < 4; ++k) row[kinds[k]] = r.windows[k];
    return row;
  }, py::arg("d"));
}
