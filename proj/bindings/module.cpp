#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liecurrent/bd.hpp"
#include "liecurrent/orders.hpp"
#include "liecurrent/suite.hpp"
#include "liecurrent/trace_ext.hpp"

namespace py = pybind11;
using namespace liecurrent;

namespace {

CaseTag tag_of(const std::string& name, const std::string& m1,
               const std::string& m2) {
  if (name == "A1") return CaseTag::simple(CaseTag::Kind::A1);
  if (name == "A2") return CaseTag::simple(CaseTag::Kind::A2);
  if (name == "A3") return CaseTag::simple(CaseTag::Kind::A3);
  if (name == "B1") return CaseTag::simple(CaseTag::Kind::B1);
  if (name == "B2") return CaseTag::simple(CaseTag::Kind::B2);
  if (name == "C") return CaseTag::simple(CaseTag::Kind::C);
  if (name == "A4") return CaseTag::a4(rat_parse(m1), rat_parse(m2));
  throw Error("unknown case " + name);
}

std::string verify_case_json(const std::string& case_name,
                             const std::string& algebra,
                             const std::string& m1, const std::string& m2,
                             int win_min, int win_max, int depth) {
  CaseTag tag = tag_of(case_name, m1, m2);
  auto g = build_algebra(algebra_type_from_name(algebra));
  Window win{win_min, win_max};
  auto res = run_case_suite(tag, g, win, depth);
  return render_json(suite_report_json(tag, g, win, depth, res));
}

bool cybe_is_zero(const std::string& case_name, const std::string& algebra,
                  const std::string& m1, const std::string& m2) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  if (case_name == "DJ") return cybe_check(build_r_dj(g), g).is_zero;
  return cybe_check(build_r(tag_of(case_name, m1, m2), g), g).is_zero;
}

bool skew_holds(const std::string& case_name, const std::string& algebra,
                const std::string& m1, const std::string& m2) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  if (case_name == "DJ") return skew_check(build_r_dj(g), g).skew;
  return skew_check(build_r(tag_of(case_name, m1, m2), g), g).skew;
}

std::string algebra_json(const std::string& name) {
  return render_json(algebra_to_json(build_algebra(
      algebra_type_from_name(name))));
}

std::string rmatrix_json(const std::string& case_name,
                         const std::string& algebra, const std::string& m1,
                         const std::string& m2) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  if (case_name == "DJ")
    return render_json(rmatrix_to_json(build_r_dj(g), "DJ"));
  CaseTag tag = tag_of(case_name, m1, m2);
  return render_json(rmatrix_to_json(build_r(tag, g), tag.name()));
}

std::string enum_bd_json(const std::string& algebra, int vertex) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  Json j;
  j["algebra"] = algebra_type_name(g.type);
  j["vertex"] = vertex;
  auto triples = enum_bd(g, vertex);
  j["count"] = static_cast<int>(triples.size());
  j["triples"] = to_json(triples);
  return render_json(j);
}

std::string classify_json(const std::vector<std::string>& coeffs) {
  MultiPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    p += MultiPoly::monomial(rat_parse(coeffs[i]),
                             {static_cast<int>(i), 0, 0});
  auto cls = classify_a_poly(p);
  Json j;
  switch (cls.kind) {
    case CaseTag::Kind::A1: j["class"] = "A1"; break;
    case CaseTag::Kind::A2: j["class"] = "A2"; break;
    case CaseTag::Kind::A3: j["class"] = "A3"; break;
    default: j["class"] = "A4"; break;
  }
  if (cls.normalizing_c) j["normalizing_c"] = rat_str(*cls.normalizing_c);
  if (cls.j) j["j"] = rat_str(*cls.j);
  return render_json(j);
}

std::string normalize_json(int n, const std::vector<std::string>& alpha,
                           int order) {
  std::vector<Rat> a;
  for (const auto& s : alpha) a.push_back(rat_parse(s));
  auto ext = TraceExtension::finite(n, a, std::max(order + 2, 8));
  auto res = normalize_automorphism(ext, order);
  Json j;
  j["n"] = n;
  j["order"] = order;
  Json eta = Json::array();
  for (const auto& c : res.eta) eta.push_back(rat_str(c));
  j["eta"] = eta;
  j["verified"] = res.verified;
  return render_json(j);
}

std::string order_perp_json(const std::string& algebra, int vertex,
                            int win_min, int win_max) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  auto rep = order_perp_check(order_vertex_spec(g, vertex), g,
                              {win_min, win_max});
  Json j;
  j["algebra"] = algebra_type_name(g.type);
  j["vertex"] = vertex;
  j["x2_identity"] = rep.x2_identity;
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) j["checks"].push_back(to_json(c));
  j["pass"] = rep.all_pass();
  return render_json(j);
}

std::string verify_fdata_json(const std::string& fdata_json,
                              const std::string& algebra, int vertex) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  auto d = fdata_from_json(Json::parse(fdata_json), g.dim);
  auto rep = verify_f_data(d, g, vertex);
  Json j;
  j["applicable"] = rep.applicable;
  j["note"] = rep.note;
  j["checks"] = Json::array();
  for (const auto& c : rep.checks) j["checks"].push_back(to_json(c));
  j["pass"] = rep.all_pass();
  return render_json(j);
}

}  // namespace

PYBIND11_MODULE(_liecurrent, m) {
  m.doc() = "exact verification of bialgebra structures on current algebras";
  m.def("verify_case_json", &verify_case_json, py::arg("case"),
        py::arg("algebra") = "sl2", py::arg("m1") = "", py::arg("m2") = "",
        py::arg("win_min") = -10, py::arg("win_max") = 6,
        py::arg("depth") = 4);
  m.def("cybe_is_zero", &cybe_is_zero, py::arg("case"),
        py::arg("algebra") = "sl2", py::arg("m1") = "", py::arg("m2") = "");
  m.def("skew_holds", &skew_holds, py::arg("case"),
        py::arg("algebra") = "sl2", py::arg("m1") = "", py::arg("m2") = "");
  m.def("algebra_json", &algebra_json, py::arg("name"));
  m.def("rmatrix_json", &rmatrix_json, py::arg("case"),
        py::arg("algebra") = "sl2", py::arg("m1") = "", py::arg("m2") = "");
  m.def("enum_bd_json", &enum_bd_json, py::arg("algebra"), py::arg("vertex"));
  m.def("classify_json", &classify_json, py::arg("coeffs"));
  m.def("normalize_json", &normalize_json, py::arg("n"), py::arg("alpha"),
        py::arg("order") = 6);
  m.def("order_perp_json", &order_perp_json, py::arg("algebra"),
        py::arg("vertex"), py::arg("win_min") = -8, py::arg("win_max") = 4);
  m.def("verify_fdata_json", &verify_fdata_json, py::arg("fdata"),
        py::arg("algebra"), py::arg("vertex"));
  m.attr("__version__") = "1.0.0";
}
