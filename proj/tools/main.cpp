#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "liecurrent/orders.hpp"
#include "liecurrent/suite.hpp"
#include "liecurrent/trace_ext.hpp"
#include "liecurrent/parallel.hpp"
#include "liecurrent/report.hpp"

using namespace liecurrent;

namespace {

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + path);
    f << text;
  }
};

Window parse_window(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--window expects min:max, e.g. -10:6");
  Window w;
  w.min_deg = std::stoi(s.substr(0, colon));
  w.max_deg = std::stoi(s.substr(colon + 1));
  if (!(w.min_deg < 0 && 0 < w.max_deg))
    throw CLI::ValidationError("window must satisfy min < 0 < max");
  return w;
}

CaseTag parse_case(const std::string& name, const std::string& m1,
                   const std::string& m2) {
  if (name == "A1") return CaseTag::simple(CaseTag::Kind::A1);
  if (name == "A2") return CaseTag::simple(CaseTag::Kind::A2);
  if (name == "A3") return CaseTag::simple(CaseTag::Kind::A3);
  if (name == "B1") return CaseTag::simple(CaseTag::Kind::B1);
  if (name == "B2") return CaseTag::simple(CaseTag::Kind::B2);
  if (name == "C") return CaseTag::simple(CaseTag::Kind::C);
  if (name == "A4") {
    if (m1.empty() || m2.empty())
      throw Error("case A4 needs --m1 and --m2");
    return CaseTag::a4(rat_parse(m1), rat_parse(m2));
  }
  throw Error("unknown case " + name);
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(rat_parse(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::string render_text_checks(const std::vector<CheckEntry>& checks,
                               const std::vector<std::string>& notes) {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "[pass] " : "[FAIL] ";
    out += c.name;
    if (!c.witness.empty()) out += " -- " + c.witness;
    out += "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

int run_verify(const std::string& case_name, const std::string& algebra,
               const std::string& m1, const std::string& m2,
               const std::string& window_str, int depth,
               const std::string& format, const Output& out) {
  CaseTag tag = parse_case(case_name, m1, m2);
  auto g = build_algebra(algebra_type_from_name(algebra));
  Window win = parse_window(window_str);
  SuiteResult res = run_case_suite(tag, g, win, depth);

  if (format == "json") {
    out.write(render_json(suite_report_json(tag, g, win, depth, res)));
  } else {
    std::string text = "verify case " + tag.name() + " on " +
                       algebra_type_name(g.type) + ", window [" +
                       std::to_string(win.min_deg) + ":" +
                       std::to_string(win.max_deg) + "]\n";
    text += render_text_checks(res.checks, res.notes);
    text += res.pass ? "RESULT: PASS\n" : "RESULT: FAIL\n";
    out.write(text);
  }
  return res.pass ? 0 : 1;
}

int run_bd(const std::string& algebra, int vertex, const std::string& format,
           const Output& out) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  auto triples = enum_bd(g, vertex);
  if (format == "json") {
    Json j;
    j["schema"] = "report_v1";
    j["command"] = "bd";
    j["algebra"] = algebra_type_name(g.type);
    j["vertex"] = vertex;
    j["count"] = static_cast<int>(triples.size());
    j["triples"] = to_json(triples);
    out.write(render_json(j));
  } else {
    std::string text = "admissible triples for " +
                       algebra_type_name(g.type) + ", vertex " +
                       std::to_string(vertex) + ": " +
                       std::to_string(triples.size()) + "\n";
    for (const auto& t : triples) {
      text += "  gamma1={";
      for (size_t i = 0; i < t.gamma1.size(); ++i)
        text += (i ? "," : "") + std::to_string(t.gamma1[i]);
      text += "} gamma2={";
      for (size_t i = 0; i < t.gamma2.size(); ++i)
        text += (i ? "," : "") + std::to_string(t.gamma2[i]);
      text += "} tau=(";
      for (size_t i = 0; i < t.tau.size(); ++i)
        text += (i ? "," : "") + std::to_string(t.tau[i]);
      text += ") v_dim=" + std::to_string(t.v_dim) +
              " s_dim=" + std::to_string(t.s_dim) + "\n";
    }
    out.write(text);
  }
  return 0;
}

int run_trace_normalize(int n, const std::string& alpha_csv, int order,
                        const std::string& format, const Output& out) {
  auto alpha = parse_rat_list(alpha_csv);
  auto ext = TraceExtension::finite(n, alpha, std::max(order + 2, 8));
  NormalizeResult res;
  try {
    res = normalize_automorphism(ext, order);
  } catch (const ObstructionNonzero& e) {
    if (format == "json") {
      Json j;
      j["schema"] = "report_v1";
      j["command"] = "trace normalize";
      j["error"] = e.what();
      out.write(render_json(j));
    } else {
      out.write(std::string("obstruction: ") + e.what() + "\n");
    }
    return 1;
  }
  if (format == "json") {
    Json j;
    j["schema"] = "report_v1";
    j["command"] = "trace normalize";
    j["n"] = n;
    j["order"] = order;
    Json eta = Json::array();
    for (const auto& c : res.eta) eta.push_back(rat_str(c));
    j["eta"] = eta;
    j["verified"] = res.verified;
    out.write(render_json(j));
  } else {
    std::string text = "eta:";
    for (const auto& c : res.eta) text += " " + rat_str(c);
    text += "\nresubstitution check: ";
    text += res.verified ? "pass\n" : "fail\n";
    out.write(text);
  }
  return 0;
}

int run_trace_classify(const std::string& poly_csv, const std::string& format,
                       const Output& out) {
  auto coeffs = parse_rat_list(poly_csv);
  MultiPoly p;
  for (size_t i = 0; i < coeffs.size(); ++i)
    p += MultiPoly::monomial(coeffs[i], {static_cast<int>(i), 0, 0});
  auto cls = classify_a_poly(p);
  std::string kind;
  switch (cls.kind) {
    case CaseTag::Kind::A1: kind = "A1"; break;
    case CaseTag::Kind::A2: kind = "A2"; break;
    case CaseTag::Kind::A3: kind = "A3"; break;
    default: kind = "A4"; break;
  }
  if (format == "json") {
    Json j;
    j["schema"] = "report_v1";
    j["command"] = "trace classify";
    j["class"] = kind;
    if (cls.normalizing_c) j["normalizing_c"] = rat_str(*cls.normalizing_c);
    if (cls.j) j["j"] = rat_str(*cls.j);
    out.write(render_json(j));
  } else {
    std::string text = kind;
    if (cls.j) text += ", j=" + rat_str(*cls.j);
    if (cls.normalizing_c) text += ", c=" + rat_str(*cls.normalizing_c);
    out.write(text + "\n");
  }
  return 0;
}

int run_export(const std::string& what, const std::string& algebra,
               const std::string& case_name, const std::string& m1,
               const std::string& m2, const Output& out) {
  auto g = build_algebra(algebra_type_from_name(algebra));
  if (what == "algebra") {
    out.write(render_json(algebra_to_json(g)));
    return 0;
  }
  if (what == "rmatrix") {
    if (case_name.empty()) throw Error("--case is required for rmatrix");
    if (case_name == "DJ") {
      out.write(render_json(rmatrix_to_json(build_r_dj(g), "DJ")));
      return 0;
    }
    CaseTag tag = parse_case(case_name, m1, m2);
    out.write(render_json(rmatrix_to_json(build_r(tag, g), tag.name())));
    return 0;
  }
  throw Error("--what must be algebra or rmatrix");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the catalogued bialgebra structures "
               "on current algebras"};
  app.require_subcommand(1);

  std::string case_name, algebra = "sl2", m1, m2, window = "-10:6";
  std::string format = "text", output_path, what = "algebra", alpha_csv,
              poly_csv;
  int depth = 4, vertex = 1, n = 0, order = 6;

  auto* verify = app.add_subcommand("verify", "run the full case suite");
  verify->add_option("--case", case_name)->required();
  verify->add_option("--algebra", algebra);
  verify->add_option("--m1", m1);
  verify->add_option("--m2", m2);
  verify->add_option("--window", window);
  verify->add_option("--depth", depth);
  verify->add_option("--format", format);
  verify->add_option("--output", output_path);

  auto* bd = app.add_subcommand("bd", "enumerate admissible triples");
  bd->add_option("--algebra", algebra);
  bd->add_option("--vertex", vertex);
  bd->add_option("--format", format);
  bd->add_option("--output", output_path);

  auto* trace = app.add_subcommand("trace", "trace extension tools");
  trace->require_subcommand(1);
  auto* tnorm = trace->add_subcommand("normalize", "normalizing substitution");
  tnorm->add_option("--n", n)->required();
  tnorm->add_option("--alpha", alpha_csv);
  tnorm->add_option("--order", order);
  tnorm->add_option("--format", format);
  tnorm->add_option("--output", output_path);
  auto* tcls = trace->add_subcommand("classify", "classify 1/a(x)");
  tcls->add_option("--poly", poly_csv)->required();
  tcls->add_option("--format", format);
  tcls->add_option("--output", output_path);

  auto* exp = app.add_subcommand("export", "emit algebra or r-matrix JSON");
  exp->add_option("--what", what);
  exp->add_option("--algebra", algebra);
  exp->add_option("--case", case_name);
  exp->add_option("--m1", m1);
  exp->add_option("--m2", m2);
  exp->add_option("--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out{output_path};
  try {
    if (app.got_subcommand(verify))
      return run_verify(case_name, algebra, m1, m2, window, depth, format,
                        out);
    if (app.got_subcommand(bd)) return run_bd(algebra, vertex, format, out);
    if (app.got_subcommand(trace)) {
      if (trace->got_subcommand(tnorm))
        return run_trace_normalize(n, alpha_csv, order, format, out);
      return run_trace_classify(poly_csv, format, out);
    }
    if (app.got_subcommand(exp))
      return run_export(what, algebra, case_name, m1, m2, out);
  } catch (const ObstructionNonzero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
