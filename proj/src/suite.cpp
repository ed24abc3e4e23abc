#include "liecurrent/suite.hpp"

#include "liecurrent/parallel.hpp"

namespace liecurrent {

SuiteResult run_case_suite(const CaseTag& tag, const LieAlgebraData& g,
                           const Window& win, int depth) {
  if (depth < 1) throw Error("depth must be >= 1");
  SuiteResult res;
  ManinReport manin;
  CYBEReport cybe;
  SkewReport skew;
  CheckReport cocycle, degree;
  DualBasisReport duals;
  const bool has_duals = tag.is_a_case();

  auto w = build_W(tag, g);
  auto r = build_r(tag, g);
  parallel_for(5, [&](int step) {
    switch (step) {
      case 0: manin = manin_verify(w, tag, g, win); break;
      case 1: cybe = cybe_check(r, g); break;
      case 2: skew = skew_check(r, g); break;
      case 3:
        cocycle = cocycle_check(r, g, 3);
        degree = degree_bound_check(r, g, 4);
        break;
      case 4:
        if (has_duals) duals = dual_basis_verify(tag, g, depth);
        break;
    }
  });

  for (const auto& c : manin.checks)
    res.checks.push_back({"manin:" + c.name, c.pass, c.witness});
  res.checks.push_back({"cybe", cybe.is_zero, cybe.witness});
  res.checks.push_back({"skew", skew.skew, skew.witness});
  for (const auto& c : cocycle.checks) res.checks.push_back(c);
  for (const auto& c : degree.checks) res.checks.push_back(c);
  if (has_duals) {
    res.checks.push_back({"dual_basis:biorthonormal", duals.biorthonormal, ""});
    std::string e_wit;
    for (const auto& c : duals.checks)
      if (c.name == "printed_e_entries") e_wit = c.witness;
    res.checks.push_back(
        {"dual_basis:e_entries", duals.e_entries_match, e_wit});
    res.notes.push_back("catalogued h-duals " +
                        std::string(duals.h_entries_match ? "match" : "differ") +
                        "; observed pairing factor " + duals.h_factor);
  }
  if (tag.kind == CaseTag::Kind::A4)
    res.notes.push_back(
        "A4 parameters are exact rationals; irrational or complex ratios "
        "are outside this build");
  for (const auto& n : manin.notes) res.notes.push_back(n);
  res.safe_window = manin.safe_window;
  res.pass = true;
  for (const auto& c : res.checks) res.pass = res.pass && c.pass;
  return res;
}

Json suite_report_json(const CaseTag& tag, const LieAlgebraData& g,
                       const Window& win, int depth, const SuiteResult& res) {
  Json j;
  j["schema"] = "report_v1";
  j["command"] = "verify";
  j["case"] = tag.name();
  if (tag.kind == CaseTag::Kind::A4) {
    j["m1"] = rat_str(tag.m1);
    j["m2"] = rat_str(tag.m2);
  }
  j["algebra"] = algebra_type_name(g.type);
  j["window"] = {win.min_deg, win.max_deg};
  j["safe_window"] = {res.safe_window.min_deg, res.safe_window.max_deg};
  j["depth"] = depth;
  j["checks"] = Json::array();
  for (const auto& c : res.checks) j["checks"].push_back(to_json(c));
  j["notes"] = res.notes;
  j["pass"] = res.pass;
  return j;
}

}  // namespace liecurrent
