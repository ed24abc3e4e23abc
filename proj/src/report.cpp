#include "liecurrent/report.hpp"

namespace liecurrent {

Json to_json(const CheckEntry& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  j["witness"] = c.witness;
  return j;
}

Json to_json(const ManinReport& r) {
  Json j;
  j["case"] = r.case_name;
  j["algebra"] = r.algebra;
  j["window"] = {r.window.min_deg, r.window.max_deg};
  j["safe_window"] = {r.safe_window.min_deg, r.safe_window.max_deg};
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CYBEReport& r, const LieAlgebraData& g) {
  Json j;
  j["is_zero"] = r.is_zero;
  j["witness"] = r.witness;
  j["residual_terms"] = static_cast<int>(r.residual.terms().size());
  (void)g;
  return j;
}

Json to_json(const BDTriple& t) {
  Json j;
  j["gamma1"] = t.gamma1;
  j["gamma2"] = t.gamma2;
  Json tau = Json::object();
  for (size_t i = 0; i < t.gamma1.size(); ++i)
    tau[std::to_string(t.gamma1[i])] = t.tau[i];
  j["tau"] = tau;
  j["v_dim"] = t.v_dim;
  j["s_dim"] = t.s_dim;
  return j;
}

Json to_json(const std::vector<BDTriple>& ts) {
  Json j = Json::array();
  for (const auto& t : ts) j.push_back(to_json(t));
  return j;
}

Json to_json(const DualBasisReport& r) {
  Json j;
  j["biorthonormal"] = r.biorthonormal;
  j["e_entries_match"] = r.e_entries_match;
  j["h_entries_match"] = r.h_entries_match;
  j["h_factor"] = r.h_factor;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(to_json(c));
  return j;
}

Json algebra_to_json(const LieAlgebraData& g) {
  Json j;
  j["type"] = algebra_type_name(g.type);
  j["dim"] = g.dim;
  j["rank"] = g.rank();
  j["basis"] = g.labels;
  Json grades = Json::array();
  for (const auto& gr : g.grades) grades.push_back(gr);
  j["grades"] = grades;
  Json sc = Json::array();
  for (int a = 0; a < g.dim; ++a)
    for (int b = 0; b < g.dim; ++b)
      for (const auto& [k, c] : g.bracket(a, b))
        sc.push_back(Json::array({a, b, k, rat_str(c)}));
  j["structure_constants"] = sc;
  auto gram = [&](const RatMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
      rows.push_back(row);
    }
    return rows;
  };
  j["killing"] = gram(g.killing);
  j["normalized_form"] = gram(g.normalized);
  Json rs;
  rs["positive_roots"] = Json::array();
  for (const auto& r : g.root_system.positive_roots)
    rs["positive_roots"].push_back(r);
  rs["marks"] = g.root_system.marks;
  rs["cartan_matrix"] = g.root_system.cartan_matrix;
  rs["extended_gram"] = gram(g.root_system.extended_gram);
  j["root_system"] = rs;
  return j;
}

LieAlgebraData algebra_from_json(const Json& j) {
  LieAlgebraData g;
  g.type = algebra_type_from_name(j.at("type").get<std::string>());
  g.dim = j.at("dim").get<int>();
  g.labels = j.at("basis").get<std::vector<std::string>>();
  for (const auto& gr : j.at("grades"))
    g.grades.push_back(gr.get<RootVec>());
  g.bracket_table.assign(
      g.dim, std::vector<std::vector<std::pair<int, Rat>>>(g.dim));
  for (const auto& t : j.at("structure_constants"))
    g.bracket_table[t[0].get<int>()][t[1].get<int>()].push_back(
        {t[2].get<int>(), rat_parse(t[3].get<std::string>())});
  auto gram = [&](const Json& rows) {
    RatMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = rat_parse(rows[r][c].get<std::string>());
    return m;
  };
  g.killing = gram(j.at("killing"));
  g.normalized = gram(j.at("normalized_form"));
  const auto& rs = j.at("root_system");
  for (const auto& r : rs.at("positive_roots"))
    g.root_system.positive_roots.push_back(r.get<RootVec>());
  g.root_system.marks = rs.at("marks").get<std::vector<int>>();
  g.root_system.rank =
      static_cast<int>(g.root_system.marks.size()) - 1;
  g.root_system.cartan_matrix =
      rs.at("cartan_matrix").get<std::vector<std::vector<int>>>();
  g.root_system.extended_gram = gram(rs.at("extended_gram"));
  g.root_system.highest_root =
      g.root_system.positive_roots.empty()
          ? RootVec{}
          : g.root_system.positive_roots.back();
  return g;
}

Json rmatrix_to_json(const RationalR& r, const std::string& case_name) {
  Json j;
  j["case"] = case_name;
  j["denom_power"] = r.denom_power;
  auto tensor = [&](const TensorElem& t) {
    Json terms = Json::array();
    for (const auto& [k, poly] : t.terms())
      for (const auto& [e, c] : poly.terms())
        terms.push_back(Json::array({k[0], k[1], e[0], e[1], rat_str(c)}));
    return terms;
  };
  j["numerator"] = tensor(r.numerator);
  j["twist"] = r.twist ? tensor(*r.twist) : Json::array();
  return j;
}

RationalR rmatrix_from_json(const Json& j) {
  auto tensor = [&](const Json& terms) {
    TensorElem t(2);
    for (const auto& term : terms)
      t.add({term[0].get<int>(), term[1].get<int>(), -1},
            MultiPoly::monomial(rat_parse(term[4].get<std::string>()),
                                {term[2].get<int>(), term[3].get<int>(), 0}));
    return t;
  };
  TensorElem num = tensor(j.at("numerator"));
  int m = j.at("denom_power").get<int>();
  TensorElem tw = tensor(j.at("twist"));
  if (tw.is_zero()) return RationalR::make(std::move(num), m);
  return RationalR::make(std::move(num), m, std::move(tw));
}

Json fdata_to_json(const FData& d) {
  Json j;
  Json basis = Json::array();
  for (const auto& v : d.l_basis) {
    Json row = Json::array();
    for (const auto& c : v) row.push_back(rat_str(c));
    basis.push_back(row);
  }
  j["basis"] = basis;
  Json form = Json::array();
  for (int r = 0; r < d.b_form.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < d.b_form.cols(); ++c)
      row.push_back(rat_str(d.b_form.at(r, c)));
    form.push_back(row);
  }
  j["form"] = form;
  return j;
}

FData fdata_from_json(const Json& j, int dim) {
  FData d;
  for (const auto& row : j.at("basis")) {
    GVec v;
    for (const auto& c : row) v.push_back(rat_parse(c.get<std::string>()));
    if (static_cast<int>(v.size()) != dim)
      throw Error("basis vector length mismatch");
    d.l_basis.push_back(std::move(v));
  }
  const auto& form = j.at("form");
  d.b_form = RatMatrix(static_cast<int>(form.size()),
                       static_cast<int>(form.size()));
  for (int r = 0; r < d.b_form.rows(); ++r)
    for (int c = 0; c < d.b_form.cols(); ++c)
      d.b_form.at(r, c) = rat_parse(form[r][c].get<std::string>());
  return d;
}

Json trace_ext_to_json(const TraceExtension& e) {
  Json j;
  j["kind"] = e.kind == TraceExtension::Kind::Finite ? "finite" : "infinite";
  j["n"] = e.n;
  j["depth"] = e.depth;
  Json alpha = Json::array();
  if (e.kind == TraceExtension::Kind::Finite)
    for (int i = e.n - 2; i >= -e.depth; --i)
      alpha.push_back(rat_str(e.alpha_at(i)));
  j["alpha"] = alpha;
  return j;
}

TraceExtension trace_ext_from_json(const Json& j) {
  if (j.at("kind").get<std::string>() == "infinite")
    return TraceExtension::infinite(j.at("depth").get<int>());
  std::vector<Rat> alpha;
  for (const auto& a : j.at("alpha"))
    alpha.push_back(rat_parse(a.get<std::string>()));
  return TraceExtension::finite(j.at("n").get<int>(), alpha,
                                j.at("depth").get<int>());
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace liecurrent
