#include "truncdet/report_json.hpp"

#include <sstream>

namespace truncdet {

namespace {

OrderedJson index_list(const std::vector<int>& v) {
  OrderedJson a = OrderedJson::array();
  for (int i : v) a.push_back(i);
  return a;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) out.push_back(std::stoi(piece));
  return out;
}

std::string join_indices(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

} // namespace

OrderedJson shape_json(const MatrixShape& shape) {
  return OrderedJson{{"m", shape.m}, {"n", shape.n}, {"r", shape.r}, {"k", shape.k}};
}

OrderedJson ideal_json(const GeneratorSet& gens) {
  OrderedJson j = shape_json(gens.shape);
  j["generator_count"] = gens.gens.size();
  OrderedJson list = OrderedJson::array();
  for (const Generator& g : gens.gens) {
    list.push_back(OrderedJson{{"rows", index_list(g.rows)},
                               {"cols", index_list(g.cols)},
                               {"w", g.w},
                               {"polynomial", g.poly.to_string()}});
  }
  j["generators"] = std::move(list);
  return j;
}

std::string ideal_text(const GeneratorSet& gens) {
  std::string out;
  for (const Generator& g : gens.gens) {
    out += "# rows=" + join_indices(g.rows) + " cols=" + join_indices(g.cols) +
           " w=" + std::to_string(g.w) + "\n";
    out += g.poly.to_string() + "\n";
  }
  return out;
}

GeneratorSet parse_ideal_text(const std::string& text, FieldRef field) {
  GeneratorSet out{MatrixShape{0, 0, 0, 1}, {}};
  std::istringstream in(text);
  std::string line;
  std::vector<int> rows, cols;
  int w = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string field_text;
      rows.clear();
      cols.clear();
      w = -1;
      while (meta >> field_text) {
        const std::size_t eq = field_text.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("malformed metadata line: " + line);
        const std::string key = field_text.substr(0, eq);
        const std::string value = field_text.substr(eq + 1);
        if (key == "rows")
          rows = parse_index_list(value);
        else if (key == "cols")
          cols = parse_index_list(value);
        else if (key == "w")
          w = std::stoi(value);
        else
          throw std::invalid_argument("unknown metadata key '" + key + "' in: " + line);
      }
      continue;
    }
    if (rows.empty() || cols.empty() || w < 0)
      throw std::invalid_argument("polynomial line without a preceding metadata line: " + line);
    out.gens.push_back(Generator{rows, cols, w, Polynomial::parse(line, field)});
    // grow the shape to cover the observed indices
    out.shape.m = std::max(out.shape.m, rows.back());
    out.shape.n = std::max(out.shape.n, cols.back());
    out.shape.r = std::max(out.shape.r, static_cast<int>(rows.size()));
    out.shape.k = std::max(out.shape.k, w + 1);
  }
  return out;
}

OrderedJson gb_report_json(const GBReport& report) {
  OrderedJson j{{"m", report.m}, {"k", report.k}};
  OrderedJson lm = OrderedJson::array();
  for (bool b : report.lm_matches_formula) lm.push_back(b);
  j["lm_matches_formula"] = std::move(lm);
  j["pairwise_coprime"] = report.pairwise_coprime;
  j["lead_terms_squarefree"] = report.lead_terms_squarefree;
  switch (report.spairs_reduce_to_zero) {
    case CheckStatus::Verified: j["spairs_reduce_to_zero"] = true; break;
    case CheckStatus::Failed: j["spairs_reduce_to_zero"] = false; break;
    case CheckStatus::Inconclusive: j["spairs_reduce_to_zero"] = nullptr; break;
  }
  j["status"] = report.verified()      ? "verified"
                : report.inconclusive() ? "inconclusive"
                                        : "failed";
  return j;
}

OrderedJson hilbert_json(int m, int k, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("degree >= 0 required");
  OrderedJson j{{"m", m}, {"k", k}};
  j["degree"] = degree(m, k).get_str();
  OrderedJson fv = OrderedJson::array();
  for (const mpz_class& f : fvector_full(m, k).f) fv.push_back(f.get_str());
  j["fvector"] = std::move(fv);
  OrderedJson table = OrderedJson::array();
  for (int d = 0; d <= max_degree; ++d)
    table.push_back(OrderedJson{{"d", d}, {"value", hilbert_function(m, k, d).get_str()}});
  j["hilbert"] = std::move(table);
  return j;
}

OrderedJson census_json(const ComponentReport& report) {
  OrderedJson j{{"m", report.m}, {"n", report.n}, {"r", report.r}, {"k", report.k}};
  j["variety_codim"] = report.variety_codim;
  j["exactness"] = report.exactness == CountExactness::Exact ? "exact" : "lower_bound";
  j["component_count"] = report.component_count;
  OrderedJson codims = OrderedJson::array();
  for (const Component& c : report.components) codims.push_back(c.codim);
  j["codims"] = std::move(codims);
  OrderedJson list = OrderedJson::array();
  for (const Component& c : report.components)
    list.push_back(OrderedJson{
        {"label", c.label}, {"s", c.s_index}, {"codim", c.codim}, {"description", c.description}});
  j["components"] = std::move(list);
  return j;
}

OrderedJson count_json(const CountResult& result) {
  OrderedJson j = shape_json(result.shape);
  j["q"] = result.q;
  j["count"] = result.count.get_str();
  j["enumerated"] = result.enumerated.get_str();
  j["method"] = result.method == CountMethod::VariableLevel ? "VariableLevel" : "RingLevel";
  return j;
}

OrderedJson point_json(const PointAssignment& pt) {
  OrderedJson j = OrderedJson::object();
  for (const auto& [v, val] : pt.values) j[var_name(v)] = val.to_string();
  return j;
}

OrderedJson separation_json(const SeparationWitness& wit) {
  const MatrixShape& shape = wit.point.shape;
  OrderedJson j{{"kind", "separation"}, {"m", shape.m}, {"n", shape.n}, {"k", shape.k}};
  j["field"] = wit.point.field.name();
  j["s"] = wit.s;
  j["alpha"] = wit.alpha;
  j["w"] = wit.w;
  j["point"] = point_json(wit.point);
  j["membership"] = wit.membership;
  j["ap_nonzero"] = wit.ap_nonzero;
  j["verified"] = wit.membership && wit.ap_nonzero;
  return j;
}

OrderedJson intersection_json(const IntersectionWitness& wit) {
  const MatrixShape& shape = wit.point.shape;
  OrderedJson j{{"kind", "intersection"}, {"m", shape.m}, {"n", shape.n}, {"k", shape.k}};
  j["field"] = wit.point.field.name();
  j["locus_a"] = wit.locus_a;
  j["locus_b"] = wit.locus_b;
  j["point"] = point_json(wit.point);
  j["membership"] = wit.membership;
  j["locus_a_ok"] = wit.locus_a_ok;
  j["locus_b_ok"] = wit.locus_b_ok;
  OrderedJson curve = OrderedJson::array();
  for (const PointAssignment& sample : wit.curve) curve.push_back(point_json(sample));
  j["curve"] = std::move(curve);
  j["verified"] = wit.membership && wit.locus_a_ok && wit.locus_b_ok;
  return j;
}

OrderedJson lift_json(const PointAssignment& base, const PointAssignment& lifted, bool base_member,
                      bool lifted_member) {
  OrderedJson j{{"kind", "lift"}};
  j["field"] = base.field.name();
  j["base_shape"] = shape_json(base.shape);
  j["lifted_shape"] = shape_json(lifted.shape);
  j["base_point"] = point_json(base);
  j["lifted_point"] = point_json(lifted);
  j["base_membership"] = base_member;
  j["lifted_membership"] = lifted_member;
  j["verified"] = base_member == lifted_member;
  return j;
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

} // namespace truncdet
