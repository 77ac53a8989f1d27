#include "jets/serialization.hpp"

#include <stdexcept>

namespace jets {

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back({{"exp", e}, {"num", c.numerator_string()}, {"den", c.denominator_string()}});
  return arr;
}

LaurentPoly laurent_poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& term : j) {
    const Rational c = Rational::from_strings(term.at("num").get<std::string>(), term.at("den").get<std::string>());
    if (c.is_zero()) throw std::invalid_argument("Laurent polynomial JSON stores a zero coefficient");
    const int e = term.at("exp").get<int>();
    if (!p.coeff(e).is_zero()) throw std::invalid_argument("duplicate exponent in Laurent polynomial JSON");
    p.add_term(c, e);
  }
  return p;
}

Json to_json(const LaurentMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

LaurentMatrix laurent_matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) throw std::invalid_argument("matrix JSON row count mismatch");
  std::vector<LaurentPoly> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) throw std::invalid_argument("matrix JSON column count mismatch");
    for (const auto& e : row) flat.push_back(laurent_poly_from_json(e));
  }
  return LaurentMatrix(rows, cols, std::move(flat));
}

Json to_json(const JetSpec& s) { return {{"N", s.N}, {"k", s.k}, {"d", s.d}, {"side", to_string(s.side)}}; }

JetSpec jet_spec_from_json(const Json& j) {
  return JetSpec(j.at("N").get<int>(), j.at("k").get<int>(), j.at("d").get<int>(),
                 parse_side(j.at("side").get<std::string>()));
}

Json to_json(const SplittingType& s) { return {{"twists", s.twists()}, {"notation", s.to_string()}}; }

SplittingType splitting_type_from_json(const Json& j) {
  return SplittingType(j.at("twists").get<std::vector<int>>());
}

Json to_json(const BirkhoffWitness& w) { return {{"U", to_json(w.U)}, {"D", to_json(w.D)}, {"V", to_json(w.V)}}; }

BirkhoffWitness birkhoff_witness_from_json(const Json& j) {
  return BirkhoffWitness{laurent_matrix_from_json(j.at("U")), laurent_matrix_from_json(j.at("D")),
                         laurent_matrix_from_json(j.at("V"))};
}

Json to_json(const WeightModule& m) {
  Json ws = Json::array();
  for (const auto& w : m.weights()) ws.push_back(w.components());
  Json out = {{"N", m.N()}, {"dimension", m.dimension()}, {"weights", std::move(ws)}};
  if (m.N() == 1) out["sl2_labels"] = m.sl2_labels();
  return out;
}

WeightModule weight_module_from_json(const Json& j) {
  const int N = j.at("N").get<int>();
  std::vector<Weight> ws;
  for (const auto& w : j.at("weights")) {
    auto c = w.get<std::vector<int>>();
    if (static_cast<int>(c.size()) != N + 1) throw std::invalid_argument("weight JSON has the wrong length");
    ws.emplace_back(std::move(c));
  }
  return WeightModule(N, std::move(ws));
}

namespace {

const char* kind_name(ModuleExpr::Kind k) {
  switch (k) {
    case ModuleExpr::Kind::SymL: return "SymL";
    case ModuleExpr::Kind::SymV: return "SymV";
    case ModuleExpr::Kind::Tensor: return "Tensor";
    case ModuleExpr::Kind::DirectSum: return "DirectSum";
  }
  return "?";
}

}  // namespace

Json to_json(const ModuleExpr& e) {
  Json out = {{"kind", kind_name(e.kind)}};
  if (e.kind == ModuleExpr::Kind::SymL || e.kind == ModuleExpr::Kind::SymV) {
    out["power"] = e.power;
    out["dual"] = e.dual;
  } else {
    Json ch = Json::array();
    for (const auto& c : e.children) ch.push_back(to_json(c));
    out["children"] = std::move(ch);
  }
  return out;
}

ModuleExpr module_expr_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "SymL") return ModuleExpr::sym_l(j.at("power").get<int>(), j.at("dual").get<bool>());
  if (kind == "SymV") return ModuleExpr::sym_v(j.at("power").get<int>(), j.at("dual").get<bool>());
  std::vector<ModuleExpr> ch;
  for (const auto& c : j.at("children")) ch.push_back(module_expr_from_json(c));
  if (kind == "Tensor") return ModuleExpr::tensor(std::move(ch));
  if (kind == "DirectSum") return ModuleExpr::direct_sum(std::move(ch));
  throw std::invalid_argument("unknown module expression kind '" + kind + "'");
}

Json to_json(const CohomologyTable& t) {
  return {{"N", t.N}, {"sheaf", t.sheaf.to_string()}, {"dims", t.dims}, {"euler_characteristic", t.euler_characteristic()}};
}

CohomologyTable cohomology_table_from_json(const Json& j) {
  CohomologyTable t;
  t.N = j.at("N").get<int>();
  t.sheaf = SheafDescriptor::parse(j.at("sheaf").get<std::string>());
  t.dims = j.at("dims").get<std::vector<std::int64_t>>();
  if (static_cast<int>(t.dims.size()) != t.N + 1) throw std::invalid_argument("cohomology JSON dims length mismatch");
  return t;
}

Json to_json(const FiberReport& r) {
  return {{"spec", to_json(r.spec)},
          {"predicted", to_json(r.predicted)},
          {"predicted_notation", r.predicted.to_string()},
          {"predicted_weights", to_json(r.predicted_weights)},
          {"oracle_weights", to_json(r.oracle_weights)},
          {"expected_dimension", r.expected_dimension},
          {"weights_match", r.weights_match},
          {"dimension_match", r.dimension_match},
          {"match", r.match()}};
}

FiberReport fiber_report_from_json(const Json& j) {
  FiberReport r{jet_spec_from_json(j.at("spec")), module_expr_from_json(j.at("predicted"))};
  r.predicted_weights = weight_module_from_json(j.at("predicted_weights"));
  r.oracle_weights = weight_module_from_json(j.at("oracle_weights"));
  r.expected_dimension = j.at("expected_dimension").get<std::int64_t>();
  r.weights_match = j.at("weights_match").get<bool>();
  r.dimension_match = j.at("dimension_match").get<bool>();
  return r;
}

Json to_json(const VerifyReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    // An array keeps the run order of the checks.
    Json checks = Json::array();
    for (const auto& ch : c.checks) {
      Json entry = {{"name", ch.name}, {"pass", ch.pass}};
      if (!ch.detail.empty()) entry["detail"] = ch.detail;
      checks.push_back(std::move(entry));
    }
    cells.push_back({{"spec", to_json(c.spec)}, {"checks", std::move(checks)}, {"pass", c.pass()}});
  }
  return {{"options",
           {{"kmax", r.options.kmax}, {"dmin", r.options.dmin}, {"dmax", r.options.dmax}, {"Nmax", r.options.Nmax}}},
          {"cells", std::move(cells)},
          {"left_band",
           {{"cells", r.left_band.cells},
            {"match_rank_k_plus_1_form", r.left_band.match_rank_k_plus_1_form},
            {"match_rank_d_plus_k_plus_1_form", r.left_band.match_rank_d_plus_k_plus_1_form},
            {"statement", r.left_band_statement()}}},
          {"summary",
           {{"cells", r.cells.size()},
            {"checks", r.check_count()},
            {"failures", r.failure_count()},
            {"all_pass", r.all_pass()}}}};
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport r;
  const Json& o = j.at("options");
  r.options.kmax = o.at("kmax").get<int>();
  r.options.dmin = o.at("dmin").get<int>();
  r.options.dmax = o.at("dmax").get<int>();
  r.options.Nmax = o.at("Nmax").get<int>();
  for (const auto& c : j.at("cells")) {
    CellResult cell{jet_spec_from_json(c.at("spec")), {}};
    for (const auto& entry : c.at("checks"))
      cell.checks.push_back(
          {entry.at("name").get<std::string>(), entry.at("pass").get<bool>(), entry.value("detail", std::string())});
    r.cells.push_back(std::move(cell));
  }
  const Json& lb = j.at("left_band");
  r.left_band.cells = lb.at("cells").get<int>();
  r.left_band.match_rank_k_plus_1_form = lb.at("match_rank_k_plus_1_form").get<int>();
  r.left_band.match_rank_d_plus_k_plus_1_form = lb.at("match_rank_d_plus_k_plus_1_form").get<int>();
  return r;
}

}  // namespace jets
