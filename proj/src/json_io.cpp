#include "monomatch/json_io.hpp"

#include "monomatch/errors.hpp"

namespace monomatch {

namespace {

Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json claim_json(const ClaimItem& c) {
  Json j;
  j["pass"] = c.pass;
  j["conditional"] = c.conditional;
  if (c.witness_edge)
    j["witness"] = edge_json(*c.witness_edge);
  else if (!c.witness_set.empty())
    j["witness"] = c.witness_set;
  else
    j["witness"] = nullptr;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

Json to_json(const Matching& m) {
  Json j = Json::array();
  for (const Edge& e : m.edges) j.push_back(edge_json(e));
  return j;
}

Json to_json(const TuttePartition& p) {
  Json j;
  j["S"] = p.S;
  j["T"] = p.T;
  j["U"] = p.U;
  j["n"] = p.n;
  j["N"] = p.N;
  j["truncated"] = p.truncated;
  j["fallback"] = p.fallback;
  return j;
}

Json to_json(const HypothesisReport& h) {
  Json j;
  j["N"] = h.N;
  j["n"] = h.n;
  j["eta"] = h.eta.str();
  j["min_degree"] = h.min_degree;
  j["size_ok"] = h.size_ok;
  j["degree_ok"] = h.degree_ok;
  j["vacuous"] = h.vacuous;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["color"] = c.color;
  j["component"] = c.component;
  j["matching"] = to_json(c.matching);
  j["n"] = c.n;
  j["hypotheses"] = c.hypotheses ? to_json(*c.hypotheses) : Json(nullptr);
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["success"] = r.success();
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  Json table = Json::array();
  for (const ComponentRow& row : r.table)
    table.push_back({{"color", row.color}, {"size", row.size}, {"smallest", row.smallest}, {"matching", row.matching_size}});
  j["components"] = std::move(table);
  return j;
}

Json to_json(const GiantTrace& t) {
  Json j;
  j["f1"] = {{"color", t.f1.color}, {"vertices", t.f1.vertices}, {"matching", t.f1_matching}};
  j["partition"] = to_json(t.partition);
  j["W"] = t.W;
  j["m0"] = t.m0;
  j["m1"] = t.m1;
  j["m2"] = t.m2;
  j["hypotheses"] = {{"i", t.hyp_i}, {"ii", t.hyp_ii}, {"iii", t.hyp_iii}, {"iv", t.hyp_iv}};
  j["best"] = {{"color", t.best_color}, {"component", t.best_component}, {"saturation", t.best_saturation}};
  j["claim_met"] = t.claim_met;
  return j;
}

Json to_json(const Match2Outcome& o) {
  Json j;
  j["outcome"] = o.large_matching ? "a" : "b";
  j["only_first"] = o.only_first;
  j["only_second"] = o.only_second;
  if (o.large_matching) {
    j["third_color"] = o.third_color;
    j["component"] = o.component;
    j["matching"] = to_json(o.matching);
    j["route"] = o.route;
  }
  return j;
}

Json to_json(const RegionDecomposition& rd) {
  Json j;
  j["colors"] = Json::array({rd.colors[0], rd.colors[1], rd.colors[2]});
  j["A1"] = rd.A[0];
  j["A2"] = rd.A[1];
  j["A3"] = rd.A[2];
  j["A12"] = rd.A12;
  j["A13"] = rd.A13;
  j["A23"] = rd.A23;
  j["A123"] = rd.A123;
  j["outside"] = rd.outside;
  return j;
}

Json to_json(const ZeroClaimsReport& r) {
  static constexpr const char* kNames[7] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  Json j;
  Json items;
  for (int i = 0; i < 7; ++i) items[kNames[i]] = claim_json(r.items[i]);
  j["items"] = std::move(items);
  j["b_prime"] = r.b_prime;
  j["hypotheses"] = {{"dense", r.dense},
                     {"components_small", r.components_small},
                     {"no_large_matching", r.no_large_matching},
                     {"covers", r.covers},
                     {"hold", r.hypotheses_hold()}};
  return j;
}

Json to_json(const StructuralCertificate& c) {
  Json j;
  j["ell"] = c.ell;
  j["pass"] = c.all_pass();
  Json checks = Json::array();
  for (const StructuralCheck& s : c.checks) {
    Json cj;
    cj["name"] = s.name;
    cj["pass"] = s.pass;
    cj["detail"] = s.detail;
    if (s.witness_edge) cj["witness_edge"] = edge_json(*s.witness_edge);
    if (!s.witness_set.empty()) cj["witness_set"] = s.witness_set;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const CycleSearchResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["color"] = r.color;
  j["cycle"] = r.cycle;
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const ExhaustiveTable& t) {
  Json j;
  j["N"] = t.vertex_count;
  j["exact"] = t.exact;
  j["pruned"] = t.pruned;
  j["colorings"] = t.colorings_examined;
  j["min_objective"] = t.min_objective;
  Json rows = Json::array();
  for (const ExhaustiveRow& row : t.rows) {
    Json rj;
    rj["n"] = row.n;
    rj["holds"] = row.holds;
    rj["witness"] = row.witness ? Json(serialize_colored_graph(*row.witness)) : Json(nullptr);
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

Matching matching_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matching must be an array of [u, v] pairs");
  Matching m;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("matching entry must be [u, v]");
    m.edges.push_back(Edge::normalized(e[0].get<int>(), e[1].get<int>()));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate c;
    const int color = j.at("color").get<int>();
    if (!is_valid_color(color)) throw ParseError("certificate color must be 1, 2 or 3");
    c.color = static_cast<Color>(color);
    c.component = j.at("component").get<VertexSet>();
    c.matching = matching_from_json(j.at("matching"));
    c.n = j.at("n").get<int>();
    if (j.contains("hypotheses") && !j.at("hypotheses").is_null()) {
      const Json& h = j.at("hypotheses");
      HypothesisReport r;
      r.N = h.at("N").get<int>();
      r.n = h.at("n").get<int>();
      r.eta = Rational::parse(h.at("eta").get<std::string>());
      r.min_degree = h.at("min_degree").get<int>();
      r.size_ok = h.at("size_ok").get<bool>();
      r.degree_ok = h.at("degree_ok").get<bool>();
      r.vacuous = h.at("vacuous").get<bool>();
      c.hypotheses = r;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace monomatch
