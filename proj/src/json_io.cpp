#include "rainbow/json_io.hpp"

namespace rainbow {

namespace {

template <class T>
Json or_null(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

}  // namespace

Json to_json(const ColoredPath& p) {
  Json j;
  j["vertices"] = p.vertices;
  j["colors"] = p.colors;
  return j;
}

Json to_json(const ColoredCycle& c) {
  Json j;
  j["vertices"] = c.vertices;
  j["colors"] = c.colors;
  return j;
}

Json to_json(const ExtremalWitness& w) {
  Json j;
  j["kind"] = to_string(w.kind);
  j["partition"] = w.parts;
  j["single_edge"] = w.single_edge ? edge_json(*w.single_edge) : Json(nullptr);
  return j;
}

Json to_json(const std::optional<FailingTriple>& t) {
  if (!t) return nullptr;
  Json j;
  j["x"] = t->x;
  j["y"] = t->y;
  j["k"] = t->k;
  return j;
}

Json to_json(const PanconnectivityCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["m"] = cert.m;
  j["verdict"] = to_string(cert.verdict);
  Json pairs = Json::array();
  for (const auto& p : cert.pairs) {
    Json pj;
    pj["x"] = p.x;
    pj["y"] = p.y;
    pj["distance"] = p.distance ? Json(*p.distance) : Json(nullptr);
    Json w = Json::object();
    for (const auto& [k, path] : p.witnesses) w[std::to_string(k)] = to_json(path);
    pj["witnesses"] = w;
    pairs.push_back(pj);
  }
  j["pairs"] = pairs;
  j["failure"] = to_json(cert.failure);
  j["extremal"] = or_null(cert.extremal);
  j["k_max"] = cert.k_max;
  j["k_capped"] = cert.k_capped;
  j["first_unknown"] = to_json(cert.first_unknown);
  return j;
}

Json to_json(const HamConnectivityResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  Json ws = Json::array();
  for (const auto& p : r.witnesses) ws.push_back(to_json(p));
  j["witnesses"] = ws;
  j["failing_pair"] = r.failing_pair ? edge_json(*r.failing_pair) : Json(nullptr);
  j["first_unknown"] = r.first_unknown ? edge_json(*r.first_unknown) : Json(nullptr);
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j;
  j["case"] = to_string(r.tag);
  j["witness"] = or_null(r.witness);
  j["ham_path"] = or_null(r.ham_path);
  j["search"] = to_string(r.search_outcome);
  j["outside_hypothesis"] = r.outside_hypothesis;
  return j;
}

Json to_json(const TheoremCheck& t) {
  Json j;
  j["verdict"] = to_string(t.verdict);
  j["branch"] = t.branch;
  j["certificate"] = to_json(t.certificate);
  j["extremal"] = or_null(t.extremal);
  j["recognition_trace"] = t.recognition_trace;
  return j;
}

Json to_json(const BranchTrace& t) {
  Json j;
  j["lemma"] = t.lemma;
  j["case"] = t.case_name;
  j["subcase"] = t.subcase;
  Json sets = Json::object();
  for (const auto& [name, values] : t.sets) sets[name] = values;
  j["sets"] = sets;
  j["k"] = t.k;
  j["path"] = or_null(t.path);
  if (!t.notes.empty()) j["notes"] = t.notes;
  return j;
}

Json to_json(const ReplayResult& r, bool with_traces) {
  Json j;
  j["x"] = r.x;
  j["y"] = r.y;
  j["verdict"] = to_string(r.verdict);
  if (r.frame) {
    j["frame"] = {{"z", r.frame->z}, {"missing", r.frame->missing}};
  } else {
    j["frame"] = nullptr;
  }
  Json paths = Json::object();
  for (const auto& [k, p] : r.paths) paths[std::to_string(k)] = to_json(p);
  j["paths"] = paths;
  Json ds = Json::array();
  for (const auto& d : r.discrepancies) {
    ds.push_back({{"k", d.k}, {"branch", d.branch}, {"detail", d.detail},
                  {"search_found", d.search_found}});
  }
  j["discrepancies"] = ds;
  j["extremal"] = or_null(r.extremal);
  if (with_traces) {
    Json ts = Json::array();
    for (const auto& t : r.traces) ts.push_back(to_json(t));
    j["traces"] = ts;
  }
  return j;
}

Json to_json(const GenSpec& spec) {
  Json j;
  j["family"] = to_string(spec.family);
  j["n"] = spec.n;
  j["m"] = spec.m;
  j["min_degree"] = spec.min_degree;
  j["seed"] = spec.seed;
  if (spec.family == Family::lemma_shape) j["lemma"] = spec.lemma;
  if (spec.family == Family::f_family && !spec.q2_edges.empty()) {
    Json es = Json::array();
    for (const auto& e : spec.q2_edges) es.push_back(edge_json(e));
    j["q2_edges"] = es;
  }
  return j;
}

}  // namespace rainbow
