#include "spinnet/json.hpp"

namespace spinnet::json {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Spin spin_from(const json& j) {
  if (j.is_string()) return Spin::parse(j.get<std::string>());
  if (j.is_number_integer()) return Spin::from_twice(j.get<int>() * 2);
  throw ParseError("spin must be a string such as \"3/2\"");
}

json id_map(const std::map<int, std::string>& m) {
  json out = json::object();
  for (const auto& [id, tag] : m) out[std::to_string(id)] = tag;
  return out;
}

std::map<int, std::string> id_map_from(const json& j) {
  std::map<int, std::string> out;
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size()) throw ParseError("label key '" + k + "' is not an integer id");
    out[id] = v.get<std::string>();
  }
  return out;
}

}  // namespace

json spin(Spin s) { return s.to_string(); }

json value(const SqrtRational& v) { return v.to_string(); }

json sixj(const SixJ& s) {
  json out = json::array();
  for (Spin e : s.entries()) out.push_back(e.to_string());
  return out;
}

SixJ sixj_from(const json& j) {
  return guarded("sixj", [&] {
    if (!j.is_array() || j.size() != 6) throw ParseError("sixj must be an array of six spins");
    std::array<Spin, 6> e;
    for (std::size_t i = 0; i < 6; ++i) e[i] = spin_from(j[i]);
    return SixJ::from_entries(e);
  });
}

json quadruple(const CanonicalQuadruple& q) {
  return {{"a", spin(q.a)}, {"b", spin(q.b)}, {"c", spin(q.c)}, {"d", spin(q.d)},
          {"s", spin(q.s)}, {"regge_applicable", q.regge_applicable}};
}

json regularization(const RegularizationReport& r) {
  json out;
  out["rsym3_holds"] = r.rsym3_holds;
  out["max_r"] = r.max_r ? json(*r.max_r) : json(nullptr);
  out["kappa_twice"] = r.kappa_twice;
  out["rsym5_holds"] = r.rsym5_holds ? json(*r.rsym5_holds) : json(nullptr);
  return out;
}

RegularizationReport regularization_from(const json& j) {
  return guarded("regularization", [&] {
    RegularizationReport r;
    r.rsym3_holds = j.at("rsym3_holds").get<bool>();
    if (!j.at("max_r").is_null()) r.max_r = j.at("max_r").get<int>();
    r.kappa_twice = j.at("kappa_twice").get<int>();
    if (!j.at("rsym5_holds").is_null()) r.rsym5_holds = j.at("rsym5_holds").get<bool>();
    return r;
  });
}

json incidence(const IncidenceStructure& s) {
  json inc = json::array();
  for (const auto& [p, l] : s.incidence()) inc.push_back({p, l});
  return {{"points", s.points()},
          {"lines", s.lines()},
          {"incidence", inc},
          {"labels", {{"points", id_map(s.labels().points)}, {"lines", id_map(s.labels().lines)}}}};
}

IncidenceStructure incidence_from(const json& j) {
  return guarded("incidence structure", [&] {
    auto points = j.at("points").get<std::vector<PointId>>();
    auto lines = j.at("lines").get<std::vector<LineId>>();
    std::vector<std::pair<PointId, LineId>> inc;
    for (const auto& pair : j.at("incidence")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("incidence entries are [p, l]");
      inc.emplace_back(pair[0].get<PointId>(), pair[1].get<LineId>());
    }
    IncidenceLabels labels;
    if (j.contains("labels")) {
      const auto& l = j.at("labels");
      if (l.contains("points")) labels.points = id_map_from(l.at("points"));
      if (l.contains("lines")) labels.lines = id_map_from(l.at("lines"));
    }
    return IncidenceStructure(std::move(points), std::move(lines), std::move(inc),
                              std::move(labels));
  });
}

json complex(const SimplicialComplex4& c) {
  json out;
  out["f_vector"] = c.f_vector();
  json v = json::array(), e = json::array(), t = json::array(), T = json::array();
  for (const auto& x : c.vertices()) v.push_back({{"color", x.color}, {"tag", x.tag}});
  for (const auto& x : c.edges()) {
    json item = {{"vertices", x.vertices}, {"tag", x.tag}};
    if (x.source_line) item["source_line"] = *x.source_line;
    e.push_back(item);
  }
  for (const auto& x : c.triangles()) {
    json item = {{"vertices", x.vertices}, {"edges", x.edges}, {"tag", x.tag}};
    if (x.source_point) item["source_point"] = *x.source_point;
    t.push_back(item);
  }
  for (const auto& x : c.tetrahedra())
    T.push_back({{"vertices", x.vertices},
                 {"edges", x.edges},
                 {"triangles", x.triangles},
                 {"tag", x.tag},
                 {"quadrangle", x.quadrangle}});
  out["vertices"] = v;
  out["edges"] = e;
  out["triangles"] = t;
  out["tetrahedra"] = T;
  return out;
}

SimplicialComplex4 complex_from(const json& j) {
  return guarded("simplicial complex", [&] {
    std::vector<ComplexVertex> v;
    std::vector<ComplexEdge> e;
    std::vector<ComplexTriangle> t;
    std::vector<ComplexTetrahedron> T;
    for (const auto& x : j.at("vertices"))
      v.push_back({x.at("color").get<int>(), x.at("tag").get<std::string>()});
    for (const auto& x : j.at("edges")) {
      ComplexEdge item{x.at("vertices").get<std::array<int, 2>>(), x.at("tag").get<std::string>(),
                       std::nullopt};
      if (x.contains("source_line")) item.source_line = x.at("source_line").get<LineId>();
      e.push_back(std::move(item));
    }
    for (const auto& x : j.at("triangles")) {
      ComplexTriangle item{x.at("vertices").get<std::array<int, 3>>(),
                           x.at("edges").get<std::array<int, 3>>(), x.at("tag").get<std::string>(),
                           std::nullopt};
      if (x.contains("source_point")) item.source_point = x.at("source_point").get<PointId>();
      t.push_back(std::move(item));
    }
    for (const auto& x : j.at("tetrahedra"))
      T.push_back({x.at("vertices").get<std::array<int, 4>>(),
                   x.at("edges").get<std::array<int, 6>>(),
                   x.at("triangles").get<std::array<int, 4>>(), x.at("tag").get<std::string>(),
                   x.at("quadrangle").get<int>()});
    return SimplicialComplex4(std::move(v), std::move(e), std::move(t), std::move(T));
  });
}

json labeling(const SymbolSpins& spins) {
  json s = json::object();
  for (const auto& [sym, j] : spins) s[std::string(symbol_name(sym))] = spin(j);
  return {{"symbol_spins", s}};
}

SymbolSpins labeling_from(const json& j) {
  return guarded("labeling", [&] {
    SymbolSpins out;
    for (const auto& [k, v] : j.at("symbol_spins").items()) {
      auto sym = parse_symbol(k);
      if (!sym) throw ParseError("unknown symbol '" + k + "'");
      out[*sym] = spin_from(v);
    }
    return out;
  });
}

json record(const VerifyRecord& r) {
  json inst = json::object();
  for (const auto& [name, s] : r.instance) inst[name] = spin(s);
  return {{"instance", inst},
          {"lhs", value(r.result.lhs)},
          {"rhs", value(r.result.rhs)},
          {"equal", r.result.equal},
          {"form", r.result.form}};
}

}  // namespace spinnet::json
