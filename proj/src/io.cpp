#include "sph/io.hpp"

#include <ostream>
#include <stdexcept>

namespace sph {

json to_json(const CombTriple& t) {
  json M = json::array();
  for (size_t i = 0; i < t.M.size(); ++i) M.push_back({{"root", t.M[i]}, {"pi", t.pi[i]}});
  return {{"system", t.system().label()}, {"M", M}, {"classes", t.classes}};
}

CombTriple triple_from_json(const json& j, SystemPtr sys) {
  if (!j.is_object()) throw std::invalid_argument("triple must be a JSON object");
  if (!sys) {
    if (!j.contains("system")) throw std::invalid_argument("triple has no system label");
    sys = std::make_shared<const RootSystem>(RootSystem::parse(j.at("system").get<std::string>()));
  }
  std::vector<Root> M;
  std::vector<int> pi;
  for (const auto& e : j.at("M")) {
    M.push_back(e.at("root").get<Root>());
    pi.push_back(e.at("pi").get<int>());
  }
  std::vector<std::vector<int>> classes;
  if (j.contains("classes")) {
    classes = j.at("classes").get<std::vector<std::vector<int>>>();
  } else {
    for (size_t i = 0; i < M.size(); ++i) classes.push_back({static_cast<int>(i)});
  }
  return make_triple(sys, M, pi, classes);
}

json to_json(const TorusSpec& t) {
  return {{"rank_T", t.rank_T}, {"rank_S", t.rank_S()}, {"vanishing", t.vanishing}};
}

TorusSpec torus_from_json(const json& j, int rank_T) {
  int n = j.contains("rank_T") ? j.at("rank_T").get<int>() : rank_T;
  if (n < 0) throw std::invalid_argument("torus needs rank_T");
  IntMatrix rows = j.value("vanishing", IntMatrix{});
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("torus row has wrong length");
  return TorusSpec::from_rows(rows, n);
}

json to_json(const ValidationReport& r) {
  json j = json::object();
  auto put = [&](const char* name, const std::optional<bool>& v) {
    if (v) j[name] = *v;
  };
  put("A", r.A);
  put("D", r.D);
  put("E", r.E);
  put("C", r.C);
  put("T", r.T);
  put("A_reduced", r.A_reduced);
  put("D_reduced", r.D_reduced);
  put("E_reduced", r.E_reduced);
  j["ok"] = r.ok();
  j["failures"] = r.failures;
  return j;
}

json to_json(const SubalgebraModel& m) {
  const auto& rs = *m.sys;
  json psi = json::array();
  for (size_t k = 0; k < m.aset.psi.size(); ++k)
    psi.push_back({{"root", m.aset.psi[k]},
                   {"pi", m.aset.pi_ext[k]},
                   {"maximal", static_cast<bool>(m.aset.in_M[k])},
                   {"class", m.aset.class_of[k]}});
  json xi = json::array();
  for (const auto& row : m.xi) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    xi.push_back(r);
  }
  json basis = json::array();
  for (const auto& v : m.basis) {
    json terms = json::object();
    for (const auto& [r, c] : v) terms[std::to_string(r)] = to_string(c);
    basis.push_back(terms);
  }
  return {{"system", rs.label()},
          {"torus", to_json(m.torus)},
          {"active", psi},
          {"classes", m.aset.classes},
          {"positive_roots", rs.positive_roots()},
          {"xi", xi},
          {"basis", basis},
          {"dim_n", m.dim()}};
}

json to_json(const OrbitGraph& g) {
  json nodes = json::array();
  for (const auto& t : g.nodes) nodes.push_back(to_json(t));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"center", e.center}});
  return {{"nodes", nodes}, {"edges", edges}, {"orbits", g.orbits}};
}

json to_json(const Table& t) {
  json rows = json::array();
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    json entries = json::object();
    for (size_t s = 0; s < t.systems.size(); ++s)
      entries[t.systems[s]] = r.entries[s] ? json(*r.entries[s]) : json(nullptr);
    rows.push_back({{"no", i + 1},
                    {"pairs", format_pairs(r.triple)},
                    {"classes", format_classes(r.triple)},
                    {"triple", to_json(r.triple)},
                    {"transitions", entries},
                    {"cS", r.cS},
                    {"cN", r.cN}});
  }
  json d0 = json::object();
  for (size_t s = 0; s < t.systems.size(); ++s) d0[t.systems[s]] = t.d0[s];
  return {{"systems", t.systems}, {"rows", rows}, {"d0", d0}};
}

void write_catalog_jsonl(std::ostream& os, const Catalog& c) {
  for (size_t i = 0; i < c.triples.size(); ++i) {
    json line = {{"system", c.sys->label()},
                 {"support", c.support},
                 {"index", i},
                 {"triple", to_json(c.triples[i])},
                 {"pairs", format_pairs(c.triples[i])},
                 {"classes", format_classes(c.triples[i])},
                 {"cS", c.codims[i].first},
                 {"cN", c.codims[i].second}};
    if (!c.orbit_of.empty()) line["orbit"] = c.orbit_of[i];
    os << line.dump() << "\n";
  }
}

}  // namespace sph
