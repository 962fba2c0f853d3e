#include "sph/transform.hpp"

#include "sph/build.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace sph {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<int> regular_active_simple_roots(const CombTriple& t) {
  if (!is_valid(t)) throw std::invalid_argument("triple fails (A), (D), (E) or (C)");
  const auto& rs = t.system();
  std::vector<int> out;
  for (int d = 0; d < rs.rank(); ++d) {
    Root simple = rs.simple(d);
    auto it = std::find(t.M.begin(), t.M.end(), simple);
    if (it != t.M.end()) {
      int i = static_cast<int>(it - t.M.begin());
      if (t.classes[t.class_of(i)].size() == 1) out.push_back(d);
      continue;
    }
    for (size_t i = 0; i < t.M.size(); ++i) {
      auto s = support(t.M[i]);
      if (t.M[i][d] == 0 || !is_terminal(rs, d, s) || t.pi[i] == d) continue;
      std::vector<int> rest;
      for (int v : s)
        if (v != d) rest.push_back(v);
      bool private_rest = true;
      for (size_t j = 0; j < t.M.size() && private_rest; ++j)
        if (j != i && subset_of(rest, support(t.M[j]))) private_rest = false;
      if (private_rest) {
        out.push_back(d);
        break;
      }
    }
  }
  return out;
}

CombTriple elementary_transform(const CombTriple& t, int delta) {
  auto reg = regular_active_simple_roots(t);
  if (std::find(reg.begin(), reg.end(), delta) == reg.end())
    throw std::invalid_argument("center " + std::to_string(delta) +
                                " is not a regular active simple root");
  const auto& rs = t.system();
  Root simple = rs.simple(delta);
  std::vector<Root> M;
  std::vector<int> pi;
  std::vector<int> new_index(t.M.size(), -1);
  bool covered = false;
  for (size_t i = 0; i < t.M.size(); ++i) {
    if (t.M[i] == simple) continue;
    new_index[i] = static_cast<int>(M.size());
    M.push_back(rs.reflect(t.M[i], delta));
    pi.push_back(t.pi[i]);
    if (M.back()[delta] != 0) covered = true;
  }
  std::vector<std::vector<int>> classes;
  for (const auto& c : t.classes) {
    std::vector<int> block;
    for (int i : c)
      if (new_index[i] >= 0) block.push_back(new_index[i]);
    if (!block.empty()) classes.push_back(block);
  }
  if (!covered) {
    classes.push_back({static_cast<int>(M.size())});
    M.push_back(simple);
    pi.push_back(delta);
  }
  auto out = make_triple(t.sys, M, pi, classes);
  if (!is_valid(out)) throw std::logic_error("elementary transformation produced invalid data");
  return out;
}

DeltaProfile delta_profile(const CombTriple& t, int delta) {
  auto reg = regular_active_simple_roots(t);
  if (std::find(reg.begin(), reg.end(), delta) == reg.end())
    throw std::invalid_argument("center is not a regular active simple root");
  const auto& rs = t.system();
  Root simple = rs.simple(delta);
  DeltaProfile p;
  for (const auto& a : t.M) {
    if (a == simple) continue;
    auto s = support(a);
    bool triple = false, dbl = false, any = false;
    for (int g : s) {
      if (!rs.adjacent(g, delta)) continue;
      any = true;
      if (rs.arrow_toward(g, delta)) (rs.bond(g, delta) == 3 ? triple : dbl) = true;
    }
    if (a[delta] == 0) {
      if (!any) ++p.m0;
      else if (triple) ++p.m11;
      else if (dbl) ++p.m12;
      else ++p.m13;
    } else {
      if (triple) ++p.m21;
      else if (dbl) ++p.m22;
      else ++p.m23;
    }
  }
  return p;
}

std::string to_string(ReducedVerdict v) {
  switch (v) {
    case ReducedVerdict::UNCHANGED: return "UNCHANGED";
    case ReducedVerdict::REDUCED_NEW: return "REDUCED_NEW";
    case ReducedVerdict::NOT_REDUCED: return "NOT_REDUCED";
  }
  return "?";
}

ReducedVerdict preserves_reduced(const CombTriple& t, int delta) {
  if (!is_reduced(t)) throw std::invalid_argument("preserves_reduced: triple is not reduced");
  auto p = delta_profile(t, delta);
  if (p.m1() + p.m21 + p.m23 == 0) return ReducedVerdict::UNCHANGED;
  if (p.m13 + p.m23 >= 1 && p.m11 + p.m12 + p.m21 == 0 && p.m13 + p.m22 <= 1)
    return ReducedVerdict::REDUCED_NEW;
  return ReducedVerdict::NOT_REDUCED;
}

int OrbitGraph::find(const CombTriple& t) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == t) return static_cast<int>(i);
  return -1;
}

OrbitGraph orbit(const CombTriple& t, bool reduced_only) {
  OrbitGraph g;
  std::map<CombTriple, int> index;
  auto visit = [&](const CombTriple& x) {
    auto [it, fresh] = index.emplace(x, static_cast<int>(g.nodes.size()));
    if (fresh) g.nodes.push_back(x);
    return it->second;
  };
  visit(t);
  for (size_t k = 0; k < g.nodes.size(); ++k) {
    CombTriple cur = g.nodes[k];
    for (int d : regular_active_simple_roots(cur)) {
      if (reduced_only && preserves_reduced(cur, d) == ReducedVerdict::NOT_REDUCED) continue;
      int to = visit(elementary_transform(cur, d));
      g.edges.push_back({static_cast<int>(k), to, d});
    }
  }
  std::vector<int> all(g.nodes.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  g.orbits = {all};
  return g;
}

namespace {

int nontypical_height(const CombTriple& t) {
  int m = 0;
  for (const auto& a : t.M)
    if (!is_typical(a)) m += height(a);
  return m;
}

int overlap_measure(const CombTriple& t, const ActiveSet& s) {
  int f = 0;
  for (size_t i = 0; i < t.M.size(); ++i)
    for (size_t j = i + 1; j < t.M.size(); ++j) {
      int common = 0;
      bool active = false;
      for (int v = 0; v < t.system().rank(); ++v)
        if (t.M[i][v] && t.M[j][v]) {
          ++common;
          if (s.index_of(t.system().simple(v)) >= 0) active = true;
        }
      if (active) f += common;
    }
  return f;
}

}  // namespace

Reduction reduce_to_reduced(const CombTriple& t) {
  if (!is_valid(t)) throw std::invalid_argument("reduce_to_reduced: triple is not valid");
  Reduction r{t, {}};
  auto step = [&](int d) {
    r.result = elementary_transform(r.result, d);
    r.path.push_back(d);
  };
  while (true) {
    auto it = std::find_if(r.result.M.begin(), r.result.M.end(),
                           [](const Root& a) { return !is_typical(a); });
    if (it == r.result.M.end()) break;
    int before = nontypical_height(r.result);
    step(match_admissible(r.result.system(), *it)->starred);
    if (nontypical_height(r.result) >= before)
      throw std::logic_error("starred transformation did not lower the non-typical height");
  }
  while (true) {
    auto s = expand_psi(r.result);
    int center = -1;
    for (int v = 0; v < r.result.system().rank() && center < 0; ++v) {
      if (s.index_of(r.result.system().simple(v)) < 0) continue;
      int holders = 0;
      for (const auto& a : r.result.M) holders += a[v] != 0;
      if (holders >= 2) center = v;
    }
    if (center < 0) break;
    int before = overlap_measure(r.result, s);
    step(center);
    if (overlap_measure(r.result, expand_psi(r.result)) >= before)
      throw std::logic_error("transformation did not lower the overlap measure");
  }
  if (!is_reduced(r.result)) throw std::logic_error("reduction ended in a non-reduced set");
  return r;
}

}  // namespace sph
