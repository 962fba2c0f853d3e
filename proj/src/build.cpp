#include "sph/build.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sph {

int ActiveSet::index_of(const Root& a) const {
  auto it = std::lower_bound(psi.begin(), psi.end(), a, root_less);
  return (it != psi.end() && *it == a) ? static_cast<int>(it - psi.begin()) : -1;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

ActiveSet expand_psi(const CombTriple& t) {
  const auto& rs = t.system();
  if (!is_valid(t)) throw std::invalid_argument("expand_psi: triple fails (A), (D), (E) or (C)");
  ActiveSet s;
  std::vector<std::vector<Root>> fam;
  std::set<Root> all;
  for (size_t i = 0; i < t.M.size(); ++i) {
    fam.push_back(family(rs, t.pair(i)));
    all.insert(fam.back().begin(), fam.back().end());
  }
  s.psi.assign(all.begin(), all.end());
  std::sort(s.psi.begin(), s.psi.end(), root_less);
  const int n = static_cast<int>(s.psi.size());
  s.in_M.assign(n, false);
  s.pi_ext.assign(n, -1);
  for (size_t i = 0; i < t.M.size(); ++i) {
    int k = s.index_of(t.M[i]);
    s.in_M[k] = true;
    s.pi_ext[k] = t.pi[i];
  }
  for (int k = 0; k < n; ++k) {
    if (s.in_M[k]) continue;
    s.pi_ext[k] = associated_simple_root(rs, s.psi, s.psi[k]);
    if (s.pi_ext[k] < 0) throw std::logic_error("no unique associated simple root in psi");
  }

  UnionFind uf(n);
  for (const auto& c : t.classes)
    for (size_t k = 1; k < c.size(); ++k) uf.unite(s.index_of(t.M[c[0]]), s.index_of(t.M[c[k]]));
  // subordinate roots sharing the complement delta are equivalent
  std::map<Root, std::vector<std::pair<int, int>>> by_delta;  // delta -> (psi index, M index)
  for (size_t i = 0; i < t.M.size(); ++i)
    for (const auto& b : fam[i])
      if (b != t.M[i]) by_delta[sub(t.M[i], b)].emplace_back(s.index_of(b), static_cast<int>(i));
  std::set<std::pair<int, int>> related;
  for (const auto& [d, group] : by_delta)
    for (const auto& [x, i] : group)
      for (const auto& [y, j] : group) {
        related.insert({x, y});
        if (!t.equivalent(i, j))
          throw std::logic_error("subordinate roots related through non-equivalent roots");
        uf.unite(x, y);
      }
  std::map<int, std::vector<int>> blocks;
  for (int k = 0; k < n; ++k) blocks[uf.find(k)].push_back(k);
  for (auto& [root, b] : blocks) {
    for (int x : b)
      for (int y : b)
        if (!s.in_M[x] && !related.count({x, y}) && x != y)
          throw std::logic_error("extended equivalence is not transitive");
    s.classes.push_back(b);
  }
  std::sort(s.classes.begin(), s.classes.end());
  s.class_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(s.classes.size()); ++c)
    for (int k : s.classes[c]) s.class_of[k] = c;
  for (const auto& b : s.classes)
    for (int k : b)
      if (s.in_M[k] != s.in_M[b[0]]) throw std::logic_error("class mixes M and non-M roots");
  return s;
}

namespace {

// Row of x -> xi_j([x, e_delta]) over class i, or empty if class i + delta is not inside class j.
RatRow shifted_row(const RootSystem& rs, const ActiveSet& s, const StructureConstants& sc,
                   const std::vector<RatRow>& xi, int i, int j, const Root& delta) {
  RatRow row;
  for (int x : s.classes[i]) {
    int y = s.index_of(add(s.psi[x], delta));
    if (y < 0 || s.class_of[y] != j) return {};
    auto& cj = s.classes[j];
    int pos = static_cast<int>(std::find(cj.begin(), cj.end(), y) - cj.begin());
    row.push_back(Rat(sc.N(s.psi[x], delta)) * xi[j][pos]);
  }
  (void)rs;
  return row;
}

std::vector<Root> shifts(const RootSystem& rs, const ActiveSet& s, int i, int j) {
  std::vector<Root> out;
  for (int y : s.classes[j]) {
    Root d = sub(s.psi[y], s.psi[s.classes[i][0]]);
    if (rs.is_positive_root(d)) out.push_back(d);
  }
  return out;
}

bool proportional(const RatRow& a, const RatRow& b) {
  if (a.size() != b.size()) return false;
  Rat f = 0;
  for (size_t k = 0; k < a.size(); ++k) {
    if (is_zero(a[k]) != is_zero(b[k])) return false;
    if (is_zero(a[k])) continue;
    Rat r = b[k] / a[k];
    if (is_zero(f)) f = r;
    else if (r != f) return false;
  }
  return true;
}

}  // namespace

std::vector<RatRow> build_functionals(const RootSystem& rs, const ActiveSet& s,
                                      const StructureConstants& sc) {
  const int K = static_cast<int>(s.classes.size());
  std::vector<RatRow> xi(K);
  for (int c = 0; c < K; ++c)
    if (s.class_in_M(c) || s.classes[c].size() == 1) xi[c].assign(s.classes[c].size(), Rat(1));
  for (int c = 0; c < K; ++c) {
    if (!xi[c].empty()) continue;
    for (int j = 0; j < K && xi[c].empty(); ++j) {
      if (!s.class_in_M(j)) continue;
      for (const auto& d : shifts(rs, s, c, j)) {
        auto row = shifted_row(rs, s, sc, xi, c, j, d);
        if (!row.empty()) {
          xi[c] = row;
          break;
        }
      }
    }
    if (xi[c].empty()) throw std::logic_error("class has no shift into a class of M");
  }
  for (int c = 0; c < K; ++c)
    for (const auto& v : xi[c])
      if (is_zero(v)) throw std::logic_error("functional vanishes on a root space of its class");
  // every one-step shift must reproduce the functional up to a scalar
  for (int i = 0; i < K; ++i) {
    if (s.classes[i].size() < 2) continue;
    for (int j = 0; j < K; ++j) {
      if (i == j) continue;
      for (const auto& d : shifts(rs, s, i, j)) {
        auto row = shifted_row(rs, s, sc, xi, i, j, d);
        if (!row.empty() && !proportional(xi[i], row))
          throw std::logic_error("functionals obtained along different shifts disagree");
      }
    }
  }
  return xi;
}

SubalgebraModel build_subalgebra(const CombTriple& t, const TorusSpec& torus,
                                 const StructureConstants& sc) {
  auto report = validate(t, torus);
  if (!report.ok()) throw std::invalid_argument("build_subalgebra: triple fails validation");
  const auto& rs = t.system();
  SubalgebraModel m{t.sys, torus, expand_psi(t), {}, {}};
  m.xi = build_functionals(rs, m.aset, sc);
  for (int r = 0; r < rs.num_positive(); ++r)
    if (m.aset.index_of(rs.positive_roots()[r]) < 0) m.basis.push_back(Vec{{r, Rat(1)}});
  for (size_t c = 0; c < m.aset.classes.size(); ++c) {
    const auto& cls = m.aset.classes[c];
    int r0 = rs.index_of(m.aset.psi[cls[0]]);
    for (size_t k = 1; k < cls.size(); ++k) {
      int rk = rs.index_of(m.aset.psi[cls[k]]);
      m.basis.push_back(Vec{{r0, -m.xi[c][k] / m.xi[c][0]}, {rk, Rat(1)}});
    }
  }
  return m;
}

SubalgebraModel build_subalgebra(const CombTriple& t, const TorusSpec& torus) {
  StructureConstants sc(t.system());
  return build_subalgebra(t, torus, sc);
}

Vec bracket(const RootSystem& rs, const StructureConstants& sc, const Vec& x, const Vec& y) {
  Vec out;
  const auto& roots = rs.positive_roots();
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      int s = rs.index_of(add(roots[a], roots[b]));
      if (s < 0) continue;
      out[s] += ca * cb * sc.N(roots[a], roots[b]);
    }
  for (auto it = out.begin(); it != out.end();)
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

bool is_weight_vector(const SubalgebraModel& m, const Vec& v) {
  if (v.empty()) return true;
  const auto& roots = m.sys->positive_roots();
  const Root& first = roots[v.begin()->first];
  for (const auto& [r, c] : v)
    if (!m.torus.same_weight(roots[r], first)) return false;
  return true;
}

bool verify_closure(const SubalgebraModel& m, const StructureConstants& sc) {
  const auto& rs = *m.sys;
  const int P = rs.num_positive();
  for (const auto& v : m.basis)
    if (!is_weight_vector(m, v)) return false;
  RatMatrix span;
  for (const auto& v : m.basis) {
    RatRow row(P, Rat(0));
    for (const auto& [r, c] : v) row[r] = c;
    span.push_back(row);
  }
  auto piv = rref(span);
  auto inside = [&](const Vec& v) {
    RatRow row(P, Rat(0));
    for (const auto& [r, c] : v) row[r] = c;
    for (size_t i = 0; i < piv.size(); ++i) {
      Rat f = row[piv[i]];
      if (is_zero(f)) continue;
      for (int k = 0; k < P; ++k) row[k] -= f * span[i][k];
    }
    return std::all_of(row.begin(), row.end(), [](const Rat& q) { return is_zero(q); });
  };
  for (size_t i = 0; i < m.basis.size(); ++i)
    for (size_t j = i + 1; j < m.basis.size(); ++j)
      if (!inside(bracket(rs, sc, m.basis[i], m.basis[j]))) return false;
  return true;
}

bool check_sphericity(const SubalgebraModel& m) {
  const auto& roots = m.sys->positive_roots();
  std::vector<int> reps;  // representative root index of each weight
  std::vector<int> weight_of(roots.size());
  for (size_t r = 0; r < roots.size(); ++r) {
    int w = -1;
    for (size_t k = 0; k < reps.size() && w < 0; ++k)
      if (m.torus.same_weight(roots[r], roots[reps[k]])) w = static_cast<int>(k);
    if (w < 0) {
      w = static_cast<int>(reps.size());
      reps.push_back(static_cast<int>(r));
    }
    weight_of[r] = w;
  }
  std::vector<int> codim(reps.size(), 0);
  for (size_t r = 0; r < roots.size(); ++r) ++codim[weight_of[r]];
  for (const auto& v : m.basis) {
    if (v.empty() || !is_weight_vector(m, v)) return false;
    --codim[weight_of[v.begin()->first]];
  }
  IntMatrix indep = m.torus.vanishing;
  int expected = rank(to_rational(indep));
  for (size_t w = 0; w < reps.size(); ++w) {
    if (codim[w] > 1) return false;
    if (codim[w] == 1) {
      const Root& a = roots[reps[w]];
      indep.emplace_back(a.begin(), a.end());
      ++expected;
    }
  }
  return indep.empty() || rank(to_rational(indep)) == expected;
}

}  // namespace sph
