#include "sph/combdata.hpp"

#include "sph/build.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sph {

int CombTriple::class_of(int i) const {
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), i) != classes[c].end()) return c;
  throw std::out_of_range("index not in any class");
}

std::vector<int> CombTriple::support_union() const {
  std::set<int> s;
  for (const auto& a : M)
    for (int i : support(a)) s.insert(i);
  return {s.begin(), s.end()};
}

CombTriple make_triple(SystemPtr sys, std::vector<Root> M, std::vector<int> pi,
                       std::vector<std::vector<int>> classes) {
  const int n = static_cast<int>(M.size());
  if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("pi must have one entry per root");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(M[i].size()) != sys->rank() || !sys->is_positive_root(M[i]))
      throw std::invalid_argument("M contains a vector that is not a positive root");
    if (pi[i] < 0 || pi[i] >= sys->rank() || M[i][pi[i]] == 0)
      throw std::invalid_argument("pi must lie in the support of its root");
  }
  std::vector<int> seen(n, 0);
  for (const auto& c : classes) {
    if (c.empty()) throw std::invalid_argument("empty equivalence class");
    for (int i : c) {
      if (i < 0 || i >= n || seen[i]++) throw std::invalid_argument("classes must partition M");
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n)
    throw std::invalid_argument("classes must partition M");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return root_less(M[a], M[b]); });
  for (int i = 0; i + 1 < n; ++i)
    if (M[order[i]] == M[order[i + 1]]) throw std::invalid_argument("M has repeated roots");
  std::vector<int> where(n);
  for (int i = 0; i < n; ++i) where[order[i]] = i;

  CombTriple t;
  t.sys = std::move(sys);
  for (int i = 0; i < n; ++i) {
    t.M.push_back(M[order[i]]);
    t.pi.push_back(pi[order[i]]);
  }
  for (const auto& c : classes) {
    std::vector<int> block;
    for (int i : c) block.push_back(where[i]);
    std::sort(block.begin(), block.end());
    t.classes.push_back(block);
  }
  std::sort(t.classes.begin(), t.classes.end());
  return t;
}

bool operator==(const CombTriple& a, const CombTriple& b) {
  return a.M == b.M && a.pi == b.pi && a.classes == b.classes;
}

bool operator<(const CombTriple& a, const CombTriple& b) {
  if (a.M.size() != b.M.size()) return a.M.size() < b.M.size();
  for (size_t i = 0; i < a.M.size(); ++i)
    if (a.M[i] != b.M[i]) return root_less(a.M[i], b.M[i]);
  if (a.pi != b.pi) return a.pi < b.pi;
  return a.classes < b.classes;
}

TorusSpec TorusSpec::from_rows(const IntMatrix& rows, int rank_T) {
  return {saturate(rows, rank_T), rank_T};
}

bool TorusSpec::same_weight(const Root& a, const Root& b) const {
  Root d = sub(a, b);
  return in_row_space(vanishing, IntRow(d.begin(), d.end()));
}

bool ValidationReport::ok() const {
  for (const auto* f : {&A, &D, &E, &C, &T, &A_reduced, &D_reduced, &E_reduced})
    if (f->has_value() && !**f) return false;
  return true;
}

namespace {

std::string root_str(const Root& a) {
  std::string s = "[";
  for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

bool covering_ok(const CombTriple& t, std::vector<std::string>& failures) {
  bool ok = true;
  for (size_t i = 0; i < t.M.size(); ++i) {
    std::set<int> others;
    for (size_t j = 0; j < t.M.size(); ++j)
      if (j != i)
        for (int v : support(t.M[j])) others.insert(v);
    bool covered = true;
    for (int v : support(t.M[i])) covered = covered && others.count(v);
    if (covered) {
      ok = false;
      failures.push_back("C: support of " + root_str(t.M[i]) + " is covered by the others");
    }
  }
  return ok;
}

IntMatrix differences(const CombTriple& t) {
  IntMatrix rows;
  for (const auto& c : t.classes)
    for (size_t k = 1; k < c.size(); ++k) {
      Root d = sub(t.M[c[k]], t.M[c[0]]);
      rows.emplace_back(d.begin(), d.end());
    }
  return rows;
}

}  // namespace

ValidationReport validate(const CombTriple& t, const std::optional<TorusSpec>& torus) {
  const auto& rs = t.system();
  ValidationReport r;
  r.A = true;
  for (size_t i = 0; i < t.M.size(); ++i)
    if (!admissible(rs, t.pair(i))) {
      r.A = false;
      r.failures.push_back("A: " + root_str(t.M[i]) + " with pi " + std::to_string(t.pi[i]) +
                           " matches no table row");
    }
  r.D = true;
  r.E = true;
  if (*r.A) {
    for (size_t i = 0; i < t.M.size(); ++i)
      for (size_t j = i + 1; j < t.M.size(); ++j) {
        bool eq = t.equivalent(i, j);
        auto c = classify_pair(rs, t.pair(i), t.pair(j), eq);
        if (c.tag != PairTag::INVALID) continue;
        (eq ? r.E : r.D) = false;
        r.failures.push_back(std::string(eq ? "E" : "D") + ": pair " + root_str(t.M[i]) + ", " +
                             root_str(t.M[j]));
      }
  } else {
    r.D = r.E = false;
  }
  r.C = covering_ok(t, r.failures);
  if (torus) {
    const int n = rs.rank();
    IntMatrix R;
    for (int v : t.support_union()) {
      IntRow e(n, 0);
      e[v] = 1;
      R.push_back(e);
    }
    IntMatrix both = torus->vanishing;
    both.insert(both.end(), R.begin(), R.end());
    int dim_k = rank(to_rational(torus->vanishing));
    int dim_meet = dim_k + static_cast<int>(R.size()) - rank(to_rational(both));
    IntMatrix diffs = differences(t);
    int dim_d = rank(to_rational(diffs));
    bool inside = std::all_of(diffs.begin(), diffs.end(),
                              [&](const IntRow& d) { return in_row_space(torus->vanishing, d); });
    r.T = inside && dim_meet == dim_d;
    if (!*r.T)
      r.failures.push_back("T: kernel of the restriction on the support span has dimension " +
                           std::to_string(dim_meet) + ", differences span " +
                           std::to_string(dim_d));
  }
  return r;
}

ValidationReport check_reduced(const CombTriple& t) {
  const auto& rs = t.system();
  ValidationReport r;
  r.A_reduced = true;
  for (size_t i = 0; i < t.M.size(); ++i)
    if (!is_typical(t.M[i]) || t.M[i][t.pi[i]] == 0) {
      r.A_reduced = false;
      r.failures.push_back("A': " + root_str(t.M[i]) + " is not typical");
    }
  r.D_reduced = true;
  r.E_reduced = true;
  for (size_t i = 0; i < t.M.size(); ++i)
    for (size_t j = i + 1; j < t.M.size(); ++j) {
      bool eq = t.equivalent(i, j);
      auto c = classify_pair(rs, t.pair(i), t.pair(j), eq);
      if (!eq && c.tag != PairTag::D0) {
        r.D_reduced = false;
        r.failures.push_back("D': supports of " + root_str(t.M[i]) + ", " + root_str(t.M[j]) +
                             " meet");
      }
      if (eq && c.tag != PairTag::D0 && c.refined == Refined::NONE) {
        r.E_reduced = false;
        r.failures.push_back("E': pair " + root_str(t.M[i]) + ", " + root_str(t.M[j]));
      }
    }
  r.C = covering_ok(t, r.failures);
  return r;
}

bool is_valid(const CombTriple& t) { return validate(t).ok(); }
bool is_reduced(const CombTriple& t) { return check_reduced(t).ok(); }

TorusSpec largest_torus(const CombTriple& t) {
  return TorusSpec::from_rows(differences(t), t.system().rank());
}

std::pair<int, int> codims(const CombTriple& t) {
  auto aset = expand_psi(t);
  int cs = static_cast<int>(t.M.size() - t.classes.size());
  return {cs, static_cast<int>(aset.classes.size())};
}

namespace {

std::string support_digits(const Root& a) {
  std::string s;
  for (int v : support(a)) s += (a.size() > 9 && !s.empty() ? "." : "") + std::to_string(v + 1);
  return s;
}

}  // namespace

// Roots listed by their sorted supports, so "(12,1),(3,3)" rather than canonical order.
std::string format_pairs(const CombTriple& t) {
  std::vector<size_t> order(t.M.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return support(t.M[a]) < support(t.M[b]); });
  std::string s;
  for (size_t i : order) {
    if (!s.empty()) s += ",";
    s += "(" + support_digits(t.M[i]) + "," + std::to_string(t.pi[i] + 1) + ")";
  }
  return s;
}

std::string format_classes(const CombTriple& t) {
  std::vector<std::vector<std::vector<int>>> blocks;
  for (const auto& c : t.classes) {
    if (c.size() < 2) continue;
    std::vector<std::vector<int>> b;
    for (int i : c) b.push_back(support(t.M[i]));
    std::sort(b.begin(), b.end());
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  std::string s;
  for (const auto& b : blocks) {
    if (!s.empty()) s += ",";
    for (size_t k = 0; k < b.size(); ++k) {
      Root r(t.system().rank(), 0);
      for (int v : b[k]) r[v] = 1;
      s += (k ? "~" : "") + support_digits(r);
    }
  }
  return s;
}

}  // namespace sph
