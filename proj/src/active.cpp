#include "sph/active.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sph {

bool is_typical(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0 || x == 1; });
}

namespace {

struct Row {
  char type;
  std::vector<int> pattern;  // coefficients in canonical numbering
  std::vector<int> pis;      // canonical indices
  int starred;
};

std::vector<Row> rows_for(char type, int n) {
  std::vector<Row> rows;
  if (type == 'B' || (type == 'C' && n == 2)) {
    if (type == 'C') {
      // C2 numbering is B2 numbering read backwards
      rows.push_back({type, {2, 1}, {1}, 0});
    } else {
      std::vector<int> pat(n, 1), pis;
      pat[n - 1] = 2;
      for (int i = 0; i + 1 < n; ++i) pis.push_back(i);
      rows.push_back({type, pat, pis, n - 1});
    }
  } else if (type == 'C') {
    std::vector<int> pat(n, 2);
    pat[n - 1] = 1;
    rows.push_back({type, pat, {n - 1}, 0});
  } else if (type == 'F') {
    rows.push_back({type, {2, 2, 1, 1}, {2, 3}, 0});
  } else if (type == 'G') {
    rows.push_back({type, {2, 1}, {1}, 0});
    rows.push_back({type, {3, 1}, {1}, 0});
  }
  return rows;
}

}  // namespace

std::optional<AdmissibleMatch> match_admissible(const RootSystem& rs, const Root& a) {
  if (!rs.is_positive_root(a)) return std::nullopt;
  auto supp = support(a);
  if (is_typical(a)) return AdmissibleMatch{supp, -1};
  auto sub = subsystem(rs, supp);
  const auto& comps = sub.system.components();
  if (comps.size() != 1) return std::nullopt;
  Root local = sub.restrict(a);
  std::set<int> pis;
  int starred = -1;
  for (const auto& lab : canonical_labelings(sub.system, comps[0]))
    for (const auto& row : rows_for(comps[0].type, comps[0].rank)) {
      bool ok = true;
      for (int k = 0; k < comps[0].rank && ok; ++k) ok = local[lab[k]] == row.pattern[k];
      if (!ok) continue;
      for (int k : row.pis) pis.insert(sub.embedding[lab[k]]);
      int s = sub.embedding[lab[row.starred]];
      if (starred >= 0 && starred != s) throw std::logic_error("ambiguous starred root");
      starred = s;
    }
  if (pis.empty()) return std::nullopt;
  return AdmissibleMatch{std::vector<int>(pis.begin(), pis.end()), starred};
}

std::vector<int> admissible_pis(const RootSystem& rs, const Root& a) {
  auto m = match_admissible(rs, a);
  return m ? m->pi_options : std::vector<int>{};
}

bool admissible(const RootSystem& rs, const ActivePair& p) {
  auto opts = admissible_pis(rs, p.alpha);
  return std::find(opts.begin(), opts.end(), p.pi) != opts.end();
}

std::vector<Root> family(const RootSystem& rs, const ActivePair& p) {
  if (!admissible(rs, p)) throw std::invalid_argument("family: pair is not admissible");
  std::vector<Root> f{p.alpha};
  for (const auto& b : rs.positive_roots()) {
    if (b[p.pi] != 0) continue;
    if (rs.is_positive_root(sub(p.alpha, b))) f.push_back(b);
  }
  std::sort(f.begin(), f.end(), root_less);
  return f;
}

int associated_simple_root(const RootSystem& rs, const std::vector<Root>& psi, const Root& beta) {
  std::set<Root> in(psi.begin(), psi.end());
  std::vector<std::pair<Root, Root>> splits;
  for (const auto& b1 : rs.positive_roots()) {
    Root b2 = sub(beta, b1);
    if (rs.is_positive_root(b2)) splits.emplace_back(b1, b2);
  }
  int found = -1;
  for (int g : support(beta)) {
    bool ok = true;
    for (const auto& [b1, b2] : splits) {
      ok = ok && (in.count(b1) > 0) == (b1[g] == 0);
      ok = ok && (in.count(b2) > 0) == (b2[g] == 0);
    }
    if (!ok) continue;
    if (found >= 0) return -1;
    found = g;
  }
  return found;
}

int member_pi(const RootSystem& rs, const ActivePair& p, const Root& beta) {
  auto f = family(rs, p);
  if (std::find(f.begin(), f.end(), beta) == f.end())
    throw std::invalid_argument("member_pi: root is not in the family");
  if (beta == p.alpha) return p.pi;
  return associated_simple_root(rs, f, beta);
}

std::string to_string(PairTag t) {
  switch (t) {
    case PairTag::D0: return "D0";
    case PairTag::D1: return "D1";
    case PairTag::E1: return "E1";
    case PairTag::D2: return "D2";
    case PairTag::E2: return "E2";
    case PairTag::INVALID: return "INVALID";
  }
  return "?";
}

std::string to_string(Refined r) {
  switch (r) {
    case Refined::NONE: return "";
    case Refined::E1PRIME: return "E1PRIME";
    case Refined::E2PRIME: return "E2PRIME";
  }
  return "?";
}

namespace {

// Branch shape: a branch node in the intersection with three simple-laced arms,
// one arm being the rest of the intersection.
std::optional<PairWitness> branch_shape(const RootSystem& rs, const std::vector<int>& sa,
                                        const std::vector<int>& sb,
                                        const std::vector<int>& inter) {
  if (inter.size() < 2) return std::nullopt;
  std::vector<int> u;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(u));
  std::vector<int> only_a, only_b;
  std::set_difference(sa.begin(), sa.end(), inter.begin(), inter.end(), std::back_inserter(only_a));
  std::set_difference(sb.begin(), sb.end(), inter.begin(), inter.end(), std::back_inserter(only_b));
  if (only_a.empty() || only_b.empty()) return std::nullopt;
  int edges = 0, branch = -1;
  for (size_t i = 0; i < u.size(); ++i) {
    int d = degree_in(rs, u[i], u);
    if (d > 3) return std::nullopt;
    if (d == 3) {
      if (branch >= 0) return std::nullopt;
      branch = u[i];
    }
    for (size_t j = i + 1; j < u.size(); ++j) {
      int m = rs.bond(u[i], u[j]);
      if (m > 1) return std::nullopt;
      edges += m;
    }
  }
  if (branch < 0 || edges + 1 != static_cast<int>(u.size()) || !is_connected(rs, u))
    return std::nullopt;
  if (!std::binary_search(inter.begin(), inter.end(), branch)) return std::nullopt;
  // walk each arm outward from the branch node
  auto walk = [&](int start, const std::vector<int>& allowed) {
    std::vector<int> path{start};
    int prev = branch, cur = start;
    while (true) {
      int next = -1;
      for (int v : rs.neighbours(cur))
        if (v != prev && std::binary_search(allowed.begin(), allowed.end(), v)) next = v;
      if (next < 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };
  std::vector<int> chain_rest;
  for (int v : inter)
    if (v != branch) chain_rest.push_back(v);
  PairWitness w;
  w.chain = {branch};
  for (int v : rs.neighbours(branch)) {
    if (std::binary_search(only_a.begin(), only_a.end(), v)) w.arm_a = walk(v, only_a);
    if (std::binary_search(only_b.begin(), only_b.end(), v)) w.arm_b = walk(v, only_b);
    if (std::binary_search(chain_rest.begin(), chain_rest.end(), v)) {
      auto rest = walk(v, chain_rest);
      w.chain.insert(w.chain.end(), rest.begin(), rest.end());
    }
  }
  if (w.arm_a.size() != only_a.size() || w.arm_b.size() != only_b.size() ||
      w.chain.size() != inter.size())
    return std::nullopt;
  return w;
}

}  // namespace

PairClass classify_pair(const RootSystem& rs, const ActivePair& a, const ActivePair& b,
                        bool equivalent) {
  if (a.alpha == b.alpha) throw std::invalid_argument("classify_pair: roots must differ");
  auto sa = support(a.alpha), sb = support(b.alpha);
  std::vector<int> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  PairClass out;
  if (inter.empty()) {
    out.tag = PairTag::D0;
    return out;
  }
  PairTag shape = PairTag::INVALID;
  PairWitness w;
  if (inter.size() == 1) {
    int d = inter[0];
    bool term = is_terminal(rs, d, sa) && is_terminal(rs, d, sb);
    w.delta = d;
    if (term && a.pi != d && b.pi != d) {
      shape = PairTag::D1;
    } else if (term && a.pi == d && b.pi == d) {
      if (rs.is_positive_root(sub(a.alpha, rs.simple(d))) &&
          rs.is_positive_root(sub(b.alpha, rs.simple(d))))
        shape = PairTag::E1;
      out.refined = Refined::E1PRIME;
    }
  } else if (is_typical(a.alpha) && is_typical(b.alpha)) {
    if (auto fig = branch_shape(rs, sa, sb, inter)) {
      w = *fig;
      bool pa_in = std::binary_search(inter.begin(), inter.end(), a.pi);
      bool pb_in = std::binary_search(inter.begin(), inter.end(), b.pi);
      if (!pa_in && !pb_in) {
        shape = PairTag::D2;
      } else if (a.pi == b.pi && pa_in) {
        shape = PairTag::E2;
        if (a.pi == w.chain.back()) out.refined = Refined::E2PRIME;
      }
    }
  }
  bool allowed = shape == PairTag::D1 || shape == PairTag::D2 ||
                 (equivalent && (shape == PairTag::E1 || shape == PairTag::E2));
  if (!equivalent) out.refined = Refined::NONE;
  if (out.refined != Refined::NONE || allowed) out.witness = w;
  out.tag = allowed ? shape : PairTag::INVALID;
  return out;
}

}  // namespace sph
