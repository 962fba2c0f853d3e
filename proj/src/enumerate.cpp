#include "sph/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sph {

int Catalog::find(const CombTriple& t) const {
  auto it = std::lower_bound(triples.begin(), triples.end(), t);
  return (it != triples.end() && *it == t) ? static_cast<int>(it - triples.begin()) : -1;
}

namespace {

struct Candidate {
  Root root;
  std::vector<int> pis;
};

// Subsets of candidates whose supports cover `support` exactly and each own a private node.
std::vector<std::vector<int>> covering_sets(const std::vector<Candidate>& cand,
                                            const std::vector<int>& support, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  const int cap = static_cast<int>(support.size());
  std::function<void(size_t)> rec = [&](size_t from) {
    std::vector<int> count(n, 0);
    for (int c : chosen)
      for (int v : sph::support(cand[c].root)) ++count[v];
    bool covers = std::all_of(support.begin(), support.end(), [&](int v) { return count[v] > 0; });
    bool private_nodes = std::all_of(chosen.begin(), chosen.end(), [&](int c) {
      for (int v : sph::support(cand[c].root))
        if (count[v] == 1) return true;
      return false;
    });
    if (covers && private_nodes) out.push_back(chosen);
    if (static_cast<int>(chosen.size()) == cap) return;
    for (size_t k = from; k < cand.size(); ++k) {
      chosen.push_back(static_cast<int>(k));
      rec(k + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

// Restricted growth strings of length n.
void for_each_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      std::vector<std::vector<int>> classes(blocks);
      for (int k = 0; k < n; ++k) classes[rgs[k]].push_back(k);
      f(classes);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

Catalog enumerate(SystemPtr sys, const std::vector<int>& support_in, int jobs, bool reduced) {
  const auto& rs = *sys;
  std::vector<int> support = support_in;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (int v : support)
    if (v < 0 || v >= rs.rank()) throw std::invalid_argument("support index out of range");
  std::vector<Candidate> cand;
  for (const auto& a : rs.positive_roots()) {
    auto s = sph::support(a);
    if (!std::includes(support.begin(), support.end(), s.begin(), s.end())) continue;
    if (reduced) {
      if (is_typical(a)) cand.push_back({a, s});
    } else if (auto opts = admissible_pis(rs, a); !opts.empty()) {
      cand.push_back({a, opts});
    }
  }
  auto sets = covering_sets(cand, support, rs.rank());

  auto work = [&](size_t idx, std::vector<CombTriple>& found) {
    const auto& chosen = sets[idx];
    const int m = static_cast<int>(chosen.size());
    std::vector<Root> M;
    for (int c : chosen) M.push_back(cand[c].root);
    std::vector<int> pi(m);
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        for_each_partition(m, [&](const std::vector<std::vector<int>>& classes) {
          auto t = make_triple(sys, M, pi, classes);
          if (reduced ? is_reduced(t) : is_valid(t)) found.push_back(t);
        });
        return;
      }
      for (int p : cand[chosen[i]].pis) {
        pi[i] = p;
        rec(i + 1);
      }
    };
    rec(0);
  };

  jobs = std::max(1, jobs);
  std::vector<std::vector<CombTriple>> parts(jobs);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (size_t k = j; k < sets.size(); k += jobs) work(k, parts[j]);
    });
  for (auto& th : pool) th.join();

  Catalog c;
  c.sys = sys;
  c.support = support;
  for (auto& p : parts) c.triples.insert(c.triples.end(), p.begin(), p.end());
  std::sort(c.triples.begin(), c.triples.end());
  c.triples.erase(std::unique(c.triples.begin(), c.triples.end()), c.triples.end());
  for (const auto& t : c.triples) c.codims.push_back(sph::codims(t));
  return c;
}

}  // namespace

Catalog enumerate_reduced(SystemPtr sys, const std::vector<int>& support, int jobs) {
  return enumerate(std::move(sys), support, jobs, true);
}

Catalog enumerate_valid(SystemPtr sys, const std::vector<int>& support, int jobs) {
  if (sys->rank() > 3)
    throw std::invalid_argument("enumerate_valid supports total rank at most 3, got " +
                                std::to_string(sys->rank()));
  return enumerate(std::move(sys), support, jobs, false);
}

void compute_orbits(Catalog& c, bool reduced_only) {
  const int n = static_cast<int>(c.triples.size());
  c.orbits.clear();
  c.transitions.clear();
  c.orbit_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (c.orbit_of[i] >= 0) continue;
    auto g = orbit(c.triples[i], reduced_only);
    std::vector<int> local(g.nodes.size(), -1);
    std::vector<int> members;
    for (size_t k = 0; k < g.nodes.size(); ++k) {
      local[k] = c.find(g.nodes[k]);
      if (local[k] >= 0) {
        if (c.orbit_of[local[k]] >= 0) throw std::logic_error("orbits overlap");
        c.orbit_of[local[k]] = static_cast<int>(c.orbits.size());
        members.push_back(local[k]);
      }
    }
    std::sort(members.begin(), members.end());
    c.orbits.push_back(members);
    for (const auto& e : g.edges)
      if (local[e.from] >= 0 && local[e.to] >= 0 && e.from != e.to)
        c.transitions.push_back({local[e.from], local[e.to], e.center});
  }
  std::sort(c.transitions.begin(), c.transitions.end(), [](const OrbitEdge& a, const OrbitEdge& b) {
    return std::tie(a.from, a.to, a.center) < std::tie(b.from, b.to, b.center);
  });
}

std::vector<int> all_nodes(const RootSystem& rs) {
  std::vector<int> v(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) v[i] = i;
  return v;
}

int d0(SystemPtr sys, bool reduced_only) {
  auto c = enumerate_reduced(sys, all_nodes(*sys));
  compute_orbits(c, reduced_only);
  return static_cast<int>(c.orbits.size());
}

int d(SystemPtr sys, std::map<std::string, int>* memo) {
  std::map<std::string, int> local;
  if (!memo) memo = &local;
  const int n = sys->rank();
  int total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) subset.push_back(i);
    if (subset.empty()) {
      total += 1;
      continue;
    }
    auto sub = subsystem(*sys, subset);
    std::string key = diagram_key(sub.system);
    auto it = memo->find(key);
    if (it == memo->end())
      it = memo->emplace(key, d0(std::make_shared<const RootSystem>(sub.system))).first;
    total += it->second;
  }
  return total;
}

int d_direct(SystemPtr sys) {
  const int n = sys->rank();
  int total = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) subset.push_back(i);
    auto c = enumerate_reduced(sys, subset);
    compute_orbits(c, false);
    total += static_cast<int>(c.orbits.size());
  }
  return total;
}

Table make_table(const std::vector<SystemPtr>& systems, int jobs) {
  if (systems.empty()) throw std::invalid_argument("make_table needs at least one system");
  std::vector<Catalog> cats;
  for (const auto& s : systems) {
    if (s->rank() != systems[0]->rank())
      throw std::invalid_argument("systems in one table must have equal rank");
    cats.push_back(enumerate_reduced(s, all_nodes(*s), jobs));
    compute_orbits(cats.back(), true);
  }
  Table t;
  std::set<CombTriple> keys;
  for (const auto& c : cats) keys.insert(c.triples.begin(), c.triples.end());
  for (const auto& k : keys) t.rows.push_back({k, {}, 0, 0});
  auto row_of = [&](const CombTriple& x) {
    return static_cast<int>(std::distance(keys.begin(), keys.find(x)));
  };
  for (size_t s = 0; s < cats.size(); ++s) {
    const auto& c = cats[s];
    t.systems.push_back(systems[s]->label());
    t.d0.push_back(static_cast<int>(c.orbits.size()));
    for (auto& r : t.rows) r.entries.emplace_back();
    for (size_t i = 0; i < c.triples.size(); ++i) {
      auto& row = t.rows[row_of(c.triples[i])];
      row.cS = c.codims[i].first;
      row.cN = c.codims[i].second;
      std::map<int, int> one_step;  // row -> smallest center
      for (const auto& e : c.transitions)
        if (e.from == static_cast<int>(i)) {
          int r = row_of(c.triples[e.to]);
          if (!one_step.count(r)) one_step[r] = e.center;
        }
      std::vector<int> others;
      for (int k : c.orbits[c.orbit_of[i]])
        if (k != static_cast<int>(i)) others.push_back(row_of(c.triples[k]));
      std::sort(others.begin(), others.end());
      std::string entry;
      for (int r : others) {
        if (!entry.empty()) entry += ",";
        entry += std::to_string(r + 1);
        if (one_step.count(r)) entry += "(" + std::to_string(one_step[r] + 1) + ")";
      }
      row.entries.back() = entry;
    }
  }
  return t;
}

std::string format_table_text(const Table& t) {
  std::ostringstream os;
  os << "No. | (M, pi) | ~";
  for (const auto& s : t.systems) os << " | " << s;
  os << " | c(S) | c(N)\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << i + 1 << " | " << format_pairs(r.triple) << " | " << format_classes(r.triple);
    for (const auto& e : r.entries) os << " | " << (e ? *e : "-");
    os << " | " << r.cS << " | " << r.cN << "\n";
  }
  os << "d0 |  | ";
  for (int v : t.d0) os << " | " << v;
  os << " |  | \n";
  return os.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string format_table_csv(const Table& t) {
  std::ostringstream os;
  os << "no,M_pi,classes";
  for (const auto& s : t.systems) os << "," << s;
  os << ",cS,cN\n";
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    os << i + 1 << "," << csv_field(format_pairs(r.triple)) << ","
       << csv_field(format_classes(r.triple));
    for (const auto& e : r.entries) os << "," << (e ? csv_field(*e) : "-");
    os << "," << r.cS << "," << r.cN << "\n";
  }
  os << "d0,,";
  for (int v : t.d0) os << "," << v;
  os << ",,\n";
  return os.str();
}

}  // namespace sph
