#include "sph/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sph {

int height(const Root& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::vector<int> support(const Root& a) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[i] != 0) s.push_back(i);
  return s;
}

Root add(const Root& a, const Root& b) {
  Root r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Root sub(const Root& a, const Root& b) {
  Root r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Root neg(const Root& a) {
  Root r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const Root& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool root_less(const Root& a, const Root& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

bool valid_type(char type, int n) {
  switch (type) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

RatMatrix canonical_gram(char type, int n) {
  if (!valid_type(type, n))
    throw std::invalid_argument(std::string("invalid Dynkin type ") + type + std::to_string(n));
  RatMatrix g(n, RatRow(n, Rat(0)));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = Rat(v); };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 2 : 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i < n; ++i) g[i][i] = (i == n - 1) ? 4 : 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':  // chain alpha_1..alpha_{n-2}, fork alpha_{n-1}, alpha_n
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 3 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 2, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':  // Bourbaki: 1-3-4-5-6-7-8, 2 attached to 4
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 short; alpha_3, alpha_4 long
      g[0][0] = g[1][1] = 2;
      g[2][2] = g[3][3] = 4;
      link(0, 1, -1);
      link(1, 2, -2);
      link(2, 3, -2);
      break;
    case 'G':  // alpha_1 short
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

static std::vector<std::vector<int>> cartan_of(const RatMatrix& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = 2 * g[i][j] / g[j][j];
      if (v.denominator() != 1) throw std::invalid_argument("Gram matrix is not crystallographic");
      c[i][j] = static_cast<int>(v.numerator());
    }
  return c;
}

// Bijections canonical index -> nodes[k] with equal Cartan entries.
static std::vector<std::vector<int>> match_labelings(const std::vector<std::vector<int>>& cartan,
                                                     const std::vector<int>& nodes, char type,
                                                     int n, bool first_only) {
  std::vector<std::vector<int>> out;
  if (static_cast<int>(nodes.size()) != n || !valid_type(type, n)) return out;
  auto canon = cartan_of(canonical_gram(type, n));
  std::vector<int> map(n, -1);
  std::vector<bool> used(nodes.size(), false);
  std::function<void(int)> rec = [&](int k) {
    if (first_only && !out.empty()) return;
    if (k == n) {
      out.push_back(map);
      return;
    }
    for (size_t c = 0; c < nodes.size(); ++c) {
      if (used[c]) continue;
      int v = nodes[c];
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = cartan[v][map[j]] == canon[k][j] && cartan[map[j]][v] == canon[j][k];
      if (!ok) continue;
      used[c] = true;
      map[k] = v;
      rec(k + 1);
      used[c] = false;
    }
  };
  rec(0);
  return out;
}

std::vector<Component> classify_diagram(const RatMatrix& gram) {
  auto cartan = cartan_of(gram);
  const int n = static_cast<int>(gram.size());
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = s;
    for (size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && cartan[nodes[k]][j] != 0) {
          comp[j] = s;
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    const int r = static_cast<int>(nodes.size());
    bool found = false;
    for (char t : std::string("ABCDEFG")) {
      auto m = match_labelings(cartan, nodes, t, r, true);
      if (!m.empty()) {
        out.push_back({t, r, m.front()});
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("Gram matrix is not of finite type");
  }
  return out;
}

std::vector<std::vector<int>> canonical_labelings(const RootSystem& rs, const Component& c) {
  std::vector<std::vector<int>> cartan(rs.rank(), std::vector<int>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) cartan[i][j] = rs.cartan(i, j);
  std::vector<int> nodes = c.nodes;
  std::sort(nodes.begin(), nodes.end());
  return match_labelings(cartan, nodes, c.type, c.rank, false);
}

RootSystem RootSystem::from_gram(const RatMatrix& gram) {
  RootSystem rs;
  rs.gram_ = gram;
  rs.cartan_ = cartan_of(gram);
  rs.components_ = classify_diagram(gram);
  rs.finish();
  return rs;
}

RootSystem RootSystem::build(const std::vector<std::pair<char, int>>& spec) {
  int total = 0;
  for (auto [t, r] : spec) {
    if (!valid_type(t, r))
      throw std::invalid_argument(std::string("invalid Dynkin type ") + t + std::to_string(r));
    total += r;
  }
  RatMatrix g(total, RatRow(total, Rat(0)));
  std::vector<Component> comps;
  int off = 0;
  for (auto [t, r] : spec) {
    auto block = canonical_gram(t, r);
    Component c{t, r, {}};
    for (int i = 0; i < r; ++i) {
      c.nodes.push_back(off + i);
      for (int j = 0; j < r; ++j) g[off + i][off + j] = block[i][j];
    }
    comps.push_back(c);
    off += r;
  }
  RootSystem rs;
  rs.gram_ = g;
  rs.cartan_ = cartan_of(g);
  rs.components_ = comps;
  rs.finish();
  return rs;
}

RootSystem RootSystem::parse(const std::string& label) {
  std::vector<std::pair<char, int>> spec;
  std::stringstream ss(label);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
      throw std::invalid_argument("cannot parse system label '" + label + "'");
    for (size_t i = 1; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw std::invalid_argument("cannot parse system label '" + label + "'");
    spec.emplace_back(part[0], std::stoi(part.substr(1)));
  }
  if (spec.empty()) throw std::invalid_argument("empty system label");
  return build(spec);
}

void RootSystem::finish() {
  const int n = rank();
  std::set<Root> seen;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    layer.push_back(simple(i));
    seen.insert(layer.back());
  }
  positive_ = layer;
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const auto& b : layer)
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Root down = b;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        int q = p - pairing(b, i);
        if (q <= 0) continue;
        Root up = b;
        up[i] += 1;
        if (seen.insert(up).second) next.push_back(up);
      }
    positive_.insert(positive_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(positive_.begin(), positive_.end(), root_less);
  index_.clear();
  for (int i = 0; i < static_cast<int>(positive_.size()); ++i) index_[positive_[i]] = i;
}

std::string RootSystem::label() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "x";
    s += c.type + std::to_string(c.rank);
  }
  return s;
}

int RootSystem::index_of(const Root& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& a) const {
  return index_.count(a) > 0 || index_.count(neg(a)) > 0;
}

Root RootSystem::simple(int i) const {
  Root r(rank(), 0);
  r[i] = 1;
  return r;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat s = 0;
  for (int i = 0; i < rank(); ++i)
    if (a[i] != 0)
      for (int j = 0; j < rank(); ++j)
        if (b[j] != 0) s += gram_[i][j] * a[i] * b[j];
  return s;
}

int RootSystem::pairing(const Root& a, int j) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += a[k] * cartan_[k][j];
  return s;
}

int RootSystem::bond(int i, int j) const { return i == j ? 0 : cartan_[i][j] * cartan_[j][i]; }

bool RootSystem::arrow_toward(int from, int to) const {
  return bond(from, to) >= 2 && gram_[to][to] < gram_[from][from];
}

std::vector<int> RootSystem::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 0; j < rank(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

Root RootSystem::reflect(const Root& a, int delta) const {
  if (!is_root(a)) throw std::invalid_argument("reflect: argument is not a root");
  Root r = a;
  r[delta] -= pairing(a, delta);
  return r;
}

int degree_in(const RootSystem& rs, int node, const std::vector<int>& nodes) {
  int d = 0;
  for (int v : nodes)
    if (rs.adjacent(node, v)) ++d;
  return d;
}

bool is_connected(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) return false;
  std::vector<int> reached{nodes[0]};
  std::set<int> in(nodes.begin(), nodes.end()), seen{nodes[0]};
  for (size_t k = 0; k < reached.size(); ++k)
    for (int v : rs.neighbours(reached[k]))
      if (in.count(v) && seen.insert(v).second) reached.push_back(v);
  return reached.size() == in.size();
}

bool is_terminal(const RootSystem& rs, int delta, const std::vector<int>& nodes) {
  return degree_in(rs, delta, nodes) == 1;
}

Root Subsystem::lift(const Root& a) const {
  int n = 0;
  for (int v : embedding) n = std::max(n, v + 1);
  Root r(n, 0);
  for (size_t i = 0; i < embedding.size(); ++i) r[embedding[i]] = a[i];
  return r;
}

Root Subsystem::restrict(const Root& a) const {
  Root r(embedding.size());
  for (size_t i = 0; i < embedding.size(); ++i) r[i] = a[embedding[i]];
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && std::find(embedding.begin(), embedding.end(), static_cast<int>(k)) == embedding.end())
      throw std::invalid_argument("root is not supported in the subsystem");
  return r;
}

Subsystem subsystem(const RootSystem& rs, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  RatMatrix g(s.size(), RatRow(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) g[i][j] = rs.gram(s[i], s[j]);
  return Subsystem{RootSystem::from_gram(g), s};
}

std::string diagram_key(const RootSystem& rs) {
  auto comps = classify_diagram(rs.gram_matrix());
  std::vector<std::string> parts;
  for (const auto& c : comps) parts.push_back(c.type + std::to_string(c.rank));
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "x") + p;
  return s;
}

int count_decompositions(const RootSystem& rs, const Root& a) {
  int n = 0;
  for (const auto& b : rs.positive_roots()) {
    Root c = sub(a, b);
    if (rs.is_positive_root(c)) ++n;
  }
  return n / 2;
}

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(rs) {
  const int P = rs_.num_positive();
  pos_.assign(P, std::vector<int>(P, 0));
  const auto& roots = rs_.positive_roots();
  for (int x = 0; x < P; ++x) {
    const Root& xi = roots[x];
    if (height(xi) < 2) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < P; ++a) {
      int b = rs_.index_of(sub(xi, roots[a]));
      if (b > a) pairs.emplace_back(a, b);
    }
    // pairs are sorted by first index: the first is the extraspecial pair
    auto [a1, b1] = pairs.front();
    int p1 = 0;
    Root down = roots[b1];
    while (true) {
      down = sub(down, roots[a1]);
      if (!rs_.is_root(down)) break;
      ++p1;
    }
    pos_[a1][b1] = p1 + 1;
    pos_[b1][a1] = -(p1 + 1);
    const Root& ra1 = roots[a1];
    const Root& rb1 = roots[b1];
    for (size_t k = 1; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      const Root& ra = roots[a];
      const Root& rb = roots[b];
      Rat t = 0;
      Root d1 = sub(rb, ra1);
      if (rs_.is_root(d1)) t += Rat(N(rb, neg(ra1)) * N(ra, neg(rb1))) / rs_.norm2(d1);
      Root d2 = sub(ra, ra1);
      if (rs_.is_root(d2)) t += Rat(N(neg(ra1), ra) * N(rb, neg(rb1))) / rs_.norm2(d2);
      Rat v = rs_.norm2(xi) / (p1 + 1) * t;
      if (v.denominator() != 1 || is_zero(v))
        throw std::logic_error("structure constant recursion produced a non-integer");
      pos_[a][b] = static_cast<int>(v.numerator());
      pos_[b][a] = -pos_[a][b];
    }
  }
}

int StructureConstants::positive_N(int a, int b) const { return pos_[a][b]; }

int StructureConstants::mixed_N(const Root& x, const Root& negb) const {
  Root b = neg(negb);
  Root z = sub(x, b);
  if (is_zero(z) || !rs_.is_root(z)) return 0;
  Rat v;
  int iz = rs_.index_of(z);
  if (iz >= 0) {
    v = -rs_.norm2(z) / rs_.norm2(x) * positive_N(rs_.index_of(b), iz);
  } else {
    Root c = neg(z);
    v = rs_.norm2(c) / rs_.norm2(b) * positive_N(rs_.index_of(c), rs_.index_of(x));
  }
  if (v.denominator() != 1) throw std::logic_error("non-integral structure constant");
  return static_cast<int>(v.numerator());
}

int StructureConstants::N(const Root& a, const Root& b) const {
  Root s = add(a, b);
  if (is_zero(s) || !rs_.is_root(s)) return 0;
  int ia = rs_.index_of(a), ib = rs_.index_of(b);
  if (ia >= 0 && ib >= 0) return positive_N(ia, ib);
  if (ia < 0 && ib < 0) return -positive_N(rs_.index_of(neg(a)), rs_.index_of(neg(b)));
  if (ia >= 0) return mixed_N(a, b);
  return -mixed_N(b, a);
}

}  // namespace sph
