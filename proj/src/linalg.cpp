#include "sph/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace sph {

std::string to_string(const Rat& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rat f = m[i][c];
      for (int k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    RatRow r;
    r.reserve(row.size());
    for (long long x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

static IntRow primitive(const RatRow& v) {
  long long l = 1;
  for (const auto& x : v) l = std::lcm(l, x.denominator());
  IntRow out(v.size());
  long long g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = (v[i] * l).numerator();
    g = std::gcd(g, out[i] < 0 ? -out[i] : out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

IntMatrix rational_kernel(const IntMatrix& m, int ncols) {
  RatMatrix r = to_rational(m);
  for (auto& row : r) row.resize(ncols);
  auto piv = rref(r);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : piv) is_pivot[c] = true;
  IntMatrix basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatRow v(ncols, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.push_back(primitive(v));
  }
  return basis;
}

IntMatrix integer_kernel(const IntMatrix& m, int ncols) {
  IntMatrix a = m;
  IntMatrix u(ncols, IntRow(ncols, 0));
  for (int i = 0; i < ncols; ++i) u[i][i] = 1;
  auto col_op = [&](int dst, int src, long long f) {  // col dst -= f * col src
    for (auto& row : a) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };
  auto col_swap = [&](int x, int y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  int c = 0;
  for (size_t i = 0; i < a.size() && c < ncols; ++i) {
    while (true) {
      int best = -1;
      for (int k = c; k < ncols; ++k)
        if (a[i][k] != 0 && (best < 0 || std::llabs(a[i][k]) < std::llabs(a[i][best]))) best = k;
      if (best < 0) break;
      col_swap(c, best);
      bool done = true;
      for (int k = c + 1; k < ncols; ++k) {
        if (a[i][k] == 0) continue;
        col_op(k, c, a[i][k] / a[i][c]);
        if (a[i][k] != 0) done = false;
      }
      if (done) break;
    }
    if (a[i][c] != 0) ++c;
  }
  IntMatrix basis;
  for (int k = c; k < ncols; ++k) {
    IntRow v(ncols);
    for (int r = 0; r < ncols; ++r) v[r] = u[r][k];
    basis.push_back(v);
  }
  return hermite_normal_form(basis, ncols);
}

IntMatrix hermite_normal_form(IntMatrix m, int ncols) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < rows; ++c) {
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best < 0 || std::llabs(m[i][c]) < std::llabs(m[best][c]))) best = i;
      if (best < 0) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        long long f = m[i][c] / m[r][c];
        for (int k = 0; k < ncols; ++k) m[i][k] -= f * m[r][k];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows && m[r][c] != 0) {
      if (m[r][c] < 0)
        for (auto& x : m[r]) x = -x;
      for (int i = 0; i < r; ++i) {
        long long f = m[i][c] / m[r][c];
        if (m[i][c] - f * m[r][c] < 0) --f;
        if (f != 0)
          for (int k = 0; k < ncols; ++k) m[i][k] -= f * m[r][k];
      }
      ++r;
    }
  }
  m.resize(r);
  return m;
}

IntMatrix saturate(const IntMatrix& m, int ncols) {
  IntMatrix nonzero;
  for (const auto& row : m)
    for (long long x : row)
      if (x != 0) {
        nonzero.push_back(row);
        break;
      }
  if (nonzero.empty()) return {};
  IntMatrix orth = rational_kernel(nonzero, ncols);
  if (orth.empty()) {
    IntMatrix id(ncols, IntRow(ncols, 0));
    for (int i = 0; i < ncols; ++i) id[i][i] = 1;
    return id;
  }
  return integer_kernel(orth, ncols);
}

bool in_row_space(const IntMatrix& m, const IntRow& v) {
  IntMatrix ext = m;
  RatMatrix base = to_rational(m);
  ext.push_back(v);
  if (m.empty()) {
    for (long long x : v)
      if (x != 0) return false;
    return true;
  }
  return rank(base) == rank(to_rational(ext));
}

}  // namespace sph
