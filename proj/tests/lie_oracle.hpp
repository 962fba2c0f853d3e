#pragma once
// Full Chevalley-basis bracket, used only to check structure constants.

#include "sph/rootsys.hpp"

#include <map>

namespace oracle {

using sph::Rat;
using sph::Root;

struct Elt {
  std::map<Root, Rat> e;  // root vectors
  std::vector<Rat> h;     // coefficients on simple coroots

  bool zero() const {
    for (const auto& [r, c] : e)
      if (!sph::is_zero(c)) return false;
    for (const auto& c : h)
      if (!sph::is_zero(c)) return false;
    return true;
  }
};

inline Elt root_vector(const sph::RootSystem& rs, const Root& a) {
  Elt x;
  x.h.assign(rs.rank(), Rat(0));
  x.e[a] = 1;
  return x;
}

inline void axpy(Elt& acc, const Rat& f, const Elt& x) {
  for (const auto& [r, c] : x.e) acc.e[r] += f * c;
  for (size_t i = 0; i < x.h.size(); ++i) acc.h[i] += f * x.h[i];
}

inline Elt bracket(const sph::StructureConstants& sc, const Elt& x, const Elt& y) {
  const auto& rs = sc.system();
  Elt out;
  out.h.assign(rs.rank(), Rat(0));
  for (const auto& [a, ca] : x.e)
    for (const auto& [b, cb] : y.e) {
      Rat c = ca * cb;
      if (sph::is_zero(c)) continue;
      Root s = sph::add(a, b);
      if (sph::is_zero(s)) {
        // [e_a, e_{-a}] = h_a, the coroot of a
        Rat na = rs.norm2(a);
        for (int i = 0; i < rs.rank(); ++i) out.h[i] += c * a[i] * rs.gram(i, i) / na;
      } else if (rs.is_root(s)) {
        out.e[s] += c * sc.N(a, b);
      }
    }
  // [h, e_b] = <b, h> e_b
  auto act = [&](const std::vector<Rat>& h, const Root& b) {
    Rat v = 0;
    for (int i = 0; i < rs.rank(); ++i) v += h[i] * rs.pairing(b, i);
    return v;
  };
  for (const auto& [b, cb] : y.e) out.e[b] += act(x.h, b) * cb;
  for (const auto& [a, ca] : x.e) out.e[a] -= act(y.h, a) * ca;
  return out;
}

}  // namespace oracle
