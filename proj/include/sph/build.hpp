#pragma once

#include "sph/combdata.hpp"

#include <map>
#include <vector>

namespace sph {

struct ActiveSet {
  std::vector<Root> psi;                  // canonical order
  std::vector<int> pi_ext;                // per element of psi
  std::vector<bool> in_M;
  std::vector<std::vector<int>> classes;  // indices into psi, canonical order
  std::vector<int> class_of;

  int index_of(const Root& a) const;  // -1 if not in psi
  bool class_in_M(int c) const { return in_M[classes[c][0]]; }
};

ActiveSet expand_psi(const CombTriple& t);

// One row per class of aset, over the class members in order.
std::vector<RatRow> build_functionals(const RootSystem& rs, const ActiveSet& aset,
                                      const StructureConstants& sc);

// Sparse vector over positive-root indices.
using Vec = std::map<int, Rat>;

struct SubalgebraModel {
  SystemPtr sys;
  TorusSpec torus;
  ActiveSet aset;
  std::vector<RatRow> xi;
  std::vector<Vec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

SubalgebraModel build_subalgebra(const CombTriple& t, const TorusSpec& torus,
                                 const StructureConstants& sc);
SubalgebraModel build_subalgebra(const CombTriple& t, const TorusSpec& torus);

// [x, y] inside the positive nilpotent part.
Vec bracket(const RootSystem& rs, const StructureConstants& sc, const Vec& x, const Vec& y);

bool is_weight_vector(const SubalgebraModel& m, const Vec& v);
bool verify_closure(const SubalgebraModel& m, const StructureConstants& sc);
bool check_sphericity(const SubalgebraModel& m);

}  // namespace sph
