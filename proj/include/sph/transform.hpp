#pragma once

#include "sph/combdata.hpp"

#include <vector>

namespace sph {

std::vector<int> regular_active_simple_roots(const CombTriple& t);

// Throws if delta is not a regular active simple root.
CombTriple elementary_transform(const CombTriple& t, int delta);

struct DeltaProfile {
  int m0 = 0, m11 = 0, m12 = 0, m13 = 0, m21 = 0, m22 = 0, m23 = 0;
  int m1() const { return m11 + m12 + m13; }
  int m2() const { return m21 + m22 + m23; }
};

DeltaProfile delta_profile(const CombTriple& t, int delta);

enum class ReducedVerdict { UNCHANGED, REDUCED_NEW, NOT_REDUCED };
std::string to_string(ReducedVerdict v);

ReducedVerdict preserves_reduced(const CombTriple& t, int delta);

struct OrbitEdge {
  int from, to, center;
};

struct OrbitGraph {
  std::vector<CombTriple> nodes;
  std::vector<OrbitEdge> edges;  // self-loops included
  std::vector<std::vector<int>> orbits;

  int find(const CombTriple& t) const;
};

// Component of t under elementary transformations. With reduced_only, only
// transformations that keep the set reduced are followed.
OrbitGraph orbit(const CombTriple& t, bool reduced_only);

struct Reduction {
  CombTriple result;
  std::vector<int> path;  // centers in application order
};

Reduction reduce_to_reduced(const CombTriple& t);

}  // namespace sph
