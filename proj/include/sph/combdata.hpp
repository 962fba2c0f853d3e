#pragma once

#include "sph/active.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sph {

// (M, pi, ~): maximal active roots, their simple roots, and the partition of M.
struct CombTriple {
  SystemPtr sys;
  std::vector<Root> M;
  std::vector<int> pi;
  std::vector<std::vector<int>> classes;

  const RootSystem& system() const { return *sys; }
  ActivePair pair(int i) const { return {M[i], pi[i]}; }
  int class_of(int i) const;
  bool equivalent(int i, int j) const { return class_of(i) == class_of(j); }
  std::vector<int> support_union() const;
};

// Sorts M canonically, carries pi and the partition along, and checks well-formedness.
CombTriple make_triple(SystemPtr sys, std::vector<Root> M, std::vector<int> pi,
                       std::vector<std::vector<int>> classes);

bool operator==(const CombTriple& a, const CombTriple& b);
bool operator<(const CombTriple& a, const CombTriple& b);

struct TorusSpec {
  IntMatrix vanishing;  // Hermite normal form of the lattice K
  int rank_T = 0;

  static TorusSpec from_rows(const IntMatrix& rows, int rank_T);  // saturates
  static TorusSpec full(int rank_T) { return {{}, rank_T}; }
  int rank_S() const { return rank_T - static_cast<int>(vanishing.size()); }
  // tau(a) == tau(b)
  bool same_weight(const Root& a, const Root& b) const;
};

struct ValidationReport {
  std::optional<bool> A, D, E, C, T;
  std::optional<bool> A_reduced, D_reduced, E_reduced;
  std::vector<std::string> failures;

  bool ok() const;
};

ValidationReport validate(const CombTriple& t, const std::optional<TorusSpec>& torus = std::nullopt);
ValidationReport check_reduced(const CombTriple& t);
bool is_valid(const CombTriple& t);    // (A), (D), (E), (C)
bool is_reduced(const CombTriple& t);  // (A'), (D'), (E'), (C)

TorusSpec largest_torus(const CombTriple& t);

// (c(S), c(N))
std::pair<int, int> codims(const CombTriple& t);

// Compact notation "(12,1),(34,3)" and "12~34" with 1-based simple-root labels.
std::string format_pairs(const CombTriple& t);
std::string format_classes(const CombTriple& t);

}  // namespace sph
