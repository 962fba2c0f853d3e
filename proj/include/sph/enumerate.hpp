#pragma once

#include "sph/combdata.hpp"
#include "sph/transform.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sph {

struct Catalog {
  SystemPtr sys;
  std::vector<int> support;
  std::vector<CombTriple> triples;  // canonical order
  std::vector<std::pair<int, int>> codims;
  std::vector<std::vector<int>> orbits;  // filled by compute_orbits
  std::vector<int> orbit_of;
  std::vector<OrbitEdge> transitions;  // one-step edges between distinct catalog entries

  int find(const CombTriple& t) const;
};

// All reduced triples with Supp M equal to support.
Catalog enumerate_reduced(SystemPtr sys, const std::vector<int>& support, int jobs = 1);
// All triples passing (A), (D), (E), (C) with Supp M equal to support; rank at most 3.
Catalog enumerate_valid(SystemPtr sys, const std::vector<int>& support, int jobs = 1);

// Groups the catalog into orbits. Reduced catalogs may use the reduced-only search.
void compute_orbits(Catalog& c, bool reduced_only);

std::vector<int> all_nodes(const RootSystem& rs);

int d0(SystemPtr sys, bool reduced_only = true);

// Sum of d0 over all subsets of simple roots, memoized by diagram.
int d(SystemPtr sys, std::map<std::string, int>* memo = nullptr);
// Orbits of reduced triples over all supports, counted inside sys itself.
int d_direct(SystemPtr sys);

struct TableRow {
  CombTriple triple;
  std::vector<std::optional<std::string>> entries;  // per system; nullopt if not reduced there
  int cS = 0, cN = 0;
};

struct Table {
  std::vector<std::string> systems;
  std::vector<TableRow> rows;
  std::vector<int> d0;
};

// Systems must share the underlying graph. Rows are the union of their reduced triples.
Table make_table(const std::vector<SystemPtr>& systems, int jobs = 1);
std::string format_table_text(const Table& t);
std::string format_table_csv(const Table& t);

}  // namespace sph
