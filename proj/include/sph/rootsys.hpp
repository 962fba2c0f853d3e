#pragma once

#include "sph/linalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace sph {

// Coefficients over the simple roots of the ambient system.
using Root = std::vector<int>;

int height(const Root& a);
std::vector<int> support(const Root& a);
Root add(const Root& a, const Root& b);
Root sub(const Root& a, const Root& b);
Root neg(const Root& a);
bool is_zero(const Root& a);

// Height first, then larger coefficient vectors first (so alpha_1 precedes alpha_2).
bool root_less(const Root& a, const Root& b);

struct Component {
  char type;
  int rank;
  std::vector<int> nodes;  // ambient index of canonical alpha_1, alpha_2, ...
};

class RootSystem {
 public:
  // spec: list of (type letter, rank) glued in order.
  static RootSystem build(const std::vector<std::pair<char, int>>& spec);
  // Labels such as "A2", "B4", "A1xB2".
  static RootSystem parse(const std::string& label);
  // Any symmetric Gram matrix of a finite root system basis; components are classified.
  static RootSystem from_gram(const RatMatrix& gram);

  int rank() const { return static_cast<int>(gram_.size()); }
  const std::vector<Component>& components() const { return components_; }
  std::string label() const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int index_of(const Root& a) const;  // position in positive_roots, -1 if absent
  bool is_positive_root(const Root& a) const { return index_of(a) >= 0; }
  bool is_root(const Root& a) const;
  Root simple(int i) const;

  int cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_i, alpha_j^vee>
  const Rat& gram(int i, int j) const { return gram_[i][j]; }
  const RatMatrix& gram_matrix() const { return gram_; }
  Rat inner(const Root& a, const Root& b) const;
  int pairing(const Root& a, int j) const;  // <a, alpha_j^vee>
  Rat norm2(const Root& a) const { return inner(a, a); }

  int bond(int i, int j) const;              // number of edges between nodes, 0..3
  bool adjacent(int i, int j) const { return i != j && bond(i, j) > 0; }
  bool arrow_toward(int from, int to) const;  // multiple edge with `to` the shorter root
  std::vector<int> neighbours(int i) const;

  Root reflect(const Root& a, int delta) const;

 private:
  void finish();
  RatMatrix gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Component> components_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
};

using SystemPtr = std::shared_ptr<const RootSystem>;

// Canonical Gram matrix of a simple type (short roots squared length 2).
RatMatrix canonical_gram(char type, int rank);
bool valid_type(char type, int rank);
// Components of the diagram of a Gram matrix, with canonical numbering.
std::vector<Component> classify_diagram(const RatMatrix& gram);

bool is_connected(const RootSystem& rs, const std::vector<int>& nodes);
bool is_terminal(const RootSystem& rs, int delta, const std::vector<int>& nodes);
int degree_in(const RootSystem& rs, int node, const std::vector<int>& nodes);

struct Subsystem {
  RootSystem system;
  std::vector<int> embedding;  // subsystem index -> ambient index
  Root lift(const Root& a) const;
  Root restrict(const Root& a) const;  // a must be supported in the subset
};
Subsystem subsystem(const RootSystem& rs, const std::vector<int>& subset);

// All bijections canonical index -> node of a connected system of type (type, rank)
// preserving the Cartan matrix.
std::vector<std::vector<int>> canonical_labelings(const RootSystem& rs, const Component& c);

// Key identifying the diagram up to isomorphism, e.g. "A1xB2" with sorted components.
std::string diagram_key(const RootSystem& rs);

int count_decompositions(const RootSystem& rs, const Root& a);

class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs);
  // N(a, b) for roots a, b of any sign; 0 when a + b is not a root.
  int N(const Root& a, const Root& b) const;
  const RootSystem& system() const { return rs_; }

 private:
  int positive_N(int a, int b) const;
  int mixed_N(const Root& x, const Root& negb) const;
  RootSystem rs_;
  std::vector<std::vector<int>> pos_;  // indexed by positive-root positions
};

}  // namespace sph
