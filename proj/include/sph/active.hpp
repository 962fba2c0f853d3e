#pragma once

#include "sph/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sph {

struct ActivePair {
  Root alpha;
  int pi;
};

bool is_typical(const Root& a);

// One matched row of the table of admissible (alpha, pi) pairs.
struct AdmissibleMatch {
  std::vector<int> pi_options;  // ambient simple-root indices
  int starred = -1;             // for non-typical rows: the simple root used by the reduction
};

std::optional<AdmissibleMatch> match_admissible(const RootSystem& rs, const Root& a);
std::vector<int> admissible_pis(const RootSystem& rs, const Root& a);
bool admissible(const RootSystem& rs, const ActivePair& p);

// F(alpha): alpha and its subordinate roots, in canonical order.
std::vector<Root> family(const RootSystem& rs, const ActivePair& p);

// The simple root of beta governing the splits beta = b1 + b2 relative to the set psi.
// Returns -1 if no simple root (or more than one) has the property.
int associated_simple_root(const RootSystem& rs, const std::vector<Root>& psi, const Root& beta);
int member_pi(const RootSystem& rs, const ActivePair& p, const Root& beta);

enum class PairTag { D0, D1, E1, D2, E2, INVALID };
enum class Refined { NONE, E1PRIME, E2PRIME };

std::string to_string(PairTag t);
std::string to_string(Refined r);

struct PairWitness {
  int delta = -1;              // shared node for D1/E1/E1'
  std::vector<int> arm_a;      // branch arms, listed from the branch node outward
  std::vector<int> arm_b;
  std::vector<int> chain;      // branch node first, then gamma_1..gamma_r
};

struct PairClass {
  PairTag tag = PairTag::INVALID;
  Refined refined = Refined::NONE;
  std::optional<PairWitness> witness;
};

PairClass classify_pair(const RootSystem& rs, const ActivePair& a, const ActivePair& b,
                        bool equivalent);

}  // namespace sph
