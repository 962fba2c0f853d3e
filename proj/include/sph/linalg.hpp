#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sph {

using Rat = boost::rational<long long>;
using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;
using IntRow = std::vector<long long>;
using IntMatrix = std::vector<IntRow>;

// Avoids boost::rational's mixed comparisons, which recurse under C++20 rewriting.
inline bool is_zero(const Rat& q) { return q.numerator() == 0; }

std::string to_string(const Rat& q);
Rat parse_rational(const std::string& s);

// Row-reduces in place; returns the pivot column of each nonzero row.
std::vector<int> rref(RatMatrix& m);
int rank(RatMatrix m);
RatMatrix to_rational(const IntMatrix& m);

// Basis of {x : m x = 0}, scaled to primitive integer vectors.
IntMatrix rational_kernel(const IntMatrix& m, int ncols);

// Z-basis of the integer solutions of m x = 0.
IntMatrix integer_kernel(const IntMatrix& m, int ncols);

// Canonical row Hermite normal form of the lattice spanned by the rows (zero rows dropped).
IntMatrix hermite_normal_form(IntMatrix m, int ncols);

// Z^n intersected with the rational span of the rows, in Hermite normal form.
IntMatrix saturate(const IntMatrix& m, int ncols);

// True when v lies in the rational row space of m.
bool in_row_space(const IntMatrix& m, const IntRow& v);

}  // namespace sph
