#pragma once

// Exact arithmetic used everywhere: arbitrary-precision integers for
// lengths and colengths, rationals for fitted coefficients and formula
// values.  No floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace reesmult {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) for integer n (possibly negative) and k >= 0, via the falling
// product.  C(n, k) = 0 for k < 0.
inline Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long i = 0; i < k; ++i) num *= n - i;
    Int den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    return num / den;  // always exact
}

inline Int factorial(long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int ipow(Int b, long e) {
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

inline Int pow2(long e) { return ipow(2, e); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact conversion; caller must have checked is_integer.
inline Int to_int(const Rat& r) { return numerator(r); }

inline std::string rat_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// All tuples q >= 0 with sum(q) == total, in lexicographic order.
std::vector<std::vector<int>> compositions(int nvars, int total);

// All tuples q >= 0 with sum(q) <= total (a simplex lower set), ordered by
// total degree then lexicographically.
std::vector<std::vector<int>> lower_simplex(int nvars, int total);

// Subsets of {0,..,n-1} by increasing cardinality, lexicographic within
// each cardinality.  Includes the empty set.
std::vector<std::vector<int>> subsets_by_cardinality(int n);

}  // namespace reesmult
