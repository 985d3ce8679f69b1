#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace starkcol {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<boost::multiprecision::gmp_float<80>>;

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Euclidean remainder in [0, m)
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int pow_int(const Int& base, unsigned long e);
Int pow_mod(Int base, Int e, const Int& m);
Int inv_mod(const Int& a, const Int& m); // throws DivisionByZero if not invertible

// Kronecker symbol (a/n), full generality including n <= 0.
int kronecker(Int a, Int n);

// p-adic valuation of a nonzero integer; second member is a / p^val.
std::pair<long, Int> split_valuation(Int a, const Int& p);

bool is_prime(const Int& n); // deterministic for n < 3.3e24 (fixed MR bases)
bool is_square_free(const Int& n);

// ascending primes < bound (bound expected small, <= ~1e7)
std::vector<long> primes_below(long bound);

// digits of |n| little-endian in base b
std::vector<long> digits_base(Int n, long b);

} // namespace starkcol
