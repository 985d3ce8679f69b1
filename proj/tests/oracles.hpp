#pragma once

// Independent reference computations used by the test suites. Everything in
// here recomputes results from definitions (brute force, exact rationals,
// exhaustive search) and must stay decoupled from the library's own
// algorithms for the checks to mean anything.

#include "starkcol/forms.hpp"
#include "starkcol/integers.hpp"
#include "starkcol/padic.hpp"
#include "starkcol/quadfield.hpp"

#include <map>
#include <string>
#include <vector>

namespace starkcol::oracle {

// minimal (t, u) with t^2 - delta u^2 = +-4, by direct search over u;
// the associated unit (t + u sqrt(delta))/2 is fundamental
struct PellSolution {
    Int t, u;
    int norm; // sign of (t^2 - delta u^2)/4
};
PellSolution pell4_bruteforce(const Int& delta, long u_cap = 2000000);

// Kronecker symbol from first principles: Euler's criterion at odd primes,
// the 8-periodic rule at 2, multiplicativity over a factorization of n.
int kronecker_bruteforce(const Int& a, const Int& n);

// square root of a mod p^k by scanning residues mod p and naive lifting
Int hensel_sqrt_bruteforce(const Int& a, long p, long k);

// partial sum of sum_{n>=1} (-1)^{n+1} z^n / n over exact rationals,
// embedded into Q_p afterwards by the caller
Rat log1p_partial(const Rat& z, long terms);
Rat exp_partial(const Rat& x, long terms);

// all reduced forms of discriminant delta by scanning the full (a, b) box
std::vector<Form> reduced_forms_bruteforce(const Int& delta);

// Composition through united representatives: pick forms in the two classes
// with coprime leading coefficients prime to 2*delta, CRT the middle
// coefficients, and read off (a1 a2, B, *). Independent of the module
// product used by the library.
IdealClass compose_dirichlet(const IdealClass& x, const IdealClass& y);

// full narrow multiplication table over canonical class representatives
std::map<std::pair<std::string, std::string>, std::string>
multiplication_table_bruteforce(const Int& delta);

// exact generalized Bernoulli number from the defining sum over Bernoulli
// polynomials, for a rational-valued character given as a value table
Rat gen_bernoulli_definition(const std::vector<int>& chi_values, long n);

// B_n(x) as an exact rational polynomial evaluation
Rat bernoulli_poly(long n, const Rat& x);
Rat bernoulli_number(long n);

} // namespace starkcol::oracle
