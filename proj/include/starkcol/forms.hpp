#pragma once

#include "starkcol/integers.hpp"

#include <vector>

namespace starkcol {

// Primitive integral binary quadratic form a x^2 + b xy + c y^2 of positive
// non-square discriminant b^2 - 4ac.
struct Form {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const Form& o) const { return !(*this == o); }
};

// strict lexicographic order on (a, b, c)
bool form_less(const Form& f, const Form& g);

// reduction window for indefinite forms: 0 < b < sqrt(delta) and
// sqrt(delta) - b < 2|a| < sqrt(delta) + b (exact integer comparisons)
bool is_reduced(const Form& f);

// one step of the reduction operator rho
Form rho(const Form& f);

// reduced form properly equivalent to f; O(log max|a,b,c|) steps
Form reduce(const Form& f);

// the full cycle of reduced forms through `reduced`
std::vector<Form> cycle_of(const Form& reduced);

// Narrow ideal class: canonical representative is the lexicographically
// least (a, b, c) over the reduction cycle, which is independent of the
// representative one starts from.
class IdealClass {
public:
    IdealClass() = default;
    explicit IdealClass(const Form& f); // canonicalizes

    const Form& canon() const { return canon_; }
    Int delta() const { return canon_.disc(); }

    bool operator==(const IdealClass& o) const { return canon_ == o.canon_; }
    bool operator!=(const IdealClass& o) const { return !(*this == o); }
    bool operator<(const IdealClass& o) const { return form_less(canon_, o.canon_); }

private:
    Form canon_;
};

IdealClass principal_class(const Int& delta);

// Gauss composition, computed as the Z-module product of the associated
// ideals brought to Hermite normal form; group law of the narrow class group.
IdealClass compose(const IdealClass& x, const IdealClass& y);
IdealClass inverse(const IdealClass& x);
IdealClass power(const IdealClass& x, Int e);

// true iff f and g lie in the same narrow class (walks f's cycle)
bool equivalent(const Form& f, const Form& g);

// class of a form (p, b, *) with b^2 = delta mod 4p, least non-negative b;
// requires chi(delta, p) != -1
IdealClass prime_form(const Int& delta, const Int& p);

} // namespace starkcol
