#include "starkcol/forms.hpp"
#include "starkcol/error.hpp"

#include <algorithm>
#include <array>

namespace starkcol {

bool form_less(const Form& f, const Form& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
}

namespace {

void check_indefinite(const Form& f) {
    Int d = f.disc();
    if (d <= 0 || is_perfect_square(d))
        fail(ErrorCode::BadDiscriminant, "discriminant must be positive and non-square");
}

// floor(sqrt(delta)) cached per call site by callers that loop
Int root_of(const Int& delta) { return isqrt(delta); }

} // namespace

bool is_reduced(const Form& f) {
    Int delta = f.disc();
    Int s = root_of(delta);
    if (f.b <= 0 || f.b > s) return false; // b < sqrt(delta) iff b <= floor (non-square)
    Int t = 2 * abs(f.a);
    // sqrt(delta) - b < 2|a|  <=>  delta < (2|a| + b)^2
    if (delta >= (t + f.b) * (t + f.b)) return false;
    // 2|a| < sqrt(delta) + b  <=>  (2|a| - b)^2 < delta  (when 2|a| > b)
    if (t > f.b && (t - f.b) * (t - f.b) >= delta) return false;
    return true;
}

Form rho(const Form& f) {
    if (f.c == 0) fail(ErrorCode::ZeroLeadingCoefficient, "degenerate form");
    Int delta = f.disc();
    Int s = root_of(delta);
    Int ac = abs(f.c);
    Int two_c = 2 * ac;
    Int bp;
    if (ac > s) {
        // normalization range -|c| < b' <= |c|
        bp = mod_floor(-f.b, two_c);
        if (bp > ac) bp -= two_c;
    } else {
        // largest b' < sqrt(delta) with b' = -b (mod 2|c|)
        bp = s - mod_floor(s + f.b, two_c);
    }
    Int cp = (bp * bp - delta) / (4 * f.c);
    return Form{f.c, bp, cp};
}

Form reduce(const Form& f) {
    if (f.a == 0) fail(ErrorCode::ZeroLeadingCoefficient, "leading coefficient is zero");
    check_indefinite(f);
    Form g = f;
    for (int i = 0; i < (1 << 20); ++i) {
        if (is_reduced(g)) return g;
        g = rho(g);
    }
    fail(ErrorCode::BadDiscriminant, "reduction failed to terminate");
}

std::vector<Form> cycle_of(const Form& reduced) {
    std::vector<Form> cyc;
    Form g = reduced;
    do {
        cyc.push_back(g);
        g = rho(g);
    } while (g != reduced);
    return cyc;
}

IdealClass::IdealClass(const Form& f) {
    Form r = reduce(f);
    Form best = r;
    Form g = rho(r);
    while (g != r) {
        if (form_less(g, best)) best = g;
        g = rho(g);
    }
    canon_ = best;
}

IdealClass principal_class(const Int& delta) {
    Int b = mod_floor(delta, 2); // delta mod 4 is 0 or 1, so b in {0,1} matches parity
    return IdealClass(Form{Int(1), b, (b * b - delta) / 4});
}

namespace {

// Z-module in the basis (1, w), w = (sigma + sqrt(delta))/2, sigma = delta mod 2,
// given by integer row vectors (x, y) meaning x + y*w.
struct Pair {
    Int x, y;
};

// Hermite form [(A, 0), (X, e)] of the span of the given pairs.
void hnf2(std::vector<Pair> rows, Int& A, Int& X, Int& e) {
    // reduce second column to a single generator by gcd
    while (true) {
        int piv = -1;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].y != 0 && (piv < 0 || abs(rows[i].y) < abs(rows[piv].y))) piv = static_cast<int>(i);
        if (piv < 0) { e = 0; X = 0; break; }
        bool clean = true;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == piv || rows[i].y == 0) continue;
            Int q = rows[i].y / rows[piv].y; // truncated division is fine here
            rows[i].x -= q * rows[piv].x;
            rows[i].y -= q * rows[piv].y;
            if (rows[i].y != 0) clean = false;
        }
        if (clean) {
            if (rows[piv].y < 0) { rows[piv].x = -rows[piv].x; rows[piv].y = -rows[piv].y; }
            e = rows[piv].y;
            X = rows[piv].x;
            std::swap(rows[piv], rows.back());
            rows.pop_back();
            break;
        }
    }
    A = 0;
    for (const Pair& r : rows) A = gcd(A, r.x);
    if (A < 0) A = -A;
    if (A != 0 && e != 0) X = mod_floor(X, A);
}

} // namespace

IdealClass compose(const IdealClass& xc, const IdealClass& yc) {
    if (xc.delta() != yc.delta())
        fail(ErrorCode::DiscriminantMismatch, "composition across discriminants");
    Int delta = xc.delta();
    Int sigma = mod_floor(delta, 2);

    // positive-leading-coefficient representatives (one rho step flips the sign)
    Form f1 = xc.canon();
    if (f1.a < 0) f1 = rho(f1);
    Form f2 = yc.canon();
    if (f2.a < 0) f2 = rho(f2);

    // ideal I(f) = [a, (-b + sqrt(delta))/2] = [a, (-b - sigma)/2 + w]
    Int a1 = f1.a, b1 = f1.b, a2 = f2.a, b2 = f2.b;
    Int m1 = (-b1 - sigma) / 2;
    Int m2 = (-b2 - sigma) / 2;

    // generators of I1*I2 in the basis (1, w); w^2 = sigma*w + (delta - sigma)/4
    Int wsq_const = (delta - sigma * sigma) / 4; // w^2 = wsq_const + sigma*w
    std::vector<Pair> rows;
    rows.push_back({a1 * a2, Int(0)});
    rows.push_back({a1 * m2, a1});
    rows.push_back({a2 * m1, a2});
    // (m1 + w)(m2 + w) = m1 m2 + wsq_const + (m1 + m2 + sigma) w
    rows.push_back({m1 * m2 + wsq_const, m1 + m2 + sigma});

    Int A, X, e;
    hnf2(std::move(rows), A, X, e);
    // I1*I2 = e * J with J = [A/e, X/e + w]
    if (e == 0 || A % e != 0 || X % e != 0 || A == 0)
        fail(ErrorCode::BadDiscriminant, "ideal product is not primitive as expected");
    Int a3 = A / e;
    Int x0 = X / e;
    Int b3 = -(2 * x0 + sigma);
    // normalize b3 mod 2 a3 and build the form
    b3 = mod_floor(b3, 2 * a3);
    Int c3 = (b3 * b3 - delta) / (4 * a3);
    if ((b3 * b3 - delta) % (4 * a3) != 0)
        fail(ErrorCode::BadDiscriminant, "composed form has broken discriminant");
    return IdealClass(Form{a3, b3, c3});
}

IdealClass inverse(const IdealClass& x) {
    const Form& f = x.canon();
    return IdealClass(Form{f.a, -f.b, f.c});
}

IdealClass power(const IdealClass& x, Int e) {
    IdealClass base = e < 0 ? inverse(x) : x;
    if (e < 0) e = -e;
    IdealClass acc = principal_class(x.delta());
    while (e > 0) {
        if (e % 2 == 1) acc = compose(acc, base);
        base = compose(base, base);
        e /= 2;
    }
    return acc;
}

bool equivalent(const Form& f, const Form& g) {
    if (f.disc() != g.disc())
        fail(ErrorCode::DiscriminantMismatch, "equivalence across discriminants");
    Form target = reduce(g);
    Form start = reduce(f);
    Form cur = start;
    do {
        if (cur == target) return true;
        cur = rho(cur);
    } while (cur != start);
    return false;
}

IdealClass prime_form(const Int& delta, const Int& p) {
    int ch = kronecker(delta, p);
    if (ch == -1)
        fail(ErrorCode::InertPrime, "p = " + p.str() + " is inert for delta = " + delta.str());
    Int fourp = 4 * p;
    for (Int b = 0; b < 2 * p; ++b) {
        if (mod_floor(b * b - delta, fourp) == 0)
            return IdealClass(Form{p, b, (b * b - delta) / fourp});
    }
    fail(ErrorCode::BadArgument, "no square root of delta mod 4p; non-prime p?");
}

} // namespace starkcol
