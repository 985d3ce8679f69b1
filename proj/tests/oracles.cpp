#include "oracles.hpp"

#include "starkcol/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace starkcol::oracle {

PellSolution pell4_bruteforce(const Int& delta, long u_cap) {
    for (Int u = 1; u <= u_cap; ++u) {
        Int uu = delta * u * u;
        for (int sign : {-1, +1}) {
            Int tt = uu + 4 * sign;
            if (tt <= 0) continue;
            Int t = isqrt(tt);
            if (t * t == tt) return {t, u, sign};
        }
    }
    throw std::runtime_error("pell oracle: no solution below cap");
}

namespace {

std::vector<std::pair<Int, long>> factor_naive(Int n) {
    std::vector<std::pair<Int, long>> fs;
    for (Int q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            long e = 0;
            while (n % q == 0) {
                n /= q;
                ++e;
            }
            fs.push_back({q, e});
        }
    }
    if (n > 1) fs.push_back({n, 1});
    return fs;
}

int legendre_euler(const Int& a, const Int& p) {
    Int r = pow_mod(mod_floor(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

} // namespace

int kronecker_bruteforce(const Int& a, const Int& n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    Int m = n;
    if (m < 0) {
        m = -m;
        if (a < 0) result = -result;
    }
    for (auto& [q, e] : factor_naive(m)) {
        int s;
        if (q == 2) {
            if (a % 2 == 0) return 0;
            Int r8 = mod_floor(a, Int(8));
            s = (r8 == 1 || r8 == 7) ? 1 : -1;
        } else {
            s = legendre_euler(a, q);
            if (s == 0) return 0;
        }
        for (long i = 0; i < e; ++i) result *= s;
    }
    return result;
}

Int hensel_sqrt_bruteforce(const Int& a, long p, long k) {
    Int r0 = -1;
    for (Int r = 0; r < p; ++r)
        if (mod_floor(r * r - a, Int(p)) == 0) {
            r0 = r;
            break;
        }
    if (r0 < 0) throw std::runtime_error("hensel oracle: not a residue");
    // naive digit-by-digit lift
    Int mod = p;
    Int r = r0;
    for (long i = 1; i < k; ++i) {
        Int next_mod = mod * p;
        bool found = false;
        for (Int d = 0; d < p; ++d) {
            Int cand = r + d * mod;
            if (mod_floor(cand * cand - a, next_mod) == 0) {
                r = cand;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("hensel oracle: lift failed");
        mod = next_mod;
    }
    return r;
}

Rat log1p_partial(const Rat& z, long terms) {
    Rat sum = 0;
    Rat zn = 1;
    for (long n = 1; n <= terms; ++n) {
        zn *= z;
        Rat term = zn / n;
        sum += (n % 2 == 1) ? term : -term;
    }
    return sum;
}

Rat exp_partial(const Rat& x, long terms) {
    Rat sum = 1;
    Rat term = 1;
    for (long n = 1; n <= terms; ++n) {
        term *= x / n;
        sum += term;
    }
    return sum;
}

std::vector<Form> reduced_forms_bruteforce(const Int& delta) {
    std::vector<Form> out;
    Int s = isqrt(delta);
    for (Int b = 1; b <= s; ++b) {
        if (mod_floor(b * b - delta, Int(4)) != 0) continue;
        Int prod = (delta - b * b) / 4; // |a||c|
        if (prod <= 0) continue;
        for (Int aa = 1; aa <= prod; ++aa) {
            if (prod % aa != 0) continue;
            for (int sa : {+1, -1}) {
                Form f{sa * aa, b, -sa * (prod / aa)};
                if (is_reduced(f)) out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end(), form_less);
    return out;
}

IdealClass compose_dirichlet(const IdealClass& x, const IdealClass& y) {
    const Int delta = x.delta();
    if (delta != y.delta()) throw std::runtime_error("oracle: discriminant mismatch");

    // values a = f(u,v) coprime to target: scan small (u,v)
    auto find_rep = [&](const IdealClass& cls, const Int& coprime_to) -> Form {
        const Form f = cls.canon();
        for (Int u = -24; u <= 24; ++u)
            for (Int v = -24; v <= 24; ++v) {
                if (gcd(u, v) != 1) continue; // primitive representations only
                Int a = f.a * u * u + f.b * u * v + f.c * v * v;
                if (a == 0) continue;
                if (gcd(a, coprime_to) != 1) continue;
                // complete (u, v) to a unimodular transform to get an
                // equivalent form with leading coefficient a
                // find (r, s) with u*s - v*r = 1
                Int g, r, ss;
                {
                    // extended gcd on (u, v)
                    Int old_r = u, rr = v, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
                    while (rr != 0) {
                        Int q = old_r / rr;
                        Int tmp = old_r - q * rr; old_r = rr; rr = tmp;
                        tmp = old_s - q * s1; old_s = s1; s1 = tmp;
                        tmp = old_t - q * t1; old_t = t1; t1 = tmp;
                    }
                    g = old_r;
                    if (g != 1 && g != -1) continue;
                    // u*old_s + v*old_t = g
                    if (g == -1) { old_s = -old_s; old_t = -old_t; }
                    r = -old_t;
                    ss = old_s;
                }
                // transform matrix [[u, r],[v, s']] with det u*s' - r*v = 1
                Int det = u * ss - r * v;
                // we have u*old_s + v*old_t = 1 => det of [[u, -old_t],[v, old_s]] = u*old_s + v*old_t = 1
                Int m00 = u, m01 = r, m10 = v, m11 = ss;
                if (det != 1) continue;
                Int A = f.a * m00 * m00 + f.b * m00 * m10 + f.c * m10 * m10;
                Int B = 2 * f.a * m00 * m01 + f.b * (m00 * m11 + m01 * m10) + 2 * f.c * m10 * m11;
                Int C = f.a * m01 * m01 + f.b * m01 * m11 + f.c * m11 * m11;
                if (A != a) continue;
                return Form{A, B, C};
            }
        throw std::runtime_error("oracle: no coprime representative found");
    };

    Form f1 = find_rep(x, 2 * delta);
    Form f2 = find_rep(y, 2 * delta * f1.a);

    // united forms: B = b1 mod 2a1, B = b2 mod 2a2, gcd(a1, a2) = 1
    Int a1 = f1.a, a2 = f2.a;
    Int m1 = 2 * a1, m2 = 2 * a2;
    // CRT with common factor 2: b1 and b2 share parity (both = delta mod 2)
    Int g = gcd(m1, m2); // = 2 since gcd(a1, a2) = 1 up to sign
    Int B = -1;
    for (Int t = 0; t < m2 / g; ++t) {
        Int cand = f1.b + m1 * t;
        if (mod_floor(cand - f2.b, m2) == 0) {
            B = cand;
            break;
        }
    }
    if (B < 0 && true) {
        for (Int t = 0; t < m2; ++t) {
            Int cand = f1.b + m1 * t;
            if (mod_floor(cand - f2.b, m2) == 0) {
                B = cand;
                break;
            }
        }
    }
    if (B < 0) throw std::runtime_error("oracle: CRT failed");
    Int A = a1 * a2;
    Int num = B * B - delta;
    if (mod_floor(num, 4 * A) != 0) throw std::runtime_error("oracle: united form not integral");
    return IdealClass(Form{A, B, num / (4 * A)});
}

std::map<std::pair<std::string, std::string>, std::string>
multiplication_table_bruteforce(const Int& delta) {
    std::vector<Form> reduced = reduced_forms_bruteforce(delta);
    std::vector<IdealClass> classes;
    std::vector<std::string> keys;
    for (const Form& f : reduced) {
        IdealClass c(f);
        std::string k = form_key(c.canon());
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            keys.push_back(k);
            classes.push_back(c);
        }
    }
    std::map<std::pair<std::string, std::string>, std::string> table;
    for (const IdealClass& a : classes)
        for (const IdealClass& b : classes)
            table[{form_key(a.canon()), form_key(b.canon())}] =
                form_key(compose_dirichlet(a, b).canon());
    return table;
}

Rat bernoulli_number(long n) {
    static std::vector<Rat> cache{Rat(1)};
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        // sum_{j<=m} C(m+1, j) B_j = 0 solved for B_m
        Rat acc = 0;
        for (long j = 0; j < m; ++j) {
            Int c = 1;
            for (long t = 0; t < j; ++t) c = c * (m + 1 - t) / (t + 1);
            acc += Rat(c) * cache[static_cast<size_t>(j)];
        }
        cache.push_back(-acc / Rat(m + 1));
    }
    return cache[static_cast<size_t>(n)];
}

Rat bernoulli_poly(long n, const Rat& x) {
    Rat sum = 0;
    for (long k = 0; k <= n; ++k) {
        Int c = 1;
        for (long t = 0; t < k; ++t) c = c * (n - t) / (t + 1);
        sum += Rat(c) * bernoulli_number(k) * boost::multiprecision::pow(x, static_cast<unsigned>(n - k));
    }
    return sum;
}

Rat gen_bernoulli_definition(const std::vector<int>& chi_values, long n) {
    long F = static_cast<long>(chi_values.size());
    Rat sum = 0;
    for (long a = 1; a <= F; ++a)
        sum += Rat(chi_values[static_cast<size_t>(a - 1)]) * bernoulli_poly(n, Rat(a, F));
    Rat Fpow = 1;
    for (long i = 0; i < n - 1; ++i) Fpow *= F;
    return Fpow * sum;
}

} // namespace starkcol::oracle
