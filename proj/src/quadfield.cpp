#include "starkcol/quadfield.hpp"
#include "starkcol/error.hpp"

namespace starkcol {

QuadElement mul(const QuadElement& a, const QuadElement& b, const Int& D) {
    return {a.x * b.x + Rat(D) * a.y * b.y, a.x * b.y + a.y * b.x};
}

namespace {

// Fundamental unit from the regular continued fraction of sqrt(D)
// (D = 2,3 mod 4) or (1+sqrt(D))/2 (D = 1 mod 4). Expands the quadratic
// irrational (P + sqrt(D))/Q exactly and stops at the first convergent
// whose associated element has norm +-1; that element generates the unit
// group mod {+-1}.
QuadElement fundamental_unit(const Int& D, int& norm_out) {
    bool half = (mod_floor(D, 4) == 1);
    Int P = half ? Int(1) : Int(0);
    Int Q = half ? Int(2) : Int(1);
    Int s = isqrt(D);

    Int p_prev = 1, q_prev = 0; // convergent p_{-1}/q_{-1}
    Int p_cur = 0, q_cur = 1;   // placeholder for p_{-2}... swapped below
    // standard recurrence: p_i = a_i p_{i-1} + p_{i-2}
    Int p2 = 0, q2 = 1, p1 = 1, q1 = 0;

    for (int iter = 0; iter < (1 << 22); ++iter) {
        Int a = (P + s) / Q; // floor((P + sqrt(D))/Q), Q > 0 throughout
        Int pn = a * p1 + p2;
        Int qn = a * q1 + q2;
        if (mpz_sizeinbase(pn.backend().data(), 2) > kUnitBitBound)
            fail(ErrorCode::UnitSizeExceeded, "continued-fraction convergents exceed bit bound");

        // candidate unit from convergent (pn, qn)
        Rat nx, ny;
        Rat nrm;
        if (half) {
            // element pn - qn * (1 - sqrt(D))/2 = (2 pn - qn + qn sqrt(D))/2
            nx = Rat(2 * pn - qn, 2);
            ny = Rat(qn, 2);
            nrm = nx * nx - Rat(D) * ny * ny;
        } else {
            nx = Rat(pn);
            ny = Rat(qn);
            nrm = Rat(pn * pn - D * qn * qn);
        }
        if (nrm == 1 || nrm == -1) {
            norm_out = (nrm == 1) ? 1 : -1;
            return {nx, ny};
        }

        p2 = p1; q2 = q1; p1 = pn; q1 = qn;
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    fail(ErrorCode::UnitSizeExceeded, "continued fraction failed to close");
}

} // namespace

QuadField make_field(const Int& D) {
    if (D <= 1) fail(ErrorCode::DTooSmall, "D must exceed 1, got " + D.str());
    if (D > Int("1000000000000"))
        fail(ErrorCode::DiscriminantTooLarge, "D beyond the 10^12 ceiling");
    if (!is_square_free(D)) fail(ErrorCode::NotSquareFree, D.str() + " has a square factor");

    Discriminant disc{D, mod_floor(D, 4) == 1 ? D : 4 * D};
    QuadField K;
    K.disc = disc;
    K.fund_unit = fundamental_unit(D, K.unit_norm);
    return K;
}

int chi(const Discriminant& d, const Int& n) { return kronecker(d.delta, n); }

Int sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod_floor(a0, p);
    if (a == 0) return 0;
    if (kronecker(a, p) != 1) fail(ErrorCode::BadArgument, "not a quadratic residue");
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

    // Tonelli-Shanks
    Int q = p - 1;
    long s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    Int z = 2;
    while (kronecker(z, p) != -1) ++z;
    Int m(s), c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        Int tt = t;
        long i = 0;
        while (tt != 1) { tt = tt * tt % p; ++i; }
        Int b = pow_mod(c, pow_int(Int(2), static_cast<unsigned long>(static_cast<long>(m) - i - 1)), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

Int hensel_sqrt(const Int& a, long p, long prec) {
    Int r = sqrt_mod_prime(a, Int(p));
    Int mod = Int(p);
    long k = 1;
    while (k < prec) {
        k = std::min(2 * k, prec);
        mod = pow_int(Int(p), static_cast<unsigned long>(k));
        // Newton step r <- (r + a/r)/2 mod p^k
        Int inv2 = inv_mod(Int(2), mod);
        r = mod_floor((r + mod_floor(a, mod) * inv_mod(r, mod)) % mod * inv2, mod);
    }
    return r;
}

Padic PadicEmbedding::operator()(const QuadElement& e) const {
    return Padic::from_rat(p_, e.x, prec_) + Padic::from_rat(p_, e.y, prec_) * sqrt_d_;
}

std::pair<PadicEmbedding, PadicEmbedding> padic_embeddings(const QuadField& K, long p, long prec) {
    if (p == 2) fail(ErrorCode::EvenPrime, "odd primes only");
    if (chi(K.disc, Int(p)) != 1)
        fail(ErrorCode::NotSplit, "p = " + std::to_string(p) + " is not split in Q(sqrt(" +
                                      K.disc.D.str() + "))");
    Int r = hensel_sqrt(K.disc.D, p, prec);
    Int other = pow_int(Int(p), static_cast<unsigned long>(prec)) - r;
    if (other % p < r % p) r = other; // deterministic: least residue mod p
    PadicEmbedding i1(p, prec, Padic::from_int(p, r, prec));
    return {i1, i1.conjugate()};
}

PadicQuad PadicQuadEmbedding::operator()(const QuadElement& e) const {
    return PadicQuad(Padic::from_rat(p_, e.x, prec_), Padic::from_rat(p_, e.y, prec_), D_);
}

} // namespace starkcol
