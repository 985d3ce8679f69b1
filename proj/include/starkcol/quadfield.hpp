#pragma once

#include "starkcol/integers.hpp"
#include "starkcol/padic.hpp"

namespace starkcol {

// Validated fundamental discriminant of Q(sqrt(D)), D > 1 square-free:
// delta = D when D = 1 mod 4, else 4D.
struct Discriminant {
    Int D;
    Int delta;
};

// x + y*sqrt(D) with rational coordinates; elements of O_K have 2x, 2y and
// x^2 - D y^2 integral.
struct QuadElement {
    Rat x;
    Rat y;

    Rat norm(const Int& D) const { return x * x - Rat(D) * y * y; }
    Rat trace() const { return 2 * x; }
    QuadElement conj() const { return {x, -y}; }
};

QuadElement mul(const QuadElement& a, const QuadElement& b, const Int& D);

struct QuadField {
    Discriminant disc;
    QuadElement fund_unit; // > 1 under the embedding with sqrt(D) > 0
    int unit_norm;         // +1 or -1
};

// bit bound on continued-fraction convergents before aborting unit search
inline constexpr unsigned long kUnitBitBound = 1ul << 20;

QuadField make_field(const Int& D);

// Kronecker symbol (delta / n)
int chi(const Discriminant& d, const Int& n);

// square root of a mod p (p odd prime, a a residue); Tonelli-Shanks
Int sqrt_mod_prime(const Int& a, const Int& p);

// Hensel lift of a square root of `a` from mod p to mod p^prec
Int hensel_sqrt(const Int& a, long p, long prec);

// One of the two embeddings K -> Q_p for a split odd prime p, determined by
// a Hensel lift r of sqrt(D); the other is the composite with conjugation.
class PadicEmbedding {
public:
    PadicEmbedding(long p, long prec, Padic sqrt_d) : p_(p), prec_(prec), sqrt_d_(std::move(sqrt_d)) {}

    long p() const { return p_; }
    long prec() const { return prec_; }
    const Padic& sqrt_d() const { return sqrt_d_; }

    Padic operator()(const QuadElement& e) const;
    Padic operator()(const Rat& q) const { return Padic::from_rat(p_, q, prec_); }

    PadicEmbedding conjugate() const { return PadicEmbedding(p_, prec_, -sqrt_d_); }

private:
    long p_;
    long prec_;
    Padic sqrt_d_;
};

// the two embeddings (iota1, iota2 = iota1 . sigma); requires chi(delta,p)=1
// and p odd
std::pair<PadicEmbedding, PadicEmbedding> padic_embeddings(const QuadField& K, long p, long prec);

// Embedding K -> Q_p(sqrt(D)) for an inert odd prime (chi = -1).
class PadicQuadEmbedding {
public:
    PadicQuadEmbedding(long p, long prec, Int D) : p_(p), prec_(prec), D_(std::move(D)) {}
    PadicQuad operator()(const QuadElement& e) const;

private:
    long p_;
    long prec_;
    Int D_;
};

} // namespace starkcol
