#pragma once

#include "starkcol/integers.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace starkcol {

// Truncated element of Q_p with explicit precision bookkeeping.
//
// A nonzero value is p^val * unit with unit in [1, p^prec) coprime to p;
// the value is known modulo p^(val + prec), i.e. prec is the number of
// certified significant base-p digits. Values that cannot be separated
// from zero carry only an absolute precision ("known to be 0 mod p^A").
// Arithmetic never certifies more digits than the inputs support.
class Padic {
public:
    Padic() = default;

    static Padic zero(long p);                         // exact 0
    static Padic zero_to(long p, long abs_prec);       // 0 mod p^abs_prec
    static Padic from_int(long p, const Int& n, long prec);
    static Padic from_rat(long p, const Rat& q, long prec);
    // p^val * unit, unit coprime to p (normalized internally)
    static Padic make(long p, long val, const Int& unit, long prec);

    long p() const { return p_; }
    bool is_exact_zero() const { return state_ == State::exact_zero; }
    bool is_zeroish() const { return state_ != State::nonzero; }

    // valuation; throws IndistinguishableFromZero / ZeroInput on zeroish values
    long val() const;
    const Int& unit() const { return unit_; }
    long prec() const { return prec_; }           // significant digits (nonzero values)
    long abs_prec() const;                        // value known mod p^abs_prec

    Padic operator-() const;
    Padic operator+(const Padic& o) const;
    Padic operator-(const Padic& o) const;
    Padic operator*(const Padic& o) const;
    Padic operator/(const Padic& o) const;
    Padic inverse() const;
    Padic pow(long e) const;

    // structural equality (same certified digits); value-level agreement is
    // `agrees_to(o, k)`: |this - o|_p <= p^-k
    bool operator==(const Padic& o) const;
    bool operator!=(const Padic& o) const { return !(*this == o); }
    bool agrees_to(const Padic& o, long abs) const;

    // cap absolute precision at `abs` (no-op if already coarser)
    Padic truncated_abs(long abs) const;

    // the value as an integer residue modulo p^k; requires val >= 0 and
    // abs_prec >= k
    Int residue_mod(long k) const;

    bool is_unit() const { return state_ == State::nonzero && val_ == 0; }

    std::string str() const;

private:
    enum class State { exact_zero, approx_zero, nonzero };

    State state_ = State::exact_zero;
    long p_ = 0;
    long val_ = 0;   // nonzero only
    Int unit_ = 0;   // nonzero only
    long prec_ = 0;  // nonzero: significant digits; approx_zero: absolute precision

    void normalize();
    static void check_same_p(const Padic& a, const Padic& b);
};

std::ostream& operator<<(std::ostream& os, const Padic& x);

// Iwasawa-branch logarithm (log_p p = 0), defined on all of Q_p^* via
// Teichmueller factorization; maps units into pZ_p without precision loss.
Padic plog(const Padic& x);

// exponential, domain v_p(x) >= 1 for odd p (equivalently v_p > 1/(p-1));
// throws OutsideConvergenceDomain outside it
Padic pexp(const Padic& x);

// the (p-1)-th root of unity congruent to a mod p
Padic teichmuller(long p, const Int& a, long prec);

// valuation with spec'd error on zeroish input
long ord(const Padic& x);

// Element of the unramified quadratic extension Q_p(sqrt(d)), d a
// non-residue unit mod p; used for embedding K into Q_p^2 at inert primes.
class PadicQuad {
public:
    PadicQuad(Padic a, Padic b, Int d);

    const Padic& a() const { return a_; }
    const Padic& b() const { return b_; }
    const Int& d() const { return d_; }

    PadicQuad conj() const;                 // a - b*sqrt(d), the Frobenius here
    PadicQuad operator+(const PadicQuad& o) const;
    PadicQuad operator-(const PadicQuad& o) const;
    PadicQuad operator*(const PadicQuad& o) const;
    PadicQuad operator/(const PadicQuad& o) const;
    PadicQuad pow(const Int& e) const;
    Padic norm() const;                     // a^2 - d b^2

    long val() const;                       // min of component valuations
    bool is_zeroish() const;

private:
    Padic a_, b_;
    Int d_;
};

// logarithm on units of Q_p(sqrt(d)): log(u) = log(u^(p^2-1)) / (p^2-1)
PadicQuad plog(const PadicQuad& u);

} // namespace starkcol
