#include "starkcol/padic.hpp"
#include "starkcol/error.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace starkcol {

namespace {

Int ppow(long p, long k) {
    if (k <= 0) return 1;
    return pow_int(Int(p), static_cast<unsigned long>(k));
}

} // namespace

Padic Padic::zero(long p) {
    Padic x;
    x.p_ = p;
    x.state_ = State::exact_zero;
    return x;
}

Padic Padic::zero_to(long p, long abs_prec) {
    Padic x;
    x.p_ = p;
    x.state_ = State::approx_zero;
    x.prec_ = std::max<long>(abs_prec, 0);
    return x;
}

Padic Padic::make(long p, long val, const Int& unit, long prec) {
    if (p < 2) fail(ErrorCode::BadArgument, "p must be a prime >= 2");
    Padic x;
    x.p_ = p;
    x.state_ = State::nonzero;
    x.val_ = val;
    x.unit_ = unit;
    x.prec_ = prec;
    x.normalize();
    return x;
}

Padic Padic::from_int(long p, const Int& n, long prec) {
    if (n == 0) return zero(p);
    return make(p, 0, n, prec);
}

Padic Padic::from_rat(long p, const Rat& q, long prec) {
    if (q == 0) return zero(p);
    Int num = numerator(q), den = denominator(q);
    auto [vn, un] = split_valuation(num, Int(p));
    auto [vd, ud] = split_valuation(den, Int(p));
    Int m = ppow(p, prec);
    Int unit = mod_floor(un % m * inv_mod(ud, m), m);
    return make(p, vn - vd, unit, prec);
}

void Padic::normalize() {
    if (state_ != State::nonzero) {
        val_ = 0;
        unit_ = 0;
        if (state_ == State::exact_zero) prec_ = 0;
        return;
    }
    if (prec_ <= 0) {
        // no certified digits left
        state_ = State::approx_zero;
        prec_ = std::max<long>(val_ + prec_, 0);
        val_ = 0;
        unit_ = 0;
        return;
    }
    Int m = ppow(p_, prec_);
    unit_ = mod_floor(unit_, m);
    if (unit_ == 0) {
        state_ = State::approx_zero;
        prec_ = val_ + prec_;
        val_ = 0;
        return;
    }
    if (unit_ % p_ == 0) {
        auto [k, u] = split_valuation(unit_, Int(p_));
        val_ += k;
        prec_ -= k;
        unit_ = u % ppow(p_, prec_);
    }
}

void Padic::check_same_p(const Padic& a, const Padic& b) {
    if (a.p_ != b.p_) fail(ErrorCode::BadArgument, "mixed primes in p-adic arithmetic");
}

long Padic::val() const {
    if (state_ == State::exact_zero)
        fail(ErrorCode::ZeroInput, "valuation of exact zero");
    if (state_ == State::approx_zero)
        fail(ErrorCode::IndistinguishableFromZero,
             "value is 0 mod " + std::to_string(p_) + "^" + std::to_string(prec_) +
                 "; raise the working precision");
    return val_;
}

long Padic::abs_prec() const {
    if (state_ == State::exact_zero) return std::numeric_limits<long>::max();
    if (state_ == State::approx_zero) return prec_;
    return val_ + prec_;
}

Padic Padic::operator-() const {
    if (state_ != State::nonzero) return *this;
    Padic r = *this;
    r.unit_ = ppow(p_, prec_) - unit_;
    r.normalize();
    return r;
}

Padic Padic::operator+(const Padic& o) const {
    check_same_p(*this, o);
    if (state_ == State::exact_zero) return o;
    if (o.state_ == State::exact_zero) return *this;
    if (state_ == State::approx_zero) return o.truncated_abs(prec_);
    if (o.state_ == State::approx_zero) return truncated_abs(o.prec_);

    long v = std::min(val_, o.val_);
    long abs = std::min(abs_prec(), o.abs_prec());
    long digits = abs - v;
    Int m = ppow(p_, digits);
    Int u = mod_floor(unit_ * ppow(p_, val_ - v) + o.unit_ * ppow(p_, o.val_ - v), m);
    if (u == 0) return zero_to(p_, abs);
    return make(p_, v, u, digits);
}

Padic Padic::operator-(const Padic& o) const { return *this + (-o); }

Padic Padic::operator*(const Padic& o) const {
    check_same_p(*this, o);
    if (state_ == State::exact_zero || o.state_ == State::exact_zero) return zero(p_);
    if (state_ == State::approx_zero || o.state_ == State::approx_zero) {
        // 0 mod p^A times value of valuation w is 0 mod p^(A+w)
        long A = 0;
        A += (state_ == State::approx_zero) ? prec_ : val_;
        A += (o.state_ == State::approx_zero) ? o.prec_ : o.val_;
        return zero_to(p_, A);
    }
    long digits = std::min(prec_, o.prec_);
    return make(p_, val_ + o.val_, unit_ * o.unit_ % ppow(p_, digits), digits);
}

Padic Padic::inverse() const {
    if (state_ != State::nonzero)
        fail(ErrorCode::DivisionByZero, "inverse of (indistinguishable-from-)zero");
    Int m = ppow(p_, prec_);
    return make(p_, -val_, inv_mod(unit_, m), prec_);
}

Padic Padic::operator/(const Padic& o) const { return *this * o.inverse(); }

Padic Padic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (state_ == State::exact_zero) return e == 0 ? from_int(p_, 1, 64) : *this;
    if (state_ == State::approx_zero) {
        if (e == 0) return from_int(p_, 1, 64);
        return zero_to(p_, prec_ * e);
    }
    Int m = ppow(p_, prec_);
    Int u = pow_mod(unit_, Int(e), m);
    return make(p_, val_ * e, u, prec_);
}

bool Padic::operator==(const Padic& o) const {
    if (p_ != o.p_ || state_ != o.state_) return false;
    if (state_ == State::exact_zero) return true;
    if (state_ == State::approx_zero) return prec_ == o.prec_;
    return val_ == o.val_ && prec_ == o.prec_ && unit_ == o.unit_;
}

bool Padic::agrees_to(const Padic& o, long abs) const {
    check_same_p(*this, o);
    Padic d = *this - o;
    if (d.state_ == State::exact_zero) return true;
    if (d.state_ == State::approx_zero) return d.prec_ >= abs;
    return d.val_ >= abs;
}

Padic Padic::truncated_abs(long abs) const {
    if (state_ == State::exact_zero) return zero_to(p_, abs);
    if (state_ == State::approx_zero) return zero_to(p_, std::min(prec_, abs));
    if (abs >= abs_prec()) return *this;
    if (abs <= val_) return zero_to(p_, abs);
    return make(p_, val_, unit_, abs - val_);
}

Int Padic::residue_mod(long k) const {
    Int m = ppow(p_, k);
    if (state_ == State::exact_zero) return 0;
    if (state_ == State::approx_zero) {
        if (prec_ < k)
            fail(ErrorCode::IndistinguishableFromZero, "residue narrower than precision");
        return 0;
    }
    if (val_ < 0) fail(ErrorCode::BadArgument, "residue of a non-integral value");
    if (abs_prec() < k) fail(ErrorCode::PrecisionExhausted, "residue narrower than precision");
    if (val_ >= k) return 0;
    return unit_ * ppow(p_, val_) % m;
}

std::string Padic::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Padic& x) {
    if (x.is_exact_zero()) return os << "0 (exact, p=" << x.p() << ")";
    if (x.is_zeroish()) return os << "O(" << x.p() << "^" << x.abs_prec() << ")";
    return os << x.p() << "^" << x.val() << " * " << x.unit() << " + O(" << x.p() << "^"
              << x.abs_prec() << ")";
}

Padic plog(const Padic& x) {
    if (x.is_zeroish()) fail(ErrorCode::ZeroInput, "log of (indistinguishable-from-)zero");
    long p = x.p();
    // Iwasawa branch: log p = 0, so only the unit part matters. Raising to
    // the (p-1)-th power kills the Teichmueller component, giving a
    // principal unit; divide the series result by p-1 afterwards.
    Padic u = Padic::make(p, 0, x.unit(), x.prec());
    Padic up = u.pow(p - 1);
    Padic z = up - Padic::from_int(p, 1, up.abs_prec());
    if (z.is_exact_zero()) return Padic::zero(p);
    if (z.is_zeroish()) return Padic::zero_to(p, z.abs_prec());

    long target = z.abs_prec();
    long m = z.val(); // >= 1
    Padic sum = Padic::zero_to(p, target);
    Padic zn = z;
    long n = 1;
    for (;;) {
        Padic term = zn / Padic::from_int(p, Int(n), target);
        if (n % 2 == 0) term = -term;
        sum = sum + term;
        ++n;
        // remaining terms have valuation >= n*m - v_p(n) >= target
        if (n * m - static_cast<long>(digits_base(Int(n), p).size()) >= target) break;
        zn = zn * z;
    }
    return sum / Padic::from_int(p, Int(p - 1), target);
}

Padic pexp(const Padic& x) {
    long p = x.p();
    if (p == 2) fail(ErrorCode::BadArgument, "odd primes only");
    if (x.is_exact_zero()) return Padic::from_int(p, 1, 64);
    if (x.is_zeroish()) {
        if (x.abs_prec() < 1)
            fail(ErrorCode::OutsideConvergenceDomain,
                 "exp requires v_p(x) > 1/(p-1); argument precision gives no digit");
        return Padic::make(p, 0, 1, x.abs_prec());
    }
    long v = x.val();
    if (v < 1)
        fail(ErrorCode::OutsideConvergenceDomain,
             "exp requires v_p(x) > 1/(p-1), i.e. v_p(x) >= 1 for odd p; got v_p = " +
                 std::to_string(v));
    long target = x.abs_prec();
    Padic sum = Padic::from_int(p, 1, target);
    Padic term = Padic::from_int(p, 1, target);
    long n = 0;
    for (;;) {
        ++n;
        term = term * x / Padic::from_int(p, Int(n), target);
        if (term.is_zeroish() || term.val() >= target) break;
        sum = sum + term;
        if (n > 8 * target) break; // unreachable; guards the loop
    }
    return sum.truncated_abs(target);
}

Padic teichmuller(long p, const Int& a, long prec) {
    if (a % p == 0) fail(ErrorCode::DivisibleByP, "no Teichmueller lift of 0 mod p");
    Int m = pow_int(Int(p), static_cast<unsigned long>(prec));
    Int x = mod_floor(a, m);
    for (long i = 0; i <= prec + 1; ++i) {
        Int nx = pow_mod(x, Int(p), m);
        if (nx == x) break;
        x = nx;
    }
    return Padic::make(p, 0, x, prec);
}

long ord(const Padic& x) { return x.val(); }

PadicQuad::PadicQuad(Padic a, Padic b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (a_.p() != b_.p()) fail(ErrorCode::BadArgument, "mixed primes in PadicQuad");
}

PadicQuad PadicQuad::conj() const { return PadicQuad(a_, -b_, d_); }

PadicQuad PadicQuad::operator+(const PadicQuad& o) const {
    return PadicQuad(a_ + o.a_, b_ + o.b_, d_);
}

PadicQuad PadicQuad::operator-(const PadicQuad& o) const {
    return PadicQuad(a_ - o.a_, b_ - o.b_, d_);
}

PadicQuad PadicQuad::operator*(const PadicQuad& o) const {
    Padic dd = Padic::from_int(a_.p(), d_, std::max(a_.prec() + 4, b_.prec() + 4));
    return PadicQuad(a_ * o.a_ + dd * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_);
}

Padic PadicQuad::norm() const {
    Padic dd = Padic::from_int(a_.p(), d_, std::max(a_.prec() + 4, b_.prec() + 4));
    return a_ * a_ - dd * b_ * b_;
}

PadicQuad PadicQuad::operator/(const PadicQuad& o) const {
    Padic n = o.norm();
    PadicQuad num = *this * o.conj();
    return PadicQuad(num.a_ / n, num.b_ / n, d_);
}

PadicQuad PadicQuad::pow(const Int& e) const {
    long p = a_.p();
    long prec = std::max(a_.is_zeroish() ? a_.abs_prec() : a_.prec(),
                         b_.is_zeroish() ? b_.abs_prec() : b_.prec());
    PadicQuad r(Padic::from_int(p, 1, prec), Padic::zero_to(p, prec), d_);
    PadicQuad base = *this;
    Int k = e;
    if (k < 0) fail(ErrorCode::BadArgument, "negative exponent; divide explicitly");
    while (k > 0) {
        if (k % 2 == 1) r = r * base;
        base = base * base;
        k /= 2;
    }
    return r;
}

long PadicQuad::val() const {
    if (a_.is_zeroish() && b_.is_zeroish()) fail(ErrorCode::IndistinguishableFromZero, "PadicQuad value is zeroish");
    if (a_.is_zeroish()) return std::min<long>(a_.abs_prec(), b_.val());
    if (b_.is_zeroish()) return std::min<long>(a_.val(), b_.abs_prec());
    return std::min(a_.val(), b_.val());
}

bool PadicQuad::is_zeroish() const { return a_.is_zeroish() && b_.is_zeroish(); }

PadicQuad plog(const PadicQuad& u) {
    long p = u.a().p();
    long prec_digits = u.a().is_zeroish() ? u.a().abs_prec() : u.a().prec();
    Int e = Int(p) * Int(p) - 1;
    PadicQuad up = u.pow(e); // principal unit now
    PadicQuad one(Padic::from_int(p, 1, prec_digits), Padic::zero_to(p, prec_digits), u.d());
    PadicQuad z = up - one;
    if (z.is_zeroish())
        return PadicQuad(Padic::zero_to(p, z.a().abs_prec()), Padic::zero_to(p, z.b().abs_prec()), u.d());
    long m = z.val();
    if (m < 1) fail(ErrorCode::OutsideConvergenceDomain, "argument is not a unit");
    long target = std::min(z.a().abs_prec(), z.b().abs_prec());
    PadicQuad sum(Padic::zero_to(p, target), Padic::zero_to(p, target), u.d());
    PadicQuad zn = z;
    long n = 1;
    for (;;) {
        Padic dn = Padic::from_int(p, Int(n), target);
        PadicQuad term(zn.a() / dn, zn.b() / dn, u.d());
        if (n % 2 == 0) term = PadicQuad(-term.a(), -term.b(), u.d());
        sum = sum + term;
        ++n;
        if (n * m - static_cast<long>(digits_base(Int(n), p).size()) >= target) break;
        zn = zn * z;
    }
    Padic den = Padic::from_int(p, e, target);
    return PadicQuad(sum.a() / den, sum.b() / den, u.d());
}

} // namespace starkcol
