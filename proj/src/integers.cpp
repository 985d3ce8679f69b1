#include "starkcol/integers.hpp"
#include "starkcol/error.hpp"

#include <algorithm>

namespace starkcol {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::DTooSmall: return "DTooSmall";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::InertPrime: return "InertPrime";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::DiscriminantMismatch: return "DiscriminantMismatch";
    case ErrorCode::DiscriminantTooLarge: return "DiscriminantTooLarge";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DivisibleByP: return "DivisibleByP";
    case ErrorCode::OrderExceedsDegree: return "OrderExceedsDegree";
    case ErrorCode::TOutsideDomain: return "TOutsideDomain";
    case ErrorCode::MessageLengthMismatch: return "MessageLengthMismatch";
    case ErrorCode::BadDiscriminant: return "BadDiscriminant";
    case ErrorCode::UnitSizeExceeded: return "UnitSizeExceeded";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::NonCyclicGroup: return "NonCyclicGroup";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Trivial: return "Trivial";
    case ErrorCode::GeneratorSetInsufficient: return "GeneratorSetInsufficient";
    case ErrorCode::OutsideConvergenceDomain: return "OutsideConvergenceDomain";
    case ErrorCode::ConvergenceHypothesisFailed: return "ConvergenceHypothesisFailed";
    case ErrorCode::PDividesClassNumber: return "PDividesClassNumber";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::IndistinguishableFromZero: return "IndistinguishableFromZero";
    case ErrorCode::IllConditioned: return "IllConditioned";
    }
    return "UnknownError";
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.backend().data(), base.backend().data(), e);
    return r;
}

Int pow_mod(Int base, Int e, const Int& m) {
    if (e < 0) {
        base = inv_mod(base, m);
        e = -e;
    }
    Int r;
    mpz_powm(r.backend().data(), base.backend().data(), e.backend().data(), m.backend().data());
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    int ok = mpz_invert(r.backend().data(), a.backend().data(), m.backend().data());
    if (!ok) fail(ErrorCode::DivisionByZero, "element not invertible modulo " + m.str());
    return r;
}

int kronecker(Int a, Int n) {
    return mpz_kronecker(a.backend().data(), n.backend().data());
}

std::pair<long, Int> split_valuation(Int a, const Int& p) {
    if (a == 0) fail(ErrorCode::ZeroInput, "valuation of zero");
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_tdiv_qr(q.backend().data(), r.backend().data(), a.backend().data(), p.backend().data());
        if (r != 0) break;
        a = q;
        ++v;
    }
    return {v, a};
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 40) != 0;
}

// Correct for n < 1e15: after stripping distinct primes < 1e5 the remainder
// has at most two prime factors, so a square factor forces a perfect square.
bool is_square_free(const Int& n) {
    if (n <= 0) return false;
    if (n == 1) return true;
    Int m = n;
    for (long p : primes_below(100000)) {
        Int pp(p);
        if (pp * pp > m) break;
        if (m % pp == 0) {
            m /= pp;
            if (m % pp == 0) return false;
        }
    }
    return m == 1 || !is_perfect_square(m);
}

std::vector<long> primes_below(long bound) {
    std::vector<long> out;
    if (bound <= 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound), true);
    for (long i = 2; i < bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * 2; j < bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

std::vector<long> digits_base(Int n, long b) {
    if (n < 0) n = -n;
    std::vector<long> ds;
    Int base(b);
    while (n > 0) {
        ds.push_back(static_cast<long>(n % base));
        n /= base;
    }
    if (ds.empty()) ds.push_back(0);
    return ds;
}

} // namespace starkcol
