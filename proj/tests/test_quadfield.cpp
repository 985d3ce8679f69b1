#include <doctest.h>

#include "oracles.hpp"
#include "starkcol/error.hpp"
#include "starkcol/quadfield.hpp"

#include <random>

using namespace starkcol;

TEST_SUITE_BEGIN("quadfield");

TEST_CASE("make_field: pinned units and validation errors") {
    QuadField k5 = make_field(Int(5));
    CHECK(k5.disc.delta == 5);
    CHECK(k5.fund_unit.x == Rat(1, 2));
    CHECK(k5.fund_unit.y == Rat(1, 2));
    CHECK(k5.unit_norm == -1);

    QuadField k2 = make_field(Int(2));
    CHECK(k2.disc.delta == 8);
    CHECK(k2.fund_unit.x == 1);
    CHECK(k2.fund_unit.y == 1);
    CHECK(k2.unit_norm == -1);

    CHECK_THROWS_AS((void)make_field(Int(12)), Error);
    try {
        (void)make_field(Int(12));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSquareFree);
    }
    CHECK_THROWS_AS((void)make_field(Int(1)), Error);
}

TEST_CASE("fundamental unit matches the Pell oracle") {
    for (long D : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 17L, 19L, 21L, 29L, 53L, 61L, 94L, 101L, 109L,
                   181L, 229L, 334L}) {
        QuadField K = make_field(Int(D));
        auto sol = oracle::pell4_bruteforce(K.disc.delta);
        // fundamental unit is (t + u sqrt(delta))/2; convert to x + y sqrt(D)
        Rat ex = Rat(sol.t, 2);
        Rat ey = (K.disc.delta == K.disc.D) ? Rat(sol.u, 2) : Rat(sol.u); // sqrt(delta) = 2 sqrt(D) if delta = 4D
        CHECK(K.fund_unit.x == ex);
        CHECK(K.fund_unit.y == ey);
        CHECK(K.unit_norm == sol.norm);
    }
}

TEST_CASE("unit identities: |norm| = 1 and conj = norm / unit") {
    for (long D : {2L, 5L, 13L, 79L, 101L, 229L, 397L}) {
        QuadField K = make_field(Int(D));
        Rat n = K.fund_unit.norm(K.disc.D);
        CHECK((n == 1 || n == -1));
        CHECK(Rat(K.unit_norm) == n);
        // conj(e) * e = norm => conj(e) = norm / e exactly
        QuadElement prod = mul(K.fund_unit, K.fund_unit.conj(), K.disc.D);
        CHECK(prod.x == n);
        CHECK(prod.y == 0);
    }
}

TEST_CASE("chi: pinned values and brute-force agreement") {
    QuadField k5 = make_field(Int(5));
    CHECK(chi(k5.disc, Int(1)) == 1);
    CHECK(chi(k5.disc, Int(2)) == -1);

    QuadField k101 = make_field(Int(101));
    CHECK(chi(k101.disc, Int(5)) == 1); // 5 splits, kappa_5 is defined

    std::mt19937_64 rng(555);
    for (long D : {5L, 13L, 21L, 101L, 229L}) {
        QuadField K = make_field(Int(D));
        for (int i = 0; i < 300; ++i) {
            Int n = Int(static_cast<long>(rng() % 4000) - 2000);
            CHECK(chi(K.disc, n) == oracle::kronecker_bruteforce(K.disc.delta, n));
        }
    }
}

TEST_CASE("chi is completely multiplicative and periodic") {
    std::mt19937_64 rng(77);
    QuadField K = make_field(Int(229));
    for (int i = 0; i < 1000; ++i) {
        Int m = Int(static_cast<long>(rng() % 500) + 1);
        Int n = Int(static_cast<long>(rng() % 500) + 1);
        CHECK(chi(K.disc, m * n) == chi(K.disc, m) * chi(K.disc, n));
        CHECK(chi(K.disc, m + K.disc.delta) == chi(K.disc, m));
    }
}

TEST_CASE("padic_embeddings: Hensel oracle, conjugation, rationals fixed") {
    QuadField K = make_field(Int(101));
    auto [i1, i2] = padic_embeddings(K, 5, 10);

    // r^2 = 101 mod 5^10, i1(sqrt D) = r, i2(sqrt D) = -r
    Int r = i1.sqrt_d().residue_mod(10);
    Int m = pow_int(Int(5), 10);
    CHECK(mod_floor(r * r - 101, m) == 0);
    CHECK(mod_floor(i2.sqrt_d().residue_mod(10) + r, m) == 0);
    CHECK(r == oracle::hensel_sqrt_bruteforce(Int(101), 5, 10) ||
          m - r == oracle::hensel_sqrt_bruteforce(Int(101), 5, 10));

    // rationals are fixed
    Padic q = i1(Rat(22, 7));
    CHECK(q.agrees_to(Padic::from_rat(5, Rat(22, 7), 10), 10));

    // i2 = i1 after conjugation
    QuadElement e{Rat(3), Rat(2)};
    CHECK(i2(e).agrees_to(i1(e.conj()), 10));

    // 7 is not split in Q(sqrt 101)
    CHECK(chi(K.disc, Int(7)) != 1);
    CHECK_THROWS_AS((void)padic_embeddings(K, 7, 10), Error);
    CHECK_THROWS_AS((void)padic_embeddings(K, 2, 10), Error);
}

TEST_CASE("embedding homomorphism: norms and traces over random split pairs") {
    std::mt19937_64 rng(2024);
    std::vector<std::pair<long, long>> pairs;
    for (long D = 2; D < 300 && pairs.size() < 100; ++D) {
        if (!is_square_free(Int(D))) continue;
        QuadField K = make_field(Int(D));
        for (long p : {3L, 5L, 7L, 11L, 13L})
            if (chi(K.disc, Int(p)) == 1) pairs.push_back({D, p});
    }
    REQUIRE(pairs.size() >= 100);
    pairs.resize(100);

    for (auto [D, p] : pairs) {
        QuadField K = make_field(Int(D));
        auto [i1, i2] = padic_embeddings(K, p, 12);
        std::uniform_int_distribution<long> coord(-50, 50);
        QuadElement e{Rat(coord(rng)), Rat(coord(rng))};
        Padic lhs = i1(e) * i2(e);
        Padic rhs = i1(QuadElement{e.norm(K.disc.D), Rat(0)});
        CHECK(lhs.agrees_to(rhs, std::min(lhs.abs_prec(), rhs.abs_prec())));
        Padic lt = i1(e) + i2(e);
        Padic rt = Padic::from_rat(p, e.trace(), 12);
        CHECK(lt.agrees_to(rt, std::min(lt.abs_prec(), rt.abs_prec())));
    }
}

TEST_SUITE_END();
