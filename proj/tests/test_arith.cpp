#include "cha/arith.hpp"

#include "support.hpp"

#include <random>

using namespace cha;

namespace {

std::vector<Int> ints(std::initializer_list<long> v)
{
    std::vector<Int> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

// r[-1..n+1] as a flat list
std::vector<Int> remainders(EuclidTrace const& t)
{
    return t.remainders;
}

} // namespace

TEST_CASE("valuation")
{
    CHECK(valuation(Int(12), Int(2)) == 2ul);
    CHECK_FALSE(valuation(Int(0), Int(3)).has_value());
    CHECK(valuation(Int(19625), Int(5)) == 3ul);
    CHECK(valuation(Int(-19625), Int(5)) == 3ul);
    CHECK(valuation(Int(7), Int(2)) == 0ul);
    CHECK_THROWS_AS(valuation(Int(12), Int(4)), UsageError);
    CHECK(valuation_or(Int(0), 2, 99) == 99);

    // repeated-division oracle
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        long n = static_cast<long>(rng() % 1'000'000) + 1;
        for (long p : {2L, 3L, 5L, 7L}) {
            unsigned long e = 0;
            for (long m = n; m % p == 0; m /= p)
                ++e;
            CHECK(valuation(Int(n), Int(p)) == e);
        }
    }
}

TEST_CASE("euclid_trace examples")
{
    EuclidTrace const t = euclid_trace(Int(9), Int(6));
    CHECK(remainders(t) == ints({9, 6, 3, 0}));
    CHECK(t.quotients == ints({1, 2}));
    CHECK(t.mu == ints({0, 1, -2}));
    CHECK(t.nu == ints({1, -1, 3}));
    CHECK(-2 * 9 + 3 * 6 == 0);

    EuclidTrace const u = euclid_trace(Int(9), Int(2));
    CHECK(remainders(u) == ints({9, 2, 1, 0}));
    CHECK(u.quotients == ints({4, 2}));
    CHECK(u.mu == ints({0, 1, -2}));
    CHECK(u.nu == ints({1, -4, 9}));

    for (long x : {-17L, 0L, 5L, 123456789L}) {
        EuclidTrace const v = euclid_trace(Int(x), Int(1));
        CHECK(v.n() == 0);
        CHECK(remainders(v) == ints({x, 1, 0}));
        CHECK(v.gcd() == 1);
    }
    CHECK_THROWS_AS(euclid_trace(Int(3), Int(0)), DomainError);
}

TEST_CASE("euclid_trace invariants on random and signed inputs")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-1'000'000'000, 1'000'000'000);
    for (int k = 0; k < 2000; ++k) {
        Int const x(dist(rng));
        Int y(dist(rng));
        if (k % 50 == 0)
            y = -x / 3 == 0 ? Int(-1) : Int(-x / 3); // negative y, often a divisor
        if (y == 0)
            y = 1;
        EuclidTrace const t = euclid_trace(x, y);
        long const n = static_cast<long>(t.n());
        REQUIRE(t.r(n) > 0);
        CHECK(t.r(n) == gcd(x, y));
        CHECK(t.r(n + 1) == 0);
        for (long i = -1; i <= n - 1; ++i)
            CHECK(t.r(i) == t.quotients[i + 1] * t.r(i + 1) + t.r(i + 2));
        for (long i = 0; i <= n + 1; ++i)
            CHECK(t.r(i) == t.mu[i] * x + t.nu[i] * y);
        Int const s = n % 2 == 0 ? 1 : -1;
        CHECK(t.mu[n + 1] == s * y / t.r(n));
        CHECK(t.nu[n + 1] == -s * x / t.r(n));
        for (long i = 1; i <= n; ++i)
            CHECK(t.r(i) >= 0);
    }
}

TEST_CASE("convergents")
{
    ConvergentList const c = convergents(Int(9), Int(2));
    CHECK(c.p == ints({4, 9}));
    CHECK(c.q == ints({1, 2}));
    ConvergentList const d = convergents(Int(8), Int(1));
    CHECK(d.p == ints({8}));
    CHECK(d.q == ints({1}));
    ConvergentList const e = convergents(Int(9), Int(6));
    CHECK(e.p == ints({1, 3}));
    CHECK(e.q == ints({1, 2}));

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-1'000'000'000, 1'000'000'000);
    for (int k = 0; k < 1000; ++k) {
        Int const x(dist(rng));
        Int y(dist(rng));
        if (y == 0)
            y = 7;
        EuclidTrace const t = euclid_trace(x, y);
        ConvergentList const cl = convergents(t);
        long const n = static_cast<long>(t.n());
        for (long i = 0; i <= n; ++i)
            CHECK(gcd(cl.p[i], cl.q[i]) == 1);
        for (long i = 1; i <= n + 1; ++i) {
            Int const s = i % 2 == 1 ? 1 : -1;
            CHECK(t.mu[i] == s * cl.q[i - 1]);
            CHECK(t.nu[i] == -s * cl.p[i - 1]);
        }
        CHECK(cl.p[n] == x / t.r(n));
        CHECK(cl.q[n] == y / t.r(n));
    }
}

TEST_CASE("periodic_sqrt_cf")
{
    SqrtContinuedFraction const c69 = periodic_sqrt_cf(Int(69));
    CHECK(c69.a0 == 8);
    CHECK(c69.period == ints({3, 3, 1, 4, 1, 3, 3, 16}));
    SqrtContinuedFraction const c2 = periodic_sqrt_cf(Int(2));
    CHECK(c2.a0 == 1);
    CHECK(c2.period == ints({2}));
    SqrtContinuedFraction const c405 = periodic_sqrt_cf(Int(405));
    CHECK(c405.a0 == 20);
    CHECK(c405.period.back() == 40);
    CHECK_THROWS_AS(periodic_sqrt_cf(Int(49)), DomainError);
    CHECK_THROWS_AS(periodic_sqrt_cf(Int(0)), DomainError);

    // convergent at index L-1 gives +-1, squaring gives +1
    for (long D = 2; D < 400; ++D) {
        if (is_square(Int(D)))
            continue;
        SqrtContinuedFraction const cf = periodic_sqrt_cf(Int(D));
        Int p0 = 1, p = cf.a0, q0 = 0, q = 1;
        for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
            Int const np = cf.period[i] * p + p0, nq = cf.period[i] * q + q0;
            p0 = p, p = np, q0 = q, q = nq;
        }
        Int const norm = p * p - D * q * q;
        CHECK((norm == 1 || norm == -1));
        CHECK(norm == (cf.period.size() % 2 == 0 ? 1 : -1));
        Int const t = p * p + D * q * q, u = 2 * p * q;
        CHECK(t * t - D * u * u == 1);
    }
}

TEST_CASE("factor_trial and divisors")
{
    Factorization const f = factor_trial(Int(-19625), Int(1000));
    REQUIRE(f.complete());
    CHECK(f.primes.size() == 2);
    CHECK(f.primes[0] == std::pair{Int(5), 3ul});
    CHECK(f.primes[1] == std::pair{Int(157), 1ul});

    // a large prime cofactor is recognised, a product of two large primes is not
    Int const p1("1000000007"), p2("1000000009");
    Factorization const g = factor_trial(Int(12) * p1, Int(100));
    CHECK(g.complete());
    Factorization const h = factor_trial(p1 * p2, Int(100));
    CHECK_FALSE(h.complete());
    CHECK(h.cofactor == p1 * p2);
    Factorization const sq = factor_trial(p1 * p1, Int(100));
    REQUIRE(sq.complete());
    CHECK(sq.primes[0] == std::pair{p1, 2ul});

    for (long n = 1; n <= 500; ++n) {
        Factorization const fn = factor_trial(Int(n), Int(1000));
        Int prod = 1;
        for (auto const& [p, e] : fn.primes) {
            CHECK(is_prime(p));
            for (unsigned long i = 0; i < e; ++i)
                prod *= p;
        }
        CHECK(prod == n);
        std::vector<Int> brute;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0)
                brute.emplace_back(d);
        CHECK(divisors(fn) == brute);
    }
}

TEST_CASE("sqrt_mod agrees with exhaustive search")
{
    for (long m = 1; m <= 300; ++m)
        for (long d : {-69L, -405L, 2L, 5L, 0L, 12L}) {
            auto roots = sqrt_mod(Int(d), Int(m), Int(1000));
            REQUIRE(roots.has_value());
            std::vector<Int> brute;
            for (long z = 0; z < m; ++z)
                if (((z * z - d) % m + m) % m == 0)
                    brute.emplace_back(z);
            std::sort(roots->begin(), roots->end());
            CHECK(*roots == brute);
        }
}
