#include "cha/arith.hpp"

#include <algorithm>

namespace cha {

bool is_prime(Int const& p)
{
    if (p < 2)
        return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

std::optional<unsigned long> valuation(Int const& n, Int const& p)
{
    if (!is_prime(p))
        throw UsageError("valuation: " + p.get_str() + " is not prime");
    if (n == 0)
        return std::nullopt;
    Int m = abs_int(n);
    return mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

unsigned long valuation_or(Int const& n, unsigned long p, unsigned long cap)
{
    auto v = valuation(n, Int(p));
    return v ? *v : cap;
}

Int isqrt(Int const& n)
{
    if (n < 0)
        throw DomainError("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(Int const& n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int gcd(Int const& a, Int const& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(Int const& a, Int const& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int mod_floor(Int const& x, Int const& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Factorization factor_trial(Int const& n, Int const& limit)
{
    if (n == 0)
        throw DomainError("factor_trial: zero has no factorization");
    Factorization out;
    Int m = abs_int(n);

    auto take = [&](Int const& p) {
        unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (e)
            out.primes.emplace_back(p, e);
    };

    take(Int(2));
    take(Int(3));
    // 6k +- 1 wheel
    Int p = 5;
    int step = 2;
    while (p <= limit && p * p <= m) {
        if (p.fits_ulong_p() ? mpz_divisible_ui_p(m.get_mpz_t(), p.get_ui())
                             : mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()))
            take(p);
        p += step;
        step = 6 - step;
    }
    if (m == 1)
        return out;
    if (p * p > m || m < (limit + 1) * (limit + 1) || is_prime(m)) {
        out.primes.emplace_back(m, 1);
    } else if (is_square(m) && is_prime(isqrt(m))) {
        out.primes.emplace_back(isqrt(m), 2);
    } else {
        out.cofactor = m;
    }
    std::sort(out.primes.begin(), out.primes.end(),
              [](auto const& l, auto const& r) { return l.first < r.first; });
    return out;
}

std::vector<Int> divisors(Factorization const& f)
{
    if (!f.complete())
        throw UsageError("divisors: incomplete factorization");
    std::vector<Int> divs{1};
    for (auto const& [p, e] : f.primes) {
        std::size_t const base = divs.size();
        Int pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// Square root of a quadratic residue d modulo an odd prime p.
Int tonelli_shanks(Int const& d, Int const& p)
{
    Int n = mod_floor(d, p);
    if (n == 0)
        return 0;
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;
    Int c, r, t, tmp;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        tmp = t;
        while (tmp != 1) {
            tmp = tmp * tmp % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

std::vector<Int> sqrt_mod_prime_power(Int const& d, Int const& p, unsigned long e)
{
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);

    if (p != 2 && !mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        if (mpz_legendre(mod_floor(d, p).get_mpz_t(), p.get_mpz_t()) != 1)
            return {};
        // Hensel lift of the unique root pair
        Int z = tonelli_shanks(d, p);
        Int pk = p;
        for (unsigned long k = 1; k < e; ++k) {
            pk *= p;
            Int inv, twoz = 2 * z;
            mpz_invert(inv.get_mpz_t(), twoz.get_mpz_t(), pk.get_mpz_t());
            z = mod_floor(z - (z * z - d) * inv, pk);
        }
        Int other = mod_floor(-z, pe);
        std::vector<Int> roots{z};
        if (other != z)
            roots.push_back(other);
        return roots;
    }

    // p = 2 or p | d: lift level by level, trying every digit.
    std::vector<Int> roots;
    for (Int z = 0; z < p; ++z)
        if (mod_floor(z * z - d, p) == 0)
            roots.push_back(z);
    Int pk = p;
    for (unsigned long k = 1; k < e && !roots.empty(); ++k) {
        Int next_pk = pk * p;
        std::vector<Int> lifted;
        for (auto const& z : roots)
            for (Int j = 0; j < p; ++j) {
                Int cand = z + j * pk;
                if (mod_floor(cand * cand - d, next_pk) == 0)
                    lifted.push_back(cand);
            }
        roots = std::move(lifted);
        pk = next_pk;
    }
    return roots;
}

} // namespace

std::optional<std::vector<Int>> sqrt_mod(Int const& d, Int const& m, Int const& limit)
{
    if (m <= 0)
        throw DomainError("sqrt_mod: modulus must be positive");
    if (m == 1)
        return std::vector<Int>{0};
    Factorization f = factor_trial(m, limit);
    if (!f.complete())
        return std::nullopt;

    std::vector<Int> roots{0};
    Int modulus = 1;
    for (auto const& [p, e] : f.primes) {
        std::vector<Int> local = sqrt_mod_prime_power(d, p, e);
        if (local.empty())
            return std::vector<Int>{};
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        Int inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pe.get_mpz_t());
        std::vector<Int> combined;
        combined.reserve(roots.size() * local.size());
        for (auto const& r1 : roots)
            for (auto const& r2 : local)
                combined.push_back(r1 + modulus * mod_floor((r2 - r1) * inv, pe));
        roots = std::move(combined);
        modulus *= pe;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

EuclidTrace euclid_trace(Int const& x, Int const& y)
{
    if (y == 0)
        throw DomainError("euclid_trace: y must be nonzero");
    EuclidTrace t;
    t.x = x;
    t.y = y;
    t.remainders = {x, y};

    // Step 0 uses the Euclidean remainder in [0, |y|). When y < 0 divides x
    // we take the remainder |y| instead so that the last nonzero remainder
    // (the gcd) comes out positive.
    Int q, r;
    Int ay = abs_int(y);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), ay.get_mpz_t());
    if (y < 0) {
        q = -q;
        if (r == 0) {
            q += 1;
            r = ay;
        }
    }
    t.quotients.push_back(q);
    t.remainders.push_back(r);

    while (t.remainders.back() != 0) {
        Int const& prev = t.remainders[t.remainders.size() - 2];
        Int const& cur = t.remainders.back();
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());
        t.quotients.push_back(q);
        t.remainders.push_back(r);
    }

    std::size_t const n = t.quotients.size() - 1;
    t.mu.resize(n + 2);
    t.nu.resize(n + 2);
    t.mu[0] = 0;
    t.nu[0] = 1;
    t.mu[1] = 1;
    t.nu[1] = -t.quotients[0];
    for (std::size_t i = 2; i <= n + 1; ++i) {
        t.mu[i] = -t.quotients[i - 1] * t.mu[i - 1] + t.mu[i - 2];
        t.nu[i] = -t.quotients[i - 1] * t.nu[i - 1] + t.nu[i - 2];
    }
    return t;
}

ConvergentList convergents(EuclidTrace const& trace)
{
    ConvergentList c;
    Int p_prev2 = 0, p_prev1 = 1; // p[-2], p[-1]
    Int q_prev2 = 1, q_prev1 = 0;
    for (auto const& a : trace.quotients) {
        Int p = a * p_prev1 + p_prev2;
        Int q = a * q_prev1 + q_prev2;
        c.p.push_back(p);
        c.q.push_back(q);
        p_prev2 = std::exchange(p_prev1, p);
        q_prev2 = std::exchange(q_prev1, q);
    }
    return c;
}

ConvergentList convergents(Int const& x, Int const& y)
{
    return convergents(euclid_trace(x, y));
}

SqrtContinuedFraction periodic_sqrt_cf(Int const& D)
{
    if (D <= 0)
        throw DomainError("periodic_sqrt_cf: D must be positive");
    if (is_square(D))
        throw DomainError("periodic_sqrt_cf: " + D.get_str() + " is a perfect square");
    SqrtContinuedFraction cf;
    cf.a0 = isqrt(D);
    Int m = 0, d = 1, a = cf.a0;
    Int const twice = 2 * cf.a0;
    do {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (cf.a0 + m) / d;
        cf.period.push_back(a);
    } while (a != twice);
    return cf;
}

} // namespace cha
