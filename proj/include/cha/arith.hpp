#pragma once

#include "cha/types.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace cha {

// Largest e with p^e | n, or nullopt (infinite) when n == 0. Uses |n|.
// Throws UsageError unless p is prime.
std::optional<unsigned long> valuation(Int const& n, Int const& p);

// Same as valuation() but returns `cap` for n == 0. Handy in comparisons
// where "infinite" only needs to dominate any real valuation.
unsigned long valuation_or(Int const& n, unsigned long p, unsigned long cap);

bool is_prime(Int const& p);
Int isqrt(Int const& n);
bool is_square(Int const& n);
Int gcd(Int const& a, Int const& b);
Int lcm(Int const& a, Int const& b);

// x mod m in [0, m), m > 0.
Int mod_floor(Int const& x, Int const& m);

struct Factorization {
    std::vector<std::pair<Int, unsigned long>> primes; // ascending
    Int cofactor = 1;                                  // left unfactored, 1 when complete

    bool complete() const { return cofactor == 1; }
};

/* Trial division of |n| up to `limit`. A leftover cofactor is classified as
 * prime when it is below limit^2 or passes a probabilistic test; otherwise
 * it is returned in `cofactor`. n must be nonzero. */
Factorization factor_trial(Int const& n, Int const& limit);

// All positive divisors from a complete factorization, ascending.
std::vector<Int> divisors(Factorization const& f);

/* Every z in [0, m) with z^2 = d (mod m). The modulus is factored by trial
 * division up to `limit`; std::nullopt when that factorization does not
 * complete. */
std::optional<std::vector<Int>> sqrt_mod(Int const& d, Int const& m, Int const& limit);

/* Euclid's algorithm with the remainders, quotients and the mu/nu Bezout
 * sequences recorded:
 *
 *   r[-1] = x, r[0] = y, r[i] = a[i+1] r[i+1] + r[i+2], r[n] = gcd > 0,
 *   r[n+1] = 0, and r[i] = mu[i] x + nu[i] y for 0 <= i <= n+1.
 */
struct EuclidTrace {
    Int x;
    Int y;
    std::vector<Int> remainders; // remainders[i + 1] holds r[i], i = -1 .. n+1
    std::vector<Int> quotients;  // a[0] .. a[n]
    std::vector<Int> mu;         // mu[0] .. mu[n+1]
    std::vector<Int> nu;         // nu[0] .. nu[n+1]

    std::size_t n() const { return quotients.size() - 1; }
    Int const& r(long i) const { return remainders.at(static_cast<std::size_t>(i + 1)); }
    Int const& gcd() const { return r(static_cast<long>(n())); }
};

EuclidTrace euclid_trace(Int const& x, Int const& y);

// Irreducible convergents p[i]/q[i] of x/y, built from the trace quotients.
struct ConvergentList {
    std::vector<Int> p;
    std::vector<Int> q;
};

ConvergentList convergents(Int const& x, Int const& y);
ConvergentList convergents(EuclidTrace const& trace);

// sqrt(D) = [a0; period...] with the period minimal.
struct SqrtContinuedFraction {
    Int a0;
    std::vector<Int> period;
};

// Throws DomainError on D <= 0 or D a perfect square.
SqrtContinuedFraction periodic_sqrt_cf(Int const& D);

} // namespace cha
