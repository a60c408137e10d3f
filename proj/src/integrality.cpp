#include "cha/integrality.hpp"

namespace cha {

namespace {

constexpr unsigned long kInfinite = ~0UL;

bool congruent(Int const& x, long r, long m)
{
    return mod_floor(x, Int(m)) == mod_floor(Int(r), Int(m));
}

} // namespace

PrimeCondition alaca_condition(TrinomialCubic const& K, Int const& p)
{
    if (!is_prime(p))
        throw UsageError("alaca_condition: " + p.get_str() + " is not prime");
    Int const& a = K.a();
    Int const& b = K.b();
    PrimeCondition c{p, "none", false};
    auto hit = [&](char const* label) {
        c.label = label;
        c.pass = true;
        return c;
    };

    if (p == 2) {
        if (congruent(b, 1, 2))
            return hit("a");
        if (congruent(a, 0, 2) && congruent(b, 2, 4))
            return hit("b");
        if (congruent(a, 3, 4) && congruent(b, 0, 4))
            return hit("c");
        if (congruent(a, 1, 4) && congruent(b, 2, 4))
            return hit("d");
        return c;
    }
    if (p == 3) {
        unsigned long const va = valuation_or(a, 3, kInfinite);
        unsigned long const vb = valuation_or(b, 3, kInfinite);
        if (va == 0)
            return hit("a");
        if (vb == 1)
            return hit("b");
        if (vb == 0 && !congruent(a, 3, 9) && !congruent(Int(b * b - a - 1), 0, 9))
            return hit("c");
        if (vb == 0 && congruent(a, 3, 9) && !congruent(b * b, 4, 9))
            return hit("d");
        return c;
    }
    unsigned long const va = *valuation(a, p);
    unsigned long const vb = *valuation(b, p);
    if (va == 0 && vb >= 1)
        return hit("a");
    if (va >= 1 && vb <= 1) // read literally; vb = 0 here means p does not divide delta
        return hit("b");
    if (va == 0 && vb == 0 && *valuation(K.delta(), p) <= 1)
        return hit("c");
    return c;
}

char const* to_string(Maximality m)
{
    switch (m) {
    case Maximality::Maximal: return "MAXIMAL";
    case Maximality::NotMaximal: return "NOT_MAXIMAL";
    case Maximality::UndecidedFactorization: return "UNDECIDED_FACTORIZATION";
    }
    return "?";
}

MaximalityReport is_maximal(TrinomialCubic const& K, Int const& limit)
{
    MaximalityReport rep;
    rep.delta_factorization = factor_trial(K.delta(), limit);
    std::vector<Int> primes{2, 3};
    for (auto const& [p, e] : rep.delta_factorization.primes)
        if (p > 3)
            primes.push_back(p);
    for (Int const& p : primes) {
        PrimeCondition c = alaca_condition(K, p);
        rep.per_prime.push_back(c);
        if (!c.pass && !rep.failing_prime)
            rep.failing_prime = p;
    }
    if (rep.failing_prime) {
        rep.verdict = Maximality::NotMaximal;
        return rep;
    }
    Int const& rest = rep.delta_factorization.cofactor;
    if (rest != 1) {
        /* No prime factor up to the limit, not prime and not a prime
         * square: below (limit+1)^3 it is a product of two distinct primes,
         * each dividing delta once, and such primes always pass. */
        Int const l1 = limit + 1;
        rep.cofactor_squarefree = rest < l1 * l1 * l1 && !is_square(rest);
        if (!rep.cofactor_squarefree) {
            rep.verdict = Maximality::UndecidedFactorization;
            return rep;
        }
    }
    rep.verdict = Maximality::Maximal;
    return rep;
}

namespace {

// Polynomials over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<Int>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly reduce(Poly f, Int const& p)
{
    for (Int& c : f)
        c = mod_floor(c, p);
    trim(f);
    return f;
}

long degree(Poly const& f)
{
    return static_cast<long>(f.size()) - 1;
}

Int inverse_mod(Int const& x, Int const& p)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
        throw ConsistencyError("no inverse mod p");
    return r;
}

Poly mul(Poly const& f, Poly const& g, Int const& p)
{
    if (f.empty() || g.empty())
        return {};
    Poly out(f.size() + g.size() - 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] += f[i] * g[j];
    return reduce(out, p);
}

// Quotient and remainder of f by nonzero g.
std::pair<Poly, Poly> divmod(Poly f, Poly const& g, Int const& p)
{
    Int const inv = inverse_mod(g.back(), p);
    Poly q(std::max<long>(degree(f) - degree(g) + 1, 0), Int(0));
    while (degree(f) >= degree(g)) {
        std::size_t const shift = static_cast<std::size_t>(degree(f) - degree(g));
        Int const c = mod_floor(f.back() * inv, p);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[i + shift] -= c * g[i];
        f = reduce(f, p);
    }
    trim(q);
    return {q, f};
}

Poly monic(Poly f, Int const& p)
{
    if (f.empty())
        return f;
    Int const inv = inverse_mod(f.back(), p);
    for (Int& c : f)
        c = mod_floor(c * inv, p);
    return f;
}

Poly gcd(Poly f, Poly g, Int const& p)
{
    while (!g.empty()) {
        Poly r = divmod(f, g, p).second;
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f, p);
}

Poly derivative(Poly const& f, Int const& p)
{
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(f[i] * Int(static_cast<unsigned long>(i)));
    return reduce(d, p);
}

/* Radical r and cofactor f / r of a monic cubic over F_p. For p > 3 the
 * derivative does the work; for p = 2, 3 the roots are enumerated, and
 * what is left after removing linear factors has no roots, so it is
 * irreducible. */
std::pair<Poly, Poly> radical_split(Poly const& f, Int const& p)
{
    if (p > 3) {
        Poly const h = gcd(f, derivative(f, p), p);
        return {divmod(f, h, p).first, h};
    }
    Poly rad{1}, rest{1}, cur = f;
    for (Int r = 0; r < p; ++r) {
        Poly const lin = reduce({Int(-r), Int(1)}, p);
        bool first = true;
        for (;;) {
            auto [q, rem] = divmod(cur, lin, p);
            if (!rem.empty())
                break;
            cur = q;
            (first ? rad : rest) = mul(first ? rad : rest, lin, p);
            first = false;
        }
    }
    return {mul(rad, cur, p), rest};
}

} // namespace

bool dedekind_check(TrinomialCubic const& K, Int const& p)
{
    if (!is_prime(p))
        throw UsageError("dedekind_check: " + p.get_str() + " is not prime");
    Poly const f_int{K.b(), Int(-K.a()), Int(0), Int(1)};
    Poly const f = reduce(f_int, p);
    auto const [g, h] = radical_split(f, p);
    // lifts have coefficients in [0, p) already
    Poly gh = mul(g, h, p); // only for the degree check
    if (degree(gh) != 3)
        throw ConsistencyError("radical split does not recover f mod p");
    Poly lift(4, Int(0));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            lift[i + j] += g[i] * h[j];
    Poly F(4, Int(0));
    for (std::size_t i = 0; i < 4; ++i) {
        Int const diff = f_int[i] - lift[i];
        if (diff % p != 0)
            throw ConsistencyError("f - g h is not divisible by p");
        F[i] = diff / p;
    }
    F = reduce(F, p);
    Poly const common = gcd(gcd(g, h, p), F, p);
    return degree(common) == 0;
}

CombinedVerdict combined_verdict(TrinomialCubic const& K, MaximalityReport maximality, FreenessReport freeness)
{
    CombinedVerdict out;
    out.maximality = std::move(maximality);
    out.freeness = std::move(freeness);
    if (!out.maximality.is_maximal())
        return out;
    out.ring_of_integers_free = out.freeness.verdict;
    unsigned long const va = valuation_or(K.a(), 3, kInfinite);
    unsigned long const vb = valuation_or(K.b(), 3, kInfinite);
    if (va == 0)
        out.ring_case = MajorCase::Case1;
    else if (va == 1 && vb == 1)
        out.ring_case = MajorCase::Case2;
    else if (va > vb)
        out.ring_case = MajorCase::Case3;
    if (!out.ring_case || *out.ring_case != out.freeness.label.major)
        throw ConsistencyError("maximal order lands outside the expected case split");
    return out;
}

CombinedVerdict combined_verdict(TrinomialCubic const& K, Int const& limit)
{
    return combined_verdict(K, is_maximal(K, limit), decide_freeness(K, limit));
}

} // namespace cha
