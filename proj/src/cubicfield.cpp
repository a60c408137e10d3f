#include "cha/cubicfield.hpp"

#include "cha/arith.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace cha {

char const* to_string(Reducedness r)
{
    return r == Reducedness::Strict ? "strict" : "loose";
}

char const* to_string(RejectReason r)
{
    switch (r) {
    case RejectReason::ZeroA: return "ZERO_A";
    case RejectReason::ZeroB: return "ZERO_B";
    case RejectReason::Reducible: return "REDUCIBLE";
    case RejectReason::NotReduced: return "NOT_REDUCED";
    }
    return "?";
}

namespace {

Int eval_trinomial(Int const& a, Int const& b, Int const& x)
{
    return x * x * x - a * x + b;
}

// Integer zero of a monotone piece [lo, hi] of x^3 - a x + b, if any.
std::optional<Int> root_in_monotone(Int const& a, Int const& b, Int lo, Int hi, bool increasing)
{
    while (lo <= hi) {
        Int mid = lo + (hi - lo) / 2;
        Int v = eval_trinomial(a, b, mid);
        if (v == 0)
            return mid;
        if ((v < 0) == increasing)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

/* Integer roots are divisors of b, hence bounded by |b|; the cubic is
 * monotone on each side of its critical points +-sqrt(a/3), so bisection
 * on each monotone piece is a complete search. */
std::optional<Int> integer_root(Int const& a, Int const& b)
{
    Int const bound = abs_int(b);
    if (a <= 0)
        return root_in_monotone(a, b, -bound, bound, true);
    Int k = isqrt(Int(a / 3)); // floor(sqrt(a/3))
    for (auto [lo, hi, inc] : {std::tuple{Int(-bound), Int(-k - 1), true},
                               std::tuple{Int(-k), k, false},
                               std::tuple{Int(k + 1), bound, true}}) {
        if (lo < -bound)
            lo = -bound;
        if (hi > bound)
            hi = bound;
        if (auto r = root_in_monotone(a, b, lo, hi, inc))
            return r;
    }
    return std::nullopt;
}

/* Smallest prime p with v_p(a) >= ea and v_p(b) >= eb (ea >= 2). Such a p
 * has p^2 | g, so trial division up to cbrt(g) suffices: what remains has
 * at most two prime factors and matters only if it is a square. */
std::optional<Int> non_reduced_prime(Int const& a, Int const& b, unsigned long ea, unsigned long eb)
{
    Int const g = gcd(a, b);
    Int cbrt;
    mpz_root(cbrt.get_mpz_t(), g.get_mpz_t(), 3);
    for (auto const& [p, e] : factor_trial(g, cbrt + 1).primes) {
        if (e < std::min(ea, eb))
            continue;
        if (*valuation(a, p) >= ea && *valuation(b, p) >= eb)
            return p;
    }
    return std::nullopt;
}

} // namespace

TrinomialCubic validate(Int const& a, Int const& b, Reducedness convention)
{
    if (a == 0)
        throw ValidationError(RejectReason::ZeroA, "a = 0 is not supported");
    if (b == 0)
        throw ValidationError(RejectReason::ZeroB, "b = 0 makes x^3 - ax reducible");
    if (auto r = integer_root(a, b))
        throw ValidationError(RejectReason::Reducible, "integer root x = " + r->get_str());
    unsigned long const ea = convention == Reducedness::Strict ? 2 : 3;
    unsigned long const eb = convention == Reducedness::Strict ? 3 : 4;
    if (auto p = non_reduced_prime(a, b, ea, eb))
        throw ValidationError(RejectReason::NotReduced,
                              "p = " + p->get_str() + " has v_p(a) >= " + std::to_string(ea)
                                  + " and v_p(b) >= " + std::to_string(eb));

    TrinomialCubic K;
    K.a_ = a;
    K.b_ = b;
    K.delta_ = 4 * a * a * a - 27 * b * b;
    K.g_ = gcd(a, b);
    if (K.delta_ == 0)
        throw ConsistencyError("irreducible trinomial with zero discriminant");
    return K;
}

namespace {

// Reduce a polynomial of degree <= 4 by alpha^3 = a alpha - b.
template <typename T>
std::array<T, 3> reduce_mod_f(Int const& a, Int const& b, std::array<T, 5> p)
{
    // alpha^4 = a alpha^2 - b alpha
    p[2] += p[4] * a;
    p[1] -= p[4] * b;
    // alpha^3 = a alpha - b
    p[1] += p[3] * a;
    p[0] -= p[3] * b;
    return {p[0], p[1], p[2]};
}

template <typename T>
std::array<T, 3> poly_mul(Int const& a, Int const& b, std::array<T, 3> const& u, std::array<T, 3> const& v)
{
    std::array<T, 5> p{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            p[i + j] += u[i] * v[j];
    return reduce_mod_f(a, b, p);
}

} // namespace

OrderElement mul(TrinomialCubic const& K, OrderElement const& u, OrderElement const& v)
{
    auto r = poly_mul<Int>(K.a(), K.b(), {u.c0, u.c1, u.c2}, {v.c0, v.c1, v.c2});
    return {r[0], r[1], r[2]};
}

FieldVector mul(TrinomialCubic const& K, FieldVector const& u, FieldVector const& v)
{
    return poly_mul<Rat>(K.a(), K.b(), u, v);
}

Int trace(TrinomialCubic const& K, OrderElement const& u)
{
    // Tr(1) = 3, Tr(alpha) = 0, Tr(alpha^2) = 2a
    return 3 * u.c0 + 2 * K.a() * u.c2;
}

FieldVector to_field(OrderElement const& u)
{
    return {Rat(u.c0), Rat(u.c1), Rat(u.c2)};
}

GramMatrix gram_matrix(TrinomialCubic const& K)
{
    Int const& a = K.a();
    Int const& b = K.b();
    GramMatrix G;
    G[0] = {power_basis(0), power_basis(1), power_basis(2)};
    G[1] = {OrderElement{0, 0, 0},
            OrderElement{-4 * a * a, 9 * b, 6 * a},
            OrderElement{6 * a * b, -2 * a * a, -9 * b}};
    G[2] = {OrderElement{2, 0, 0},
            OrderElement{0, -1, 0},
            OrderElement{2 * a, 0, -1}};
    return G;
}

IntMatrix action_matrix(TrinomialCubic const& K)
{
    GramMatrix const G = gram_matrix(K);
    IntMatrix M(9, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t i = 0; i < 3; ++i)
                M(3 * j + k, i) = G[i][j][k];
    return M;
}

HopfElement hopf_mul(TrinomialCubic const& K, HopfElement const& u, HopfElement const& v)
{
    // w1 = 1, w2^2 = delta (w3 - 2 w1), w2 w3 = w3 w2 = -w2, w3^2 = 2 w1 + w3
    Rat const d(K.delta());
    HopfElement out;
    out[0] = u[0] * v[0] - 2 * d * u[1] * v[1] + 2 * u[2] * v[2];
    out[1] = u[0] * v[1] + u[1] * v[0] - u[1] * v[2] - u[2] * v[1];
    out[2] = u[0] * v[2] + u[2] * v[0] + d * u[1] * v[1] + u[2] * v[2];
    return out;
}

FieldVector apply_hopf(TrinomialCubic const& K, HopfElement const& h, FieldVector const& u)
{
    GramMatrix const G = gram_matrix(K);
    FieldVector out{0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) {
        if (h[i] == 0)
            continue;
        for (std::size_t j = 0; j < 3; ++j) {
            if (u[j] == 0)
                continue;
            Rat const coef = h[i] * u[j];
            for (std::size_t k = 0; k < 3; ++k)
                out[k] += coef * G[i][j][k];
        }
    }
    return out;
}

bool verify_sqrt_identity(TrinomialCubic const& K)
{
    Int const& a = K.a();
    OrderElement const root{-4 * a * a, 9 * K.b(), 6 * a};
    OrderElement const lhs = mul(K, root, root);
    OrderElement const rhs{K.delta() * 4 * a, 0, K.delta() * -3};
    return lhs == rhs;
}

} // namespace cha
