#include "cha/cubicfield.hpp"

#include "support.hpp"

#include <random>

using namespace cha;
using test::el;

namespace {

RejectReason reject_reason(long a, long b, Reducedness conv = Reducedness::Strict)
{
    try {
        validate(Int(a), Int(b), conv);
    } catch (ValidationError const& e) {
        return e.reason();
    }
    FAIL("pair was accepted");
    return RejectReason::ZeroA;
}

// Rational-root test over the divisors of b.
bool has_integer_root(long a, long b)
{
    for (long d = 1; d <= std::abs(b); ++d) {
        if (b % d != 0)
            continue;
        for (long x : {d, -d})
            if (x * x * x - a * x + b == 0)
                return true;
    }
    return false;
}

// Schoolbook product followed by long division by x^3 - a x + b.
OrderElement mul_oracle(long a, long b, OrderElement const& u, OrderElement const& v)
{
    std::vector<Int> p(5, Int(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            p[i + j] += u[i] * v[j];
    for (std::size_t d = 4; d >= 3; --d) {
        Int const c = p[d];
        p[d] = 0;
        p[d - 2] += c * a; // x^d = x^(d-3) (a x - b)
        p[d - 3] -= c * b;
    }
    return {p[0], p[1], p[2]};
}

// Trace of the multiplication-by-u matrix on {1, alpha, alpha^2}.
Int trace_oracle(TrinomialCubic const& K, OrderElement const& u)
{
    Int t = 0;
    for (std::size_t j = 0; j < 3; ++j)
        t += mul(K, u, power_basis(j))[j];
    return t;
}

FieldVector fv(long c0, long c1, long c2)
{
    return {Rat(c0), Rat(c1), Rat(c2)};
}

} // namespace

TEST_CASE("validate")
{
    TrinomialCubic const k = test::K(1, 1);
    CHECK(k.delta() == -23);
    CHECK(k.g() == 1);
    CHECK(reject_reason(3, 2) == RejectReason::Reducible);
    CHECK(reject_reason(4, 8) == RejectReason::NotReduced);
    CHECK(reject_reason(0, 5) == RejectReason::ZeroA);
    CHECK(reject_reason(5, 0) == RejectReason::ZeroB);
    CHECK(reject_reason(0, 0) == RejectReason::ZeroA);

    // the looser reading accepts (4, 8) and still rejects higher powers
    CHECK(validate(Int(4), Int(8), Reducedness::Loose).delta() == 4 * 64 - 27 * 64);
    CHECK(reject_reason(8, 16, Reducedness::Loose) == RejectReason::NotReduced);

    // non-reducedness found through a large prime square in g
    Int const p("1000003");
    Int const a = p * p * 5, b = p * p * p * 7;
    CHECK_THROWS_AS(validate(a, b), ValidationError);

    for (long x = -40; x <= 40; ++x)
        for (long y = -40; y <= 40; ++y) {
            if (x == 0 || y == 0)
                continue;
            bool reducible = false;
            try {
                validate(Int(x), Int(y));
            } catch (ValidationError const& e) {
                reducible = e.reason() == RejectReason::Reducible;
            }
            CHECK(reducible == has_integer_root(x, y));
        }
}

TEST_CASE("multiplication in Z[alpha]")
{
    TrinomialCubic const K = test::K(5, 6);
    CHECK(mul(K, power_basis(1), power_basis(2)) == el(-6, 5, 0));
    CHECK(mul(K, power_basis(2), power_basis(2)) == el(0, -6, 5));
    TrinomialCubic const K11 = test::K(1, 1);
    CHECK(mul(K11, el(-1, 0, 1), el(-1, 0, 1)) == el(1, -1, -1));

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (auto const& [a, b] : {std::pair{1L, 1L}, {3L, 1L}, {-7L, 5L}, {12L, -7L}})
        for (int k = 0; k < 50; ++k) {
            OrderElement const u = el(dist(rng), dist(rng), dist(rng));
            OrderElement const v = el(dist(rng), dist(rng), dist(rng));
            CHECK(mul(test::K(a, b), u, v) == mul_oracle(a, b, u, v));
            CHECK(mul(test::K(a, b), to_field(u), to_field(v)) == to_field(mul_oracle(a, b, u, v)));
        }
}

TEST_CASE("trace")
{
    TrinomialCubic const K = test::K(7, 3);
    CHECK(trace(K, power_basis(0)) == 3);
    CHECK(trace(K, power_basis(1)) == 0);
    CHECK(trace(K, power_basis(2)) == 14);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> dist(-100, 100);
    for (int k = 0; k < 100; ++k) {
        OrderElement const u = el(dist(rng), dist(rng), dist(rng));
        CHECK(trace(K, u) == trace_oracle(K, u));
    }
}

TEST_CASE("gram and action matrices")
{
    TrinomialCubic const K = test::K(1, 1);
    GramMatrix const G = gram_matrix(K);
    CHECK(G[1][0] == el(0, 0, 0));
    CHECK(G[1][1] == el(-4, 9, 6));
    CHECK(G[1][2] == el(6, -2, -9));
    CHECK(G[2][0] == el(2, 0, 0));
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(G[0][j] == power_basis(j));

    IntMatrix const M = action_matrix(K);
    REQUIRE(M.rows() == 9);
    auto row = [&](std::size_t r) { return std::vector<Int>{M(r, 0), M(r, 1), M(r, 2)}; };
    using V = std::vector<Int>;
    CHECK(row(0) == V{1, 0, 2});
    CHECK(row(1) == V{0, 0, 0});
    CHECK(row(2) == V{0, 0, 0});
    CHECK(row(3) == V{0, -4, 0});
    CHECK(row(4) == V{1, 9, -1});
    CHECK(row(5) == V{0, 6, 0});
    CHECK(row(6) == V{0, 6, 2});
    CHECK(row(7) == V{0, -2, 0});
    CHECK(row(8) == V{1, -9, -1});
}

TEST_CASE("Hopf algebra table and action")
{
    TrinomialCubic const K = test::K(1, 1);
    HopfElement const w1 = hopf_basis(0), w2 = hopf_basis(1), w3 = hopf_basis(2);
    HopfElement const v{Rat(3, 2), Rat(-1), Rat(7, 5)};
    CHECK(hopf_mul(K, w1, v) == v);
    CHECK(hopf_mul(K, w2, w2) == HopfElement{46, 0, -23});
    CHECK(hopf_mul(K, w3, w3) == HopfElement{2, 0, 1});
    CHECK(hopf_mul(K, w2, w3) == HopfElement{0, -1, 0});
    CHECK(hopf_mul(K, w3, w2) == HopfElement{0, -1, 0});

    // every product agrees with composing the operators on B
    for (auto const& [a, b] : {std::pair{1L, 1L}, {3L, 1L}, {-10L, 7L}, {6L, 15L}})
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t g = 0; g < 3; ++g) {
                    TrinomialCubic const L = test::K(a, b);
                    FieldVector const gamma = to_field(power_basis(g));
                    CHECK(apply_hopf(L, hopf_basis(i), apply_hopf(L, hopf_basis(j), gamma))
                          == apply_hopf(L, hopf_mul(L, hopf_basis(i), hopf_basis(j)), gamma));
                }

    FieldVector const alpha = fv(0, 1, 0);
    CHECK(apply_hopf(K, HopfElement{1, 0, 1}, alpha) == fv(0, 0, 0));
    CHECK(apply_hopf(K, w2, fv(1, 0, 0)) == fv(0, 0, 0));
    CHECK(apply_hopf(K, w2, apply_hopf(K, w3, alpha)) == apply_hopf(K, HopfElement{0, -1, 0}, alpha));
    for (std::size_t g = 0; g < 3; ++g)
        CHECK(apply_hopf(K, HopfElement{1, 0, 1}, to_field(power_basis(g)))
              == FieldVector{Rat(trace(K, power_basis(g))), 0, 0});
}

TEST_CASE("sqrt identity")
{
    CHECK(verify_sqrt_identity(test::K(1, 1)));
    CHECK(verify_sqrt_identity(test::K(3, 1)));
    CHECK(verify_sqrt_identity(test::K(5, 6)));
    // against the schoolbook oracle
    for (auto const& [a, b] : {std::pair{1L, 1L}, {3L, 1L}, {5L, 6L}, {-13L, 11L}}) {
        OrderElement const r = el(-4 * a * a, 9 * b, 6 * a);
        Int const d = 4 * a * a * a - 27 * b * b;
        CHECK(mul_oracle(a, b, r, r) == OrderElement{d * 4 * a, 0, -3 * d});
    }
}
