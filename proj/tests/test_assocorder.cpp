#include "cha/assocorder.hpp"

#include "support.hpp"

#include <random>

using namespace cha;

namespace {

RatMatrix basis_matrix(std::array<HopfElement, 3> const& basis)
{
    RatMatrix B(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t l = 0; l < 3; ++l)
            B(l, i) = basis[i][l];
    return B;
}

// Column spans of two bases agree.
bool same_span(std::array<HopfElement, 3> const& x, std::array<HopfElement, 3> const& y)
{
    return same_lattice(inverse3(basis_matrix(x)), inverse3(basis_matrix(y)));
}

} // namespace

TEST_CASE("classify")
{
    CHECK(classify(test::K(1, 1)) == CaseLabel{MajorCase::Case1, MinorCase::V2GE});
    CHECK(classify(test::K(3, 3)) == CaseLabel{MajorCase::Case2, MinorCase::V2GE});
    CHECK(classify(test::K(3, 1)) == CaseLabel{MajorCase::Case3, MinorCase::V2GE});
    CHECK(classify(test::K(1, 2)) == CaseLabel{MajorCase::Case1, MinorCase::V2LT});
    CHECK(to_string(classify(test::K(3, 1))) == "CASE3/V2GE");
    for (TrinomialCubic const& K : test::grid(15))
        if (classify(K).major == MajorCase::Case3)
            CHECK(K.a() % 3 == 0);
}

TEST_CASE("h closed form")
{
    CHECK(h_closed_form(test::K(1, 1)) == 1);
    CHECK(h_closed_form(test::K(1, 2)) == 2);
    CHECK(h_closed_form(test::K(3, 3)) == 9);
    for (TrinomialCubic const& K : test::grid(25)) {
        Int const direct = classify(K).major == MajorCase::Case1 ? gcd(2 * K.a(), 9 * K.b())
                                                                 : gcd(6 * K.a(), 9 * K.b());
        CHECK(h_closed_form(K) == direct);
    }
}

TEST_CASE("closed form reduced matrices")
{
    CHECK(closed_form_reduced(test::K(1, 1)) == RatMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 2}});
    CHECK(closed_form_reduced(test::K(3, 1)) == RatMatrix{{1, 0, 2}, {0, 9, 3}, {0, 0, 6}});
    CHECK(closed_form_reduced(test::K(3, 3)) == RatMatrix{{1, 0, 2}, {0, 9, 3}, {0, 0, 6}});
}

TEST_CASE("index agrees with the minors oracle")
{
    for (TrinomialCubic const& K : test::grid(12)) {
        Int const covol = test::minors_gcd(action_matrix(K));
        CHECK(covol == index_closed_form(K));
        Int const g = K.g();
        switch (classify(K).major) {
        case MajorCase::Case1: CHECK(covol == 2 * g); break;
        case MajorCase::Case2: CHECK(covol == 18 * g); break;
        case MajorCase::Case3: CHECK(covol == 54 * g); break;
        }
    }
}

TEST_CASE("build: worked instances")
{
    AssociatedOrder const o11 = build(test::K(1, 1));
    CHECK(o11.index == 2);
    CHECK(o11.basis[0] == HopfElement{1, 0, 0});
    CHECK(o11.basis[1] == HopfElement{0, 1, 0});
    CHECK(o11.basis[2] == HopfElement{0, Rat(-1, 2), Rat(1, 2)});

    AssociatedOrder const o31 = build(test::K(3, 1));
    CHECK(o31.index == 54);
    CHECK(o31.basis[1] == HopfElement{0, Rat(1, 9), 0});
    CHECK(o31.basis[2] == HopfElement{Rat(-1, 3), Rat(-1, 18), Rat(1, 6)});

    AssociatedOrder const o33 = build(test::K(3, 3));
    CHECK(o33.index == 54);
    CHECK(o33.basis[1] == HopfElement{0, Rat(1, 9), 0});
    CHECK(o33.basis[2] == HopfElement{Rat(-1, 3), Rat(-1, 18), Rat(1, 6)});

    // (-6 w1 - w2 + 3 w3)/6 is in the order, but with the first two basis
    // vectors it only spans an index-3 sublattice.
    HopfElement const candidate{Rat(-1), Rat(-1, 6), Rat(1, 2)};
    CHECK(contains(o33, candidate));
    std::array<HopfElement, 3> const partial{o33.basis[0], o33.basis[1], candidate};
    CHECK_FALSE(same_span(partial, o33.basis));
    CHECK(abs(det3(basis_matrix(partial)) / det3(basis_matrix(o33.basis))) == 3);
}

TEST_CASE("order invariants over a grid")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 54);
    for (TrinomialCubic const& K : test::grid(10)) {
        AssociatedOrder const o = build(K);
        CHECK(abs(det3(o.reduced)) == Rat(o.index));
        CHECK(same_lattice(o.reduced, o.generic));
        CHECK(basis_matrix(o.basis) == inverse3(o.reduced));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                for (Rat const& c : apply_hopf(K, o.basis[i], to_field(power_basis(j))))
                    CHECK(c.get_den() == 1);
                for (Rat const& c : basis_coordinates(o, hopf_mul(K, o.basis[i], o.basis[j])))
                    CHECK(c.get_den() == 1);
            }
        }
        for (int k = 0; k < 10; ++k) {
            HopfElement h{0, 0, 0};
            if (k % 2 == 0) {
                for (Rat& c : h)
                    c = make_rat(Int(num(rng)), Int(den(rng)));
            } else {
                for (std::size_t i = 0; i < 3; ++i) {
                    Rat const c(num(rng));
                    for (std::size_t l = 0; l < 3; ++l)
                        h[l] += c * o.basis[i][l];
                }
            }
            // membership by definition: h maps every element of B into Z[alpha]
            bool maps_into = true;
            for (std::size_t j = 0; j < 3; ++j)
                for (Rat const& c : apply_hopf(K, h, to_field(power_basis(j))))
                    maps_into = maps_into && c.get_den() == 1;
            bool by_basis = true;
            for (Rat const& c : basis_coordinates(o, h))
                by_basis = by_basis && c.get_den() == 1;
            CHECK(contains(o, h) == maps_into);
            CHECK(by_basis == maps_into);
        }
    }
}
