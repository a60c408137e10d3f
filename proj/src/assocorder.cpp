#include "cha/assocorder.hpp"

#include "cha/arith.hpp"

#include <sstream>

namespace cha {

char const* to_string(MajorCase c)
{
    switch (c) {
    case MajorCase::Case1: return "CASE1";
    case MajorCase::Case2: return "CASE2";
    case MajorCase::Case3: return "CASE3";
    }
    return "?";
}

std::string to_string(CaseLabel c)
{
    return std::string(to_string(c.major)) + (c.minor == MinorCase::V2GE ? "/V2GE" : "/V2LT");
}

namespace {

constexpr unsigned long kInfinite = ~0UL;

} // namespace

CaseLabel classify(TrinomialCubic const& K)
{
    // a, b are nonzero after validation, so valuations are finite
    unsigned long const v2a = valuation_or(K.a(), 2, kInfinite);
    unsigned long const v2b = valuation_or(K.b(), 2, kInfinite);
    unsigned long const v3a = valuation_or(K.a(), 3, kInfinite);
    unsigned long const v3b = valuation_or(K.b(), 3, kInfinite);

    CaseLabel c;
    c.minor = v2a >= v2b ? MinorCase::V2GE : MinorCase::V2LT;
    if (v3a == 0)
        c.major = MajorCase::Case1;
    else if (v3a <= v3b)
        c.major = MajorCase::Case2;
    else
        c.major = MajorCase::Case3;
    return c;
}

Int h_closed_form(TrinomialCubic const& K)
{
    CaseLabel const c = classify(K);
    Int const& g = K.g();
    Int const two = c.minor == MinorCase::V2GE ? 1 : 2;
    switch (c.major) {
    case MajorCase::Case1: return two * g;
    case MajorCase::Case2: return 3 * two * g;
    case MajorCase::Case3: return 9 * two * g;
    }
    return 0;
}

Int index_closed_form(TrinomialCubic const& K)
{
    switch (classify(K).major) {
    case MajorCase::Case1: return 2 * K.g();
    case MajorCase::Case2: return 18 * K.g();
    case MajorCase::Case3: return 54 * K.g();
    }
    return 0;
}

RatMatrix closed_form_reduced(TrinomialCubic const& K)
{
    CaseLabel const c = classify(K);
    Rat const g(K.g());
    bool const ge = c.minor == MinorCase::V2GE;
    if (c.major == MajorCase::Case1) {
        if (ge)
            return RatMatrix{{1, 0, 0}, {0, g, 1}, {0, 0, 2}};
        return RatMatrix{{1, 0, 0}, {0, 2 * g, 0}, {0, 0, 1}};
    }
    Rat const m = c.major == MajorCase::Case2 ? 3 : 9;
    if (ge)
        return RatMatrix{{1, 0, 2}, {0, m * g, 3}, {0, 0, 6}};
    return RatMatrix{{1, 0, 2}, {0, 2 * m * g, 0}, {0, 0, 3}};
}

AssociatedOrder build(TrinomialCubic const& K)
{
    AssociatedOrder order;
    order.label = classify(K);
    order.reduced = closed_form_reduced(K);
    order.generic = reduce_tall(to_rational(action_matrix(K))).D;
    if (!same_lattice(order.reduced, order.generic)) {
        std::ostringstream os;
        os << "closed form " << order.reduced << " vs generic " << order.generic << " for a = "
           << K.a().get_str() << ", b = " << K.b().get_str();
        throw LatticeMismatch(os.str());
    }
    Int const h_direct = order.label.major == MajorCase::Case1 ? gcd(2 * K.a(), 9 * K.b())
                                                               : gcd(6 * K.a(), 9 * K.b());
    if (h_direct != h_closed_form(K))
        throw ConsistencyError("gcd closed form disagrees with direct gcd");
    Rat const d = det3(order.reduced);
    order.index = Rat(abs(d)).get_num();
    if (d.get_den() != 1 || order.index != index_closed_form(K))
        throw ConsistencyError("index of reduced matrix disagrees with the index table");

    RatMatrix const inv = inverse3(order.reduced);
    for (std::size_t i = 0; i < 3; ++i)
        order.basis[i] = {inv(0, i), inv(1, i), inv(2, i)};
    return order;
}

bool contains(AssociatedOrder const& order, HopfElement const& h)
{
    for (std::size_t i = 0; i < 3; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < 3; ++j)
            s += order.reduced(i, j) * h[j];
        if (s.get_den() != 1)
            return false;
    }
    return true;
}

std::array<Rat, 3> basis_coordinates(AssociatedOrder const& order, HopfElement const& h)
{
    // Solve sum_i c_i basis[i] = h against the basis matrix itself.
    RatMatrix B(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t l = 0; l < 3; ++l)
            B(l, i) = order.basis[i][l];
    RatMatrix const Binv = inverse3(B);
    std::array<Rat, 3> c{0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t l = 0; l < 3; ++l)
            c[i] += Binv(i, l) * h[l];
    return c;
}

} // namespace cha
