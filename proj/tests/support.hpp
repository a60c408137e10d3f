#pragma once

#include "cha/assocorder.hpp"
#include "cha/cubicfield.hpp"

#include <doctest.h>

#include <vector>

namespace test {

using cha::Int;
using cha::Rat;

inline cha::TrinomialCubic K(long a, long b)
{
    return cha::validate(Int(a), Int(b));
}

inline cha::OrderElement el(long c0, long c1, long c2)
{
    return {Int(c0), Int(c1), Int(c2)};
}

// Every validated pair with 1 <= |a|, |b| <= bound.
inline std::vector<cha::TrinomialCubic> grid(long bound)
{
    std::vector<cha::TrinomialCubic> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 || b == 0)
                continue;
            try {
                out.push_back(cha::validate(Int(a), Int(b)));
            } catch (cha::ValidationError const&) {
            }
        }
    return out;
}

/* gcd of all maximal minors of a tall integer matrix: the covolume of its
 * row lattice, computed without any reduction. */
inline Int minors_gcd(cha::IntMatrix const& m)
{
    Int g = 0;
    std::size_t const r = m.rows();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            for (std::size_t k = j + 1; k < r; ++k) {
                Int const d = m(i, 0) * (m(j, 1) * m(k, 2) - m(j, 2) * m(k, 1))
                              - m(i, 1) * (m(j, 0) * m(k, 2) - m(j, 2) * m(k, 0))
                              + m(i, 2) * (m(j, 0) * m(k, 1) - m(j, 1) * m(k, 0));
                g = cha::gcd(g, d);
            }
    return g;
}

} // namespace test
