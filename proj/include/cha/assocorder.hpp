#pragma once

#include "cha/cubicfield.hpp"
#include "cha/exactlinalg.hpp"

#include <array>
#include <string>

namespace cha {

enum class MajorCase {
    Case1, // 3 does not divide a
    Case2, // 3 | a and v3(a) <= v3(b)
    Case3, // v3(a) > v3(b)
};

enum class MinorCase {
    V2GE, // v2(a) >= v2(b)
    V2LT, // v2(a) <  v2(b)
};

struct CaseLabel {
    MajorCase major;
    MinorCase minor;

    bool operator==(CaseLabel const&) const = default;
};

std::string to_string(CaseLabel c);
char const* to_string(MajorCase c);

CaseLabel classify(TrinomialCubic const& K);

// gcd(2a, 9b) in case 1, gcd(6a, 9b) otherwise, from the valuation table.
Int h_closed_form(TrinomialCubic const& K);

// 2g, 18g or 54g.
Int index_closed_form(TrinomialCubic const& K);

RatMatrix closed_form_reduced(TrinomialCubic const& K);

class LatticeMismatch : public ConsistencyError {
  public:
    using ConsistencyError::ConsistencyError;
};

/* Z-basis of the associated order of Z[alpha], as W-coordinates.
 * `reduced` is the closed-form reduced matrix; `generic` is the reduction
 * of the action matrix computed independently, and the two are checked to
 * define the same lattice. */
struct AssociatedOrder {
    CaseLabel label;
    Int index;
    std::array<HopfElement, 3> basis;
    RatMatrix reduced;
    RatMatrix generic;
};

// Throws LatticeMismatch if the two reductions disagree.
AssociatedOrder build(TrinomialCubic const& K);

// h lies in the order iff reduced * h is integral.
bool contains(AssociatedOrder const& order, HopfElement const& h);

// Coordinates of h in the basis (rational in general).
std::array<Rat, 3> basis_coordinates(AssociatedOrder const& order, HopfElement const& h);

} // namespace cha
