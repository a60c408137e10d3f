#pragma once

#include "cha/quadrep.hpp"

#include <optional>
#include <vector>

namespace cha {

// Every solution of x^2 + D y^2 = N with |x| <= xb and |y| <= yb.
std::vector<Solution> brute_force_form(Int const& D, Int const& N, Int const& xb, Int const& yb);

// u * sqrt(|N| (t + 1) / (2 |D|)) + 1, rounded up, for D < 0.
Int representative_bound(Int const& D, Int const& N, Int const& t, Int const& u);

/* Solutions with |y| <= representative_bound, found by scanning y.
 * nullopt when the bound exceeds `cap`. */
std::optional<std::vector<Solution>> bounded_representatives(Int const& D, Int const& N, Int const& cap);

/* Classical class test for x^2 - |D| y^2 = N: x1 x2 - |D| y1 y2 and
 * x1 y2 - x2 y1 both divisible by N. */
bool same_class(Int const& D, Int const& N, Solution const& s1, Solution const& s2);

/* Independent check of a NONE answer from solve_with_conditions for an
 * indefinite problem: every solution inside the representative bound has
 * its orbit walked for one period of the automorph modulo the modulus.
 * true = confirmed NONE, false = a witness exists, nullopt = bound above cap. */
std::optional<bool> confirm_none(FormProblem const& P, Int const& cap);

} // namespace cha
