#pragma once

#include "cha/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cha {

inline Int const kDefaultTrialDivisionLimit = 10'000'000;

struct Solution {
    Int x, y;

    bool operator==(Solution const&) const = default;
};

// Total order used to make solution lists deterministic.
bool operator<(Solution const& l, Solution const& r);

enum class FormKind {
    Definite,   // D > 0
    Indefinite, // D < 0, -D not a square
    Degenerate, // D = -k^2
};

char const* to_string(FormKind k);

/* Evidence for the solution set of x^2 + D y^2 = N.
 * Definite / Degenerate: `representatives` is the complete solution list.
 * Indefinite: one representative per orbit under the automorph
 * (x, y) -> (t x + |D| u y, u x + t y) with (t, u) = `fundamental`. */
struct PellCertificate {
    FormKind kind = FormKind::Definite;
    Int D;
    Int N;
    std::optional<std::pair<Int, Int>> fundamental;
    std::vector<Solution> representatives;
    std::optional<Int> orbit_period_mod; // order of the automorph modulo the side-condition modulus
    bool complete = true;                // false when trial division stopped before finishing
    std::string incomplete_reason;
};

// Every integer solution of x^2 + D y^2 = N, D > 0. Empty for N <= 0 except N = 0.
std::vector<Solution> solve_definite(Int const& D, Int const& N);

// Minimal t, u > 0 with t^2 - Dabs u^2 = 1. DomainError if Dabs is a square.
std::pair<Int, Int> pell_fundamental(Int const& Dabs);

// Minimal solution of t^2 - Dabs u^2 = -1 when one exists.
std::optional<std::pair<Int, Int>> negative_pell_fundamental(Int const& Dabs);

PellCertificate solve_indefinite(Int const& D, Int const& N, Int const& limit = kDefaultTrialDivisionLimit);

// x^2 - k^2 y^2 = N through the divisor pairs of N.
PellCertificate solve_degenerate(Int const& D, Int const& N, Int const& limit = kDefaultTrialDivisionLimit);

// Dispatch on the sign and squareness of D.
PellCertificate solve_form(Int const& D, Int const& N, Int const& limit = kDefaultTrialDivisionLimit);

// (x, y) -> (t x + Dabs u y, u x + t y)
Solution apply_automorph(Solution const& s, Int const& t, Int const& u, Int const& Dabs);

/* The point of the automorph orbit of s with least |y|, ties to larger x
 * then larger y. Two solutions share an orbit iff these agree. */
Solution canonical_representative(Solution const& s, Int const& t, Int const& u, Int const& Dabs);

/* x^2 + D y^2 = N together with: modulus | 9 b y + x or modulus | 9 b y - x,
 * and 3 does not divide y when required. */
struct FormProblem {
    Int D;
    Int N;
    Int b;
    Int modulus;
    bool require_y_not_div3 = false;
};

void check(FormProblem const& P); // UsageError on a malformed problem

struct ConditionalSolution {
    Solution solution;
    bool plus_branch; // modulus | 9by + x (otherwise 9by - x)
};

// Which branch (if any) the side conditions accept for (x, y).
std::optional<bool> side_condition_branch(FormProblem const& P, Int const& x, Int const& y);

struct ConditionResult {
    std::optional<ConditionalSolution> witness;
    PellCertificate certificate;
};

/* A solution meeting the side conditions, or a certificate that none
 * exists. For indefinite forms every orbit is walked modulo the modulus
 * for one full period of the automorph, which sees every residue class
 * the orbit can reach. */
ConditionResult solve_with_conditions(FormProblem const& P, Int const& limit = kDefaultTrialDivisionLimit);

} // namespace cha
