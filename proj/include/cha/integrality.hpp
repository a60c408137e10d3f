#pragma once

#include "cha/arith.hpp"
#include "cha/freeness.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cha {

struct PrimeCondition {
    Int p;
    std::string label; // "a".."d" for the matching row, "none" on failure
    bool pass;
};

/* The congruence table for {1, alpha, alpha^2} to be a p-integral basis.
 * Rows for p = 2 and p = 3 are specific; every p > 3 uses the same three. */
PrimeCondition alaca_condition(TrinomialCubic const& K, Int const& p);

enum class Maximality { Maximal, NotMaximal, UndecidedFactorization };

char const* to_string(Maximality m);

struct MaximalityReport {
    Maximality verdict = Maximality::UndecidedFactorization;
    std::optional<Int> failing_prime;
    std::vector<PrimeCondition> per_prime;
    Factorization delta_factorization;
    bool cofactor_squarefree = true; // meaningful when the factorization is incomplete

    bool is_maximal() const { return verdict == Maximality::Maximal; }
};

/* Checks p = 2, 3 and every prime p > 3 dividing delta; primes p > 3 not
 * dividing delta always pass. */
MaximalityReport is_maximal(TrinomialCubic const& K, Int const& limit = kDefaultTrialDivisionLimit);

// Dedekind's criterion: true iff p does not divide [O_L : Z[alpha]].
bool dedekind_check(TrinomialCubic const& K, Int const& p);

struct CombinedVerdict {
    MaximalityReport maximality;
    FreenessReport freeness;                        // always about Z[alpha]
    std::optional<Verdict> ring_of_integers_free;   // set only when Z[alpha] is maximal
    std::optional<MajorCase> ring_case;             // case picked from the 3-adic data when maximal
};

CombinedVerdict combined_verdict(TrinomialCubic const& K, Int const& limit = kDefaultTrialDivisionLimit);
CombinedVerdict combined_verdict(TrinomialCubic const& K, MaximalityReport maximality, FreenessReport freeness);

} // namespace cha
