#pragma once

#include "cha/assocorder.hpp"
#include "cha/quadrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cha {

enum class Verdict { Free, NotFree, Undecided };

char const* to_string(Verdict v);

// 2 (3 b1 + 2a b3)(3a b2^2 - 9b b2 b3 + a^2 b3^2)
Int d_beta(TrinomialCubic const& K, OrderElement const& beta);

// Column i holds the B-coordinates of w_{i+1} . beta, as an integer matrix.
IntMatrix m_beta(TrinomialCubic const& K, OrderElement const& beta);

bool is_generator(TrinomialCubic const& K, AssociatedOrder const& order, OrderElement const& beta);
bool is_generator(TrinomialCubic const& K, OrderElement const& beta);

class NoIntegralCandidate : public Error {
  public:
    using Error::Error;
};

struct GeneratorCandidates {
    std::vector<OrderElement> generators; // integral and verified
    std::vector<std::string> anomalies;   // integral candidates that failed verification
};

/* Candidates from a solution of the case's equation over every sign
 * choice. Throws NoIntegralCandidate if none is integral. */
GeneratorCandidates generator_from_solution(TrinomialCubic const& K, AssociatedOrder const& order,
                                            Int const& x, Int const& y);

// x^2 + 3 delta y^2 = sign * N for the case of K, modulus 6|a|.
FormProblem form_problem(TrinomialCubic const& K, CaseLabel const& label, int sign);

struct RhsAttempt {
    Int N;
    PellCertificate certificate;
    std::optional<ConditionalSolution> witness;
};

struct FreenessReport {
    CaseLabel label;
    Int index;
    Verdict verdict = Verdict::Undecided;
    std::optional<OrderElement> generator;
    std::optional<ConditionalSolution> witness;
    std::vector<RhsAttempt> attempts; // checked right-hand sides, in order
    std::vector<std::string> anomalies;
    std::string undecided_reason;
};

FreenessReport decide_freeness(TrinomialCubic const& K, Int const& limit = kDefaultTrialDivisionLimit);
FreenessReport decide_freeness(TrinomialCubic const& K, AssociatedOrder const& order,
                               Int const& limit = kDefaultTrialDivisionLimit);

// Some beta in [-bound, bound]^3 with |d_beta| = I_W.
std::optional<OrderElement> brute_force_generator(TrinomialCubic const& K, int bound);

} // namespace cha
