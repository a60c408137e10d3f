#pragma once

#include "cha/exactlinalg.hpp"
#include "cha/types.hpp"

#include <array>
#include <string>

namespace cha {

/* Which trinomials count as "reduced".
 *   Strict: reject iff some prime has v_p(a) >= 2 and v_p(b) >= 3.
 *   Loose:  reject iff some prime has v_p(a) >= 3 and v_p(b) >= 4,
 *           i.e. accept when v_p(a) <= 2 or v_p(b) <= 3 for every p. */
enum class Reducedness { Strict, Loose };

char const* to_string(Reducedness r);

enum class RejectReason { ZeroA, ZeroB, Reducible, NotReduced };

char const* to_string(RejectReason r);

class ValidationError : public Error {
  public:
    ValidationError(RejectReason reason, std::string const& detail)
        : Error(std::string(to_string(reason)) + ": " + detail), reason_(reason), detail_(detail)
    {
    }
    RejectReason reason() const { return reason_; }
    std::string const& detail() const { return detail_; }

  private:
    RejectReason reason_;
    std::string detail_;
};

// The field Q(alpha) with alpha^3 = a alpha - b, validated. Immutable.
class TrinomialCubic {
  public:
    Int const& a() const { return a_; }
    Int const& b() const { return b_; }
    Int const& delta() const { return delta_; } // 4a^3 - 27b^2
    Int const& g() const { return g_; }         // gcd(a, b) > 0

    friend TrinomialCubic validate(Int const& a, Int const& b, Reducedness convention);

  private:
    TrinomialCubic() = default;
    Int a_, b_, delta_, g_;
};

// Throws ValidationError naming the first failed check.
TrinomialCubic validate(Int const& a, Int const& b, Reducedness convention = Reducedness::Strict);

// c0 + c1 alpha + c2 alpha^2
struct OrderElement {
    Int c0, c1, c2;

    bool operator==(OrderElement const&) const = default;
    Int const& operator[](std::size_t i) const { return i == 0 ? c0 : i == 1 ? c1 : c2; }
};

// Coordinates in {1, alpha, alpha^2} with rational entries.
using FieldVector = std::array<Rat, 3>;

// h1 w1 + h2 w2 + h3 w3
using HopfElement = std::array<Rat, 3>;

OrderElement mul(TrinomialCubic const& K, OrderElement const& u, OrderElement const& v);
FieldVector mul(TrinomialCubic const& K, FieldVector const& u, FieldVector const& v);
Int trace(TrinomialCubic const& K, OrderElement const& u);

FieldVector to_field(OrderElement const& u);

// gram[i][j] = w_{i+1} . alpha^j
using GramMatrix = std::array<std::array<OrderElement, 3>, 3>;

GramMatrix gram_matrix(TrinomialCubic const& K);

/* 9x3 integer matrix of the action: row 3j + k, column i holds the
 * alpha^k-coordinate of w_{i+1} . alpha^j. */
IntMatrix action_matrix(TrinomialCubic const& K);

HopfElement hopf_mul(TrinomialCubic const& K, HopfElement const& u, HopfElement const& v);
FieldVector apply_hopf(TrinomialCubic const& K, HopfElement const& h, FieldVector const& u);

// (6a alpha^2 + 9b alpha - 4a^2)^2 == delta (-3 alpha^2 + 4a) in Z[alpha].
bool verify_sqrt_identity(TrinomialCubic const& K);

inline HopfElement hopf_basis(std::size_t i)
{
    HopfElement h{0, 0, 0};
    h.at(i) = 1;
    return h;
}

inline OrderElement power_basis(std::size_t j)
{
    OrderElement e{0, 0, 0};
    (j == 0 ? e.c0 : j == 1 ? e.c1 : e.c2) = 1;
    return e;
}

} // namespace cha
