#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cha {

using Int = mpz_class;
using Rat = mpq_class;

/* Error hierarchy. Everything thrown by the library derives from Error so
 * the CLI can map failures onto exit codes in one place. */
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (wrong shape, non-prime, ...).
class UsageError : public Error {
  public:
    using Error::Error;
};

// Division by zero and friends.
class DomainError : public Error {
  public:
    using Error::Error;
};

class RankError : public Error {
  public:
    using Error::Error;
};

class SingularError : public Error {
  public:
    using Error::Error;
};

// Two independent routes disagreed. Always a bug, never an input problem.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

inline Rat make_rat(Int const& num, Int const& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int abs_int(Int const& x) { return x < 0 ? Int(-x) : x; }

inline std::string to_string(Int const& x) { return x.get_str(); }

inline std::string to_string(Rat const& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace cha
