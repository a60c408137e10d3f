#include "cha/exactlinalg.hpp"

#include <utility>

namespace cha {

RatMatrix to_rational(IntMatrix const& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rat(m(i, j));
    return out;
}

std::optional<IntMatrix> to_integer(RatMatrix const& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                return std::nullopt;
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

namespace {

// Elementary row operations, mirrored onto the transform U.
struct RowOps {
    IntMatrix& a;
    IntMatrix& u;

    void swap(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            std::swap(a(i, k), a(j, k));
        for (std::size_t k = 0; k < u.cols(); ++k)
            std::swap(u(i, k), u(j, k));
    }

    // row_i -= q * row_j
    void submul(std::size_t i, std::size_t j, Int const& q)
    {
        if (q == 0)
            return;
        for (std::size_t k = 0; k < a.cols(); ++k)
            a(i, k) -= q * a(j, k);
        for (std::size_t k = 0; k < u.cols(); ++k)
            u(i, k) -= q * u(j, k);
    }

    void negate(std::size_t i)
    {
        for (std::size_t k = 0; k < a.cols(); ++k)
            a(i, k) = -a(i, k);
        for (std::size_t k = 0; k < u.cols(); ++k)
            u(i, k) = -u(i, k);
    }
};

Int floor_div(Int const& x, Int const& y)
{
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
}

void clear_column_least_absolute(RowOps& ops, std::size_t j)
{
    IntMatrix& a = ops.a;
    for (;;) {
        std::size_t best = a.rows();
        for (std::size_t i = j; i < a.rows(); ++i)
            if (a(i, j) != 0 && (best == a.rows() || abs_int(a(i, j)) < abs_int(a(best, j))))
                best = i;
        if (best == a.rows())
            throw RankError("reduce_tall: matrix does not have full column rank");
        ops.swap(j, best);
        bool done = true;
        for (std::size_t i = j + 1; i < a.rows(); ++i) {
            if (a(i, j) == 0)
                continue;
            ops.submul(i, j, floor_div(a(i, j), a(j, j)));
            if (a(i, j) != 0)
                done = false;
        }
        if (done)
            return;
    }
}

void clear_column_first_nonzero(RowOps& ops, std::size_t j)
{
    IntMatrix& a = ops.a;
    std::size_t first = j;
    while (first < a.rows() && a(first, j) == 0)
        ++first;
    if (first == a.rows())
        throw RankError("reduce_tall: matrix does not have full column rank");
    ops.swap(j, first);
    // pairwise Euclid between the pivot row and each lower row
    for (std::size_t i = j + 1; i < a.rows(); ++i)
        while (a(i, j) != 0) {
            ops.submul(j, i, floor_div(a(j, j), a(i, j)));
            ops.swap(i, j);
        }
}

} // namespace

ReductionResult reduce_tall(RatMatrix const& M, Pivoting pivoting)
{
    std::size_t const m = M.rows();
    std::size_t const n = M.cols();
    if (m < n)
        throw UsageError("reduce_tall: need rows >= cols");

    Int c = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c = lcm(c, M(i, j).get_den());

    IntMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = M(i, j) * c;
            a(i, j) = scaled.get_num();
        }
    IntMatrix u = IntMatrix::identity(m);
    RowOps ops{a, u};

    for (std::size_t j = 0; j < n; ++j) {
        if (pivoting == Pivoting::LeastAbsolute)
            clear_column_least_absolute(ops, j);
        else
            clear_column_first_nonzero(ops, j);
        if (a(j, j) < 0)
            ops.negate(j);
    }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            ops.submul(i, j, floor_div(a(i, j), a(j, j)));

    ReductionResult out;
    out.c = c;
    out.U = std::move(u);
    out.D = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.D(i, j) = make_rat(a(i, j), c);
    return out;
}

IntMatrix two_row_reduction(EuclidTrace const& trace, Int const& lambda, Int const& gamma)
{
    std::size_t const n = trace.n();
    return IntMatrix{
        {trace.gcd(), trace.mu[n] * lambda + trace.nu[n] * gamma},
        {Int(0), trace.mu[n + 1] * lambda + trace.nu[n + 1] * gamma},
    };
}

Rat det3(RatMatrix const& m)
{
    if (m.rows() != 3 || m.cols() != 3)
        throw UsageError("det3: matrix must be 3x3");
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

RatMatrix inverse3(RatMatrix const& m)
{
    Rat const d = det3(m);
    if (d == 0)
        throw SingularError("inverse3: singular matrix");
    RatMatrix inv(3, 3);
    // adjugate / det, cofactors with cyclic indices
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t const r1 = (j + 1) % 3, r2 = (j + 2) % 3;
            std::size_t const c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            inv(i, j) = (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) / d;
        }
    return inv;
}

Int determinant(IntMatrix const& m)
{
    if (m.rows() != m.cols())
        throw UsageError("determinant: matrix must be square");
    std::size_t const n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

RatMatrix inverse_gauss(RatMatrix const& m)
{
    std::size_t const n = m.rows();
    RatMatrix a = m;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        inv(i, i) = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0)
            ++piv;
        if (piv == n)
            throw SingularError("inverse: singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(piv, j));
            std::swap(inv(col, j), inv(piv, j));
        }
        Rat const p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0)
                continue;
            Rat const f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace

bool same_lattice(RatMatrix const& a, RatMatrix const& b)
{
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw UsageError("same_lattice: need square matrices of equal size");
    auto t = to_integer(a * inverse_gauss(b));
    if (!t)
        return false;
    Int const d = determinant(*t);
    return d == 1 || d == -1;
}

} // namespace cha
