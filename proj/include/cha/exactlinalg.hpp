#pragma once

#include "cha/arith.hpp"
#include "cha/types.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace cha {

// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (auto const& row : init) {
            if (row.size() != cols_)
                throw UsageError("Matrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    T const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(Matrix const& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix operator*(Matrix const& o) const
    {
        if (cols_ != o.rows_)
            throw UsageError("Matrix: shape mismatch in product");
        Matrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out(i, j) += (*this)(i, k) * o(k, j);
            }
        return out;
    }

    Matrix transposed() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>; // entries kept canonical by mpq_class arithmetic

template <typename T>
std::ostream& operator<<(std::ostream& os, Matrix<T> const& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << to_string(m(i, j));
        os << ']';
    }
    return os << ']';
}

RatMatrix to_rational(IntMatrix const& m);

// Integer matrix when every entry has denominator 1, otherwise nullopt.
std::optional<IntMatrix> to_integer(RatMatrix const& m);

enum class Pivoting {
    LeastAbsolute, // smallest nonzero |entry| in the working column
    FirstNonzero,  // topmost nonzero entry in the working column
};

/* U * M = [D; 0] with U unimodular and D upper triangular, positive
 * diagonal, and the entries above each pivot reduced into [0, pivot).
 * Works on c * M where c clears all denominators, then divides back. */
struct ReductionResult {
    RatMatrix D;
    IntMatrix U;
    Int c;
};

ReductionResult reduce_tall(RatMatrix const& M, Pivoting pivoting = Pivoting::LeastAbsolute);

/* The 2x2 reduction of [[x, lambda], [y, gamma]] read off a Euclid trace:
 * [[r_n, mu_n lambda + nu_n gamma], [0, mu_{n+1} lambda + nu_{n+1} gamma]]. */
IntMatrix two_row_reduction(EuclidTrace const& trace, Int const& lambda, Int const& gamma);

Rat det3(RatMatrix const& m);
RatMatrix inverse3(RatMatrix const& m);

// Bareiss fraction-free determinant of a square integer matrix.
Int determinant(IntMatrix const& m);

/* True when {h : A h integral} == {h : B h integral}, i.e. A B^-1 is an
 * integer matrix of determinant +-1. Both must be square and nonsingular. */
bool same_lattice(RatMatrix const& a, RatMatrix const& b);

} // namespace cha
