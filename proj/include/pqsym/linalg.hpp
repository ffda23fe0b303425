#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace pqsym {

/// Dense row-major matrix of exact rationals. Sizes here stay in the low
/// thousands, so plain Gaussian elimination is adequate.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c)
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const Rational& operator()(std::size_t r, std::size_t c) const
    {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::vector<Rational> row(std::size_t r) const
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    std::vector<Rational> column(std::size_t c) const
    {
        std::vector<Rational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    static Matrix from_columns(const std::vector<std::vector<Rational>>& cols)
    {
        if (cols.empty()) return {};
        Matrix m(cols.front().size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != m.rows_) throw validation_error("ragged column set");
            for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline std::vector<Rational> multiply(const Matrix& a, const std::vector<Rational>& x)
{
    if (x.size() != a.cols()) throw validation_error("dimension mismatch in matrix-vector product");
    std::vector<Rational> y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (sgn(a(r, c)) != 0 && sgn(x[c]) != 0) y[r] += a(r, c) * x[c];
    return y;
}

namespace detail {

/// In-place reduction to reduced row echelon form over the first `ncols`
/// columns. Returns the pivot column of each pivot row.
inline std::vector<std::size_t> row_reduce(Matrix& m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < ncols && prow < m.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < m.rows() && sgn(m(sel, c)) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != prow)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(prow, k));
        const Rational inv = 1 / m(prow, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            if (sgn(m(prow, k)) != 0) m(prow, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow || sgn(m(r, c)) == 0) continue;
            const Rational factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (sgn(m(prow, k)) != 0) m(r, k) -= factor * m(prow, k);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(Matrix m) { return detail::row_reduce(m, m.cols()).size(); }

enum class SolveStatus { unique, inconsistent, underdetermined };

struct Solution {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<Rational> x; ///< filled only when status == unique
};

/// Solves A x = b exactly. Overdetermined systems are allowed; they succeed
/// only when the residual is exactly zero.
inline Solution solve(const Matrix& a, const std::vector<Rational>& b)
{
    if (b.size() != a.rows()) throw validation_error("dimension mismatch in linear solve");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = detail::row_reduce(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (sgn(aug(r, a.cols())) != 0) return {SolveStatus::inconsistent, {}};
    if (pivots.size() < a.cols()) return {SolveStatus::underdetermined, {}};
    Solution s{SolveStatus::unique, std::vector<Rational>(a.cols())};
    for (std::size_t r = 0; r < pivots.size(); ++r) s.x[pivots[r]] = aug(r, a.cols());
    return s;
}

} // namespace pqsym
