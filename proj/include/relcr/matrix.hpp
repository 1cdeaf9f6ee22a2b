#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relcr/errors.hpp"
#include "relcr/field.hpp"

namespace relcr {

template <ExactField F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero())
    {
    }

    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries))
    {
        if (a_.size() != rows * cols) throw InvalidInput("matrix entry count does not match shape");
    }

    /// Integer literal rows, reduced into the field.
    Matrix(F field, std::initializer_list<std::initializer_list<std::int64_t>> rows)
        : field_(std::move(field)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
    {
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
            for (auto v : r) a_.push_back(field_.from_int(v));
        }
    }

    static Matrix identity(const F& field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// The elementary matrix E_ij (zero-based).
    static Matrix unit(const F& field, std::size_t n, std::size_t i, std::size_t j)
    {
        Matrix m(field, n, n);
        m(i, j) = field.one();
        return m;
    }

    static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vec<F>>& rows)
    {
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw AmbientMismatch("row length does not match column count");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<const value_type> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
    Vec<F> row_vec(std::size_t i) const { return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    const std::vector<value_type>& entries() const noexcept { return a_; }

    bool is_zero() const
    {
        for (const auto& v : a_)
            if (!field_.is_zero(v)) return false;
        return true;
    }
    bool is_identity() const
    {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? field_.one() : field_.zero())) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y)
    {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y)
    {
        x.require_same_shape(y);
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] + y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y)
    {
        x.require_same_shape(y);
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] = r.a_[k] - y.a_[k];
        return r;
    }
    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Matrix operator*(const value_type& s, const Matrix& x)
    {
        Matrix r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y)
    {
        if (x.cols_ != y.rows_) throw AmbientMismatch("matrix product shape mismatch");
        Matrix r(x.field_, x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const auto& xik = x(i, k);
                if (x.field_.is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
            }
        return r;
    }

    /// Matrix times column vector.
    Vec<F> apply(std::span<const value_type> v) const
    {
        if (v.size() != cols_) throw AmbientMismatch("matrix-vector shape mismatch");
        Vec<F> r(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    Matrix transpose() const
    {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Row-major flattening into a vector of length rows*cols.
    Vec<F> flatten() const { return a_; }
    static Matrix unflatten(const F& field, std::size_t n, std::span<const value_type> v)
    {
        if (v.size() != n * n) throw AmbientMismatch("flattened length is not n^2");
        return Matrix(field, n, n, std::vector<value_type>(v.begin(), v.end()));
    }

    /// Stack rows of `below` under this matrix.
    Matrix stacked(const Matrix& below) const
    {
        if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0)
            throw AmbientMismatch("cannot stack matrices with different column counts");
        std::size_t c = rows_ ? cols_ : below.cols_;
        Matrix r(field_, rows_ + below.rows_, c);
        std::copy(a_.begin(), a_.end(), r.a_.begin());
        std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
        return r;
    }

    value_type trace() const
    {
        value_type t = field_.zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
        return t;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i ? ",[" : "[";
            for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + field_.to_string((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    void require_same_shape(const Matrix& y) const
    {
        if (rows_ != y.rows_ || cols_ != y.cols_) throw AmbientMismatch("matrix shape mismatch");
    }

    F field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> a_;
};

template <ExactField F>
struct RrefResult {
    Matrix<F> rref;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination with first-nonzero pivoting.
template <ExactField F>
RrefResult<F> rref_rank(Matrix<F> m)
{
    const auto& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && k.is_zero(m(sel, c))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
        auto inv = k.one() / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || k.is_zero(m(i, c))) continue;
            auto f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m)
{
    return rref_rank(m).rank;
}

/// Basis (as rows) of the right kernel {v : m v = 0}, one vector per free column.
template <ExactField F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m)
{
    const auto& k = m.field();
    auto [r, rk, piv] = rref_rank(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec<F> v(m.cols(), k.zero());
        v[free] = k.one();
        for (std::size_t i = 0; i < rk; ++i) v[piv[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m)
{
    if (!m.square()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix<F> aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = m.field().one();
    }
    auto [r, rk, piv] = rref_rank(std::move(aug));
    if (rk < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

template <ExactField F>
typename F::value_type determinant(Matrix<F> m)
{
    if (!m.square()) throw AmbientMismatch("determinant of a non-square matrix");
    const auto& k = m.field();
    auto det = k.one();
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && k.is_zero(m(sel, c))) ++sel;
        if (sel == n) return k.zero();
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        auto inv = k.one() / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (k.is_zero(m(i, c))) continue;
            auto f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <ExactField F>
Matrix<F> commutator(const Matrix<F>& x, const Matrix<F>& y)
{
    return x * y - y * x;
}

} // namespace relcr
