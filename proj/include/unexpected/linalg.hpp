#pragma once

// Dense exact linear algebra over the field models of field.hpp.

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "unexpected/errors.hpp"

namespace unexpected {

/// Row-major dense matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const T> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_) throw DimensionMismatch("append_row: width mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    /// First `count` rows.
    Matrix top(std::size_t count) const {
        Matrix out(count, cols_);
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), out.data_.begin());
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

/// In-place reduction to row echelon form; returns pivot columns. When
/// `reduced` is set, pivots are normalized to one and cleared above as well.
template <class Field>
std::vector<std::size_t> echelonize(const Field& F, Matrix<typename Field::value_type>& m, bool reduced,
                                    typename Field::value_type* det_scale = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = m.rows(), cols = m.cols();
    auto scale = F.one();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && F.is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
            scale = F.neg(scale);
        }
        const auto pivot = m(r, c);
        scale = F.mul(scale, pivot);
        const auto pivot_inv = F.inv(pivot);
        if (reduced) {
            for (std::size_t k = c; k < cols; ++k) m(r, k) = F.mul(m(r, k), pivot_inv);
        }
        for (std::size_t i = reduced ? 0 : r + 1; i < rows; ++i) {
            if (i == r || F.is_zero(m(i, c))) continue;
            auto factor = reduced ? m(i, c) : F.mul(m(i, c), pivot_inv);
            for (std::size_t k = c; k < cols; ++k) {
                if (!F.is_zero(m(r, k))) m(i, k) = F.sub(m(i, k), F.mul(factor, m(r, k)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    if (det_scale) *det_scale = scale;
    return pivots;
}

}  // namespace detail

template <class Field>
std::size_t rank(const Field& F, Matrix<typename Field::value_type> m) {
    return detail::echelonize(F, m, false).size();
}

template <class Field>
typename Field::value_type determinant(const Field& F, Matrix<typename Field::value_type> m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0) return F.one();
    typename Field::value_type scale = F.one();
    auto pivots = detail::echelonize(F, m, false, &scale);
    if (pivots.size() < m.rows()) return F.zero();
    return scale;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
template <class Field>
std::vector<std::vector<typename Field::value_type>> kernel(const Field& F, Matrix<typename Field::value_type> m) {
    const auto pivots = detail::echelonize(F, m, true);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<typename Field::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename Field::value_type> v(m.cols(), F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// min(rows, cols) - rank.
template <class Field>
std::size_t rank_deficiency(const Field& F, const Matrix<typename Field::value_type>& m) {
    return std::min(m.rows(), m.cols()) - rank(F, m);
}

}  // namespace unexpected
