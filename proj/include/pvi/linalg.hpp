#ifndef PVI_LINALG_HPP
#define PVI_LINALG_HPP

#include <cstddef>
#include <vector>

#include "pvi/errors.hpp"
#include "pvi/scalar.hpp"

namespace pvi {

/// Small dense matrix over an exact field; just enough linear algebra
/// for null spaces of the banded systems the Heun solver builds.
template <scalar_field K>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, K{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<K> data_;
};

/// In-place reduced row echelon form; returns the pivot columns in
/// increasing order.
template <scalar_field K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m.at(sel, j), m.at(row, j));
        K inv = K{1} / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero())
                continue;
            K f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <scalar_field K>
std::size_t rank(Matrix<K> m) {
    return rref(m).size();
}

/// Basis of the null space of m, one vector per free column, in
/// increasing free-column order.
template <scalar_field K>
std::vector<std::vector<K>> nullspace(Matrix<K> m) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<K> v(m.cols(), K{});
        v[free] = K{1};
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace pvi

#endif
