#ifndef PRYMTYURIN_INTMATRIX_HPP
#define PRYMTYURIN_INTMATRIX_HPP

// Dense matrices over arbitrary-precision integers, sized for coset spaces
// (a few thousand rows at most).  Rank uses fraction-free (Bareiss-style)
// elimination: every division is exact, so no rounding ever occurs.

#include "numbers.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace prymtyurin {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Integer(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix constant(std::size_t rows, std::size_t cols, const Integer& v) {
        IntMatrix m(rows, cols);
        for (Integer& x : m.a_) x = v;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    IntMatrix operator+(const IntMatrix& rhs) const {
        require_same_shape(rhs);
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
        return out;
    }

    IntMatrix operator-(const IntMatrix& rhs) const {
        require_same_shape(rhs);
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
        return out;
    }

    IntMatrix scaled(const Integer& factor) const {
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * factor;
        return out;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw_input("matrix product shape mismatch");
        IntMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const Integer& aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out.at(i, j) += aik * rhs.at(k, j);
                }
            }
        }
        return out;
    }

    bool is_zero() const {
        for (const Integer& x : a_) {
            if (x != 0) return false;
        }
        return true;
    }

    Integer trace() const {
        if (rows_ != cols_) throw_input("trace requires a square matrix");
        Integer total = 0;
        for (std::size_t i = 0; i < rows_; ++i) total += at(i, i);
        return total;
    }

private:
    void require_same_shape(const IntMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
            throw_input("matrix shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;
};

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Integer& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
                }
            }
        }
    }
    return out;
}

// Rank over the rationals via fraction-free elimination (Bareiss): the
// update a[i][j] = (a[r][c]*a[i][j] - a[i][c]*a[r][j]) / previous_pivot has
// an exact integer quotient at every step.
inline std::size_t rank_fraction_free(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(m.at(pivot, j), m.at(row, j));
            }
        }
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m.at(i, j) =
                    (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) /
                    prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

} // namespace prymtyurin

#endif
