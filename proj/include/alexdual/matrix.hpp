#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alexdual {

/// Exact arbitrary-precision integer; intermediate entries in elimination can
/// exceed machine words even on small inputs.
using Int = boost::multiprecision::cpp_int;

/// Dense exact integer matrix, row-major. Zero-row and zero-column shapes are
/// valid and arise routinely as operators between empty bases.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long x : row) data_.emplace_back(x);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Int& at(std::size_t r, std::size_t c) {
        check_index(r, c);
        return data_[r * cols_ + c];
    }
    const Int& at(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return data_[r * cols_ + c];
    }

    bool is_zero() const {
        for (const Int& x : data_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    /// Rows [first, last) as a new matrix.
    IntMatrix row_slice(std::size_t first, std::size_t last) const {
        if (first > last || last > rows_)
            throw std::invalid_argument("IntMatrix: bad row slice");
        IntMatrix out(last - first, cols_);
        for (std::size_t r = first; r < last; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r - first, c) = (*this)(r, c);
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: shape mismatch in product (" +
                                        std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                        " * " + std::to_string(b.rows_) + "x" +
                                        std::to_string(b.cols_) + ")");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& ark = a(r, k);
                if (ark == 0) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    out(r, c) += ark * b(k, c);
            }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << m.rows_ << "x" << m.cols_ << " [";
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r == 0 ? "" : "; ");
            for (std::size_t c = 0; c < m.cols_; ++c)
                os << (c == 0 ? "" : " ") << m(r, c);
        }
        return os << "]";
    }

private:
    void check_index(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("IntMatrix: index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace alexdual
