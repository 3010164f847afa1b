#pragma once

// Dense exact matrices for chain complexes: rational rank by elimination,
// rank over F_2, and Smith invariant factors over Z.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace cch {

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = DenseMatrix<mpq_class>;
using ZMatrix = DenseMatrix<mpz_class>;

QMatrix multiply(const QMatrix& a, const QMatrix& b);

std::size_t rank(QMatrix m);
std::size_t rank_mod2(const ZMatrix& m);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<mpz_class> smith_invariants(ZMatrix m);

/// Throws InternalError when an entry is not an integer.
ZMatrix to_integer(const QMatrix& m);

}  // namespace cch
