#pragma once

#include "sbv/scalar.hpp"

#include <cstddef>
#include <vector>

namespace sbv {

template <class S>
using Vector = std::vector<S>;

// Dense row-major matrix over an abstract scalar. Just enough linear algebra
// for this library; nothing here is performance-critical.
template <Scalar S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<S>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<S>& data() const { return data_; }
    std::vector<S>& data() { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

template <Scalar S>
Matrix<S> transpose(const Matrix<S>& m) {
    Matrix<S> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <Scalar S>
Vector<S> mat_vec(const Matrix<S>& m, const Vector<S>& v) {
    Vector<S> out(m.rows(), scalar_traits<S>::zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        S acc = scalar_traits<S>::zero();
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

template <Scalar S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

} // namespace sbv
