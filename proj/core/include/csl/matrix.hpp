#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "csl/numeric.hpp"

namespace csl {

/// Dense matrix with exact entries (Int, Rat, GoldenRat, ...).
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }
    Mat operator*(const T& s) const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat: vector length mismatch");
        std::vector<T> r(rows_, T(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    /// Determinant by fraction-free (Bareiss) elimination; divisions are exact.
    T det() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat::det: not square");
        size_t n = rows_;
        if (n == 0) return T(1);
        Mat a = *this;
        T prev(1);
        int sign = 1;
        for (size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == T(0)) {
                size_t piv = k + 1;
                while (piv < n && a(piv, k) == T(0)) ++piv;
                if (piv == n) return T(0);
                for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i)
                for (size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        T d = a(n - 1, n - 1);
        return sign < 0 ? T(0) - d : d;
    }

    /// Inverse over a field type (Rat, GoldenRat); throws on singular input.
    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: not square");
        size_t n = rows_;
        Mat a = *this, inv = identity(n);
        for (size_t k = 0; k < n; ++k) {
            size_t piv = k;
            while (piv < n && a(piv, k) == T(0)) ++piv;
            if (piv == n) throw std::domain_error("Mat::inverse: singular matrix");
            if (piv != k)
                for (size_t j = 0; j < n; ++j) {
                    std::swap(a(k, j), a(piv, j));
                    std::swap(inv(k, j), inv(piv, j));
                }
            T d = a(k, k);
            for (size_t j = 0; j < n; ++j) {
                a(k, j) = a(k, j) / d;
                inv(k, j) = inv(k, j) / d;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == k || a(i, k) == T(0)) continue;
                T f = a(i, k);
                for (size_t j = 0; j < n; ++j) {
                    a(i, j) = a(i, j) - f * a(k, j);
                    inv(i, j) = inv(i, j) - f * inv(k, j);
                }
            }
        }
        return inv;
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<T> e_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

} // namespace csl
