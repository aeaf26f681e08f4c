#pragma once

#include <emb4/arith.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace emb4 {

// Dense exact matrix, row-major. T is Int or Rat.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c) {}
    Matrix(std::size_t r, std::size_t c, std::vector<T> entries)
        : rows_(r), cols_(c), e_(std::move(entries)) {
        if (e_.size() != r * c) throw std::invalid_argument("matrix: entry count mismatch");
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
        Matrix s = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] += o.e_[i];
        return s;
    }
    Matrix operator-() const {
        Matrix s = *this;
        for (auto& v : s.e_) v = -v;
        return s;
    }
    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (v != 0) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    void add_col(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void scale_row(std::size_t a, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) *= c;
    }
    void scale_col(std::size_t a, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) *= c;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += to_string((*this)(i, j));
                if (j + 1 < cols_) s += ",";
            }
            s += "]";
            if (i + 1 < rows_) s += ",";
        }
        return s + "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using IntegerMatrix = Matrix<Int>;
using RationalMatrix = Matrix<Rat>;

inline RationalMatrix to_rational(const IntegerMatrix& a) {
    RationalMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

} // namespace emb4
