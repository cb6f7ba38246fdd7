#pragma once

#include <string>
#include <vector>

#include "twistkit/scalar.hpp"

namespace twistkit {

/// Dense matrix of Scalars. Small sizes only; all arithmetic exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const { return scaled(Scalar(-1)); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_symmetric() const;

    Scalar determinant() const;       // requires square
    Matrix inverse() const;           // throws SingularMatrix
    Matrix transpose() const;

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

}  // namespace twistkit
