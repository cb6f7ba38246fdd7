#include "twistkit/linalg.hpp"

#include <sstream>

#include "twistkit/errors.hpp"

namespace twistkit {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix literal");
        for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < b.cols_; ++j) {
            Scalar s;
            for (size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = i + 1; j < cols_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

Scalar Matrix::determinant() const {
    if (!is_square()) throw DimensionError("determinant of non-square matrix");
    Matrix m = *this;
    size_t n = rows_;
    Scalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar();
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (size_t r = col + 1; r < n; ++r) {
            Scalar f = m.at(r, col) * inv;
            if (f.is_zero()) continue;
            for (size_t c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw DimensionError("inverse of non-square matrix");
    size_t n = rows_;
    Matrix m = *this;
    Matrix inv = Matrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (size_t c = 0; c < n; ++c) {
                std::swap(m.at(pivot, c), m.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        Scalar p = m.at(col, col).inverse();
        for (size_t c = 0; c < n; ++c) {
            m.at(col, c) *= p;
            inv.at(col, c) *= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = m.at(r, col);
            if (f.is_zero()) continue;
            for (size_t c = 0; c < n; ++c) {
                m.at(r, c) -= f * m.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i > 0) os << ", ";
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace twistkit
