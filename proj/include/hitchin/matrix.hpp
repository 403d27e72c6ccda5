#pragma once

#include <optional>
#include <vector>

#include "hitchin/binary_form.hpp"
#include "hitchin/errors.hpp"

namespace hitchin {

// Dense matrix over an exact coefficient field, with the elimination-based
// kit the stability computations need: rref, rank, kernel, inverse, det.
template <ScalarField K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {
        if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
    }
    Matrix(int rows, int cols, std::vector<K> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (static_cast<int>(a_.size()) != rows * cols)
            throw ValidationError("matrix entry count does not match its shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    static Matrix from_columns(int rows, const std::vector<std::vector<K>>& cols) {
        Matrix m(rows, static_cast<int>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            if (static_cast<int>(cols[j].size()) != rows)
                throw ValidationError("column height mismatch");
            for (int i = 0; i < rows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const K& at(int i, int j) const { return a_.at(i * cols_ + j); }
    K& at(int i, int j) { return a_.at(i * cols_ + j); }

    bool is_zero() const {
        for (const K& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    std::vector<K> column(int j) const {
        std::vector<K> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero()) continue;
                for (int k = 0; k < o.cols_; ++k)
                    r.at(i, k) = r.at(i, k) + at(i, j) * o.at(j, k);
            }
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix-vector shape mismatch");
        std::vector<K> r(rows_, K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix sum shape mismatch");
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    Matrix scaled(const K& s) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Matrix pow(int e) const {
        if (rows_ != cols_) throw ValidationError("power of a non-square matrix");
        if (e < 0) throw ValidationError("negative matrix power");
        Matrix acc = identity(rows_);
        Matrix base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw ValidationError("hstack height mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    struct Echelon {
        Matrix reduced;
        std::vector<int> pivot_cols;
        int rank;
    };

    Echelon rref() const {
        Matrix m = *this;
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int p = -1;
            for (int i = row; i < rows_; ++i)
                if (!m.at(i, col).is_zero()) { p = i; break; }
            if (p < 0) continue;
            if (p != row)
                for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(row, j));
            const K inv = K(1) / m.at(row, col);
            for (int j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row || m.at(i, col).is_zero()) continue;
                const K f = m.at(i, col);
                for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return {std::move(m), std::move(pivots), row};
    }

    int rank() const { return rref().rank; }

    K det() const {
        if (rows_ != cols_) throw ValidationError("determinant of a non-square matrix");
        Matrix m = *this;
        K result(1);
        for (int col = 0; col < cols_; ++col) {
            int p = -1;
            for (int i = col; i < rows_; ++i)
                if (!m.at(i, col).is_zero()) { p = i; break; }
            if (p < 0) return K(0);
            if (p != col) {
                for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
                result = -result;
            }
            result = result * m.at(col, col);
            const K inv = K(1) / m.at(col, col);
            for (int i = col + 1; i < rows_; ++i) {
                if (m.at(i, col).is_zero()) continue;
                const K f = m.at(i, col) * inv;
                for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
            }
        }
        return result;
    }

    std::optional<Matrix> inverse() const {
        if (rows_ != cols_) throw ValidationError("inverse of a non-square matrix");
        const Echelon e = hstack(*this, identity(rows_)).rref();
        if (e.rank < rows_) return std::nullopt;
        Matrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = e.reduced.at(i, cols_ + j);
        return r;
    }

    // Columns form a basis of the null space.
    Matrix kernel() const {
        const Echelon e = rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : e.pivot_cols) is_pivot[c] = true;
        std::vector<std::vector<K>> basis;
        for (int free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(cols_, K(0));
            v[free] = K(1);
            for (size_t r = 0; r < e.pivot_cols.size(); ++r)
                v[e.pivot_cols[r]] = -e.reduced.at(static_cast<int>(r), free);
            basis.push_back(std::move(v));
        }
        return from_columns(cols_, basis);
    }

    // Some solution of A x = b, or nullopt when inconsistent.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw ValidationError("solve shape mismatch");
        Matrix aug = hstack(*this, from_columns(rows_, {b}));
        const Echelon e = aug.rref();
        for (int pc : e.pivot_cols)
            if (pc == cols_) return std::nullopt;  // pivot in the constant column
        std::vector<K> x(cols_, K(0));
        for (size_t r = 0; r < e.pivot_cols.size(); ++r)
            x[e.pivot_cols[r]] = e.reduced.at(static_cast<int>(r), cols_);
        return x;
    }

    // True when v lies in the column span.
    bool contains_in_column_span(const std::vector<K>& v) const {
        return rank() == hstack(*this, from_columns(rows_, {v})).rank();
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<K> a_;
};

inline Matrix<QuadExt> lift(const Matrix<Rational>& m) {
    Matrix<QuadExt> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = QuadExt(m.at(i, j));
    return r;
}

}  // namespace hitchin
