#pragma once

#include <functional>
#include <vector>

#include "hitchin/binary_form.hpp"

namespace hitchin {

// Matrix of homogeneous binary forms.  Degree coherence is not tracked by the
// container itself: adding forms of unequal degrees throws, so incoherent
// products and sums surface as exceptions at the point of use.
template <ScalarField K>
class FormMatrix {
public:
    FormMatrix() : rows_(0), cols_(0) {}
    FormMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {
        if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
    }
    FormMatrix(int rows, int cols, std::vector<BinaryForm<K>> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (static_cast<int>(e_.size()) != rows * cols)
            throw ValidationError("form matrix entry count does not match its shape");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const BinaryForm<K>& at(int i, int j) const { return e_.at(i * cols_ + j); }
    BinaryForm<K>& at(int i, int j) { return e_.at(i * cols_ + j); }

    bool is_zero() const {
        for (const auto& f : e_)
            if (!f.is_zero()) return false;
        return true;
    }

    FormMatrix operator*(const FormMatrix& o) const {
        if (cols_ != o.rows_) throw ValidationError("form matrix product shape mismatch");
        FormMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < o.cols_; ++k) {
                BinaryForm<K> acc;
                for (int j = 0; j < cols_; ++j) acc = acc + at(i, j) * o.at(j, k);
                r.at(i, k) = std::move(acc);
            }
        return r;
    }

    FormMatrix operator+(const FormMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("form matrix sum shape mismatch");
        FormMatrix r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    FormMatrix operator-() const {
        FormMatrix r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }

    FormMatrix operator-(const FormMatrix& o) const { return *this + (-o); }

    FormMatrix scaled(const K& s) const {
        FormMatrix r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
        return r;
    }

    FormMatrix scaled(const BinaryForm<K>& f) const {
        FormMatrix r(rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * f;
        return r;
    }

    FormMatrix transpose() const {
        FormMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    FormMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        FormMatrix r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (size_t i = 0; i < row_idx.size(); ++i)
            for (size_t j = 0; j < col_idx.size(); ++j) r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    // Laplace expansion along the first row; fine at the matrix sizes that
    // occur here (rank <= 4 or so).
    BinaryForm<K> det() const {
        if (rows_ != cols_) throw ValidationError("determinant of a non-square form matrix");
        if (rows_ == 0) return BinaryForm<K>::constant(K(1));
        if (rows_ == 1) return at(0, 0);
        BinaryForm<K> acc;
        std::vector<int> rows_rest;
        for (int i = 1; i < rows_; ++i) rows_rest.push_back(i);
        for (int j = 0; j < cols_; ++j) {
            if (at(0, j).is_zero()) continue;
            std::vector<int> cols_rest;
            for (int c = 0; c < cols_; ++c)
                if (c != j) cols_rest.push_back(c);
            BinaryForm<K> term = at(0, j) * submatrix(rows_rest, cols_rest).det();
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    // Sum of all principal k x k minors: the k-th elementary symmetric
    // function of the eigenvalues, so that det(lambda*I - M) =
    // sum_k (-1)^k minors_sum(k) lambda^(n-k).
    BinaryForm<K> minors_sum(int k) const {
        if (rows_ != cols_) throw ValidationError("principal minors of a non-square form matrix");
        if (k < 0 || k > rows_) throw ValidationError("principal minor size out of range");
        if (k == 0) return BinaryForm<K>::constant(K(1));
        BinaryForm<K> acc;
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            acc = acc + submatrix(idx, idx).det();
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == rows_ - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        return acc;
    }

    FormMatrix adjugate() const {
        if (rows_ != cols_) throw ValidationError("adjugate of a non-square form matrix");
        FormMatrix r(rows_, cols_);
        if (rows_ == 1) {
            r.at(0, 0) = BinaryForm<K>::constant(K(1));
            return r;
        }
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                std::vector<int> ri, ci;
                for (int a = 0; a < rows_; ++a)
                    if (a != j) ri.push_back(a);
                for (int b = 0; b < cols_; ++b)
                    if (b != i) ci.push_back(b);
                BinaryForm<K> cof = submatrix(ri, ci).det();
                r.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
            }
        return r;
    }

    friend bool operator==(const FormMatrix& a, const FormMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<BinaryForm<K>> e_;
};

inline FormMatrix<QuadExt> lift(const FormMatrix<Rational>& m) {
    FormMatrix<QuadExt> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = lift(m.at(i, j));
    return r;
}

}  // namespace hitchin
