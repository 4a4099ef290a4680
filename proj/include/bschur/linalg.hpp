#pragma once

#include "bschur/partition.hpp"
#include "bschur/rational.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bschur {

// Dense exact-rational matrix.  Elimination uses the first nonzero entry in
// column order as pivot, so ranks and kernel bases are reproducible.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        t.row_labels = col_labels;
        t.col_labels = row_labels;
        return t;
    }

    QMatrix operator-(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
        QMatrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
            os << '\n';
        }
        return os.str();
    }

    // Optional partition labels for rows/columns of transition matrices.
    std::optional<std::vector<Partition>> row_labels;
    std::optional<std::vector<Partition>> col_labels;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

namespace detail {

// Row echelon reduction in place; returns the pivot column of each pivot row.
inline std::vector<int> echelonize(QMatrix& m) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace detail

inline int rank_of(QMatrix m) { return static_cast<int>(detail::echelonize(m).size()); }

inline Rat determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Rat det = 1;
    for (int c = 0; c < m.cols(); ++c) {
        int p = -1;
        for (int i = c; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        for (int i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

// Basis of the right null space {v : Mv = 0}.  Each returned vector is
// re-checked against M exactly.
inline std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
    QMatrix e = m;
    std::vector<int> pivot_cols = detail::echelonize(e);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[static_cast<std::size_t>(pivot_cols[r])] = -e.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis) {
        for (int i = 0; i < m.rows(); ++i) {
            Rat s = 0;
            for (int j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[static_cast<std::size_t>(j)];
            math_check(s == 0, "kernel_basis: vector fails Mv = 0");
        }
    }
    return basis;
}

// Is target a rational linear combination of the given vectors?
inline bool in_span(const std::vector<std::vector<Rat>>& vectors, const std::vector<Rat>& target) {
    std::size_t dim = target.size();
    for (const auto& v : vectors)
        if (v.size() != dim) throw std::invalid_argument("in_span: dimension mismatch");
    QMatrix a(static_cast<int>(vectors.size()), static_cast<int>(dim));
    QMatrix b(static_cast<int>(vectors.size()) + 1, static_cast<int>(dim));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            a.at(static_cast<int>(i), static_cast<int>(j)) = vectors[i][j];
            b.at(static_cast<int>(i), static_cast<int>(j)) = vectors[i][j];
        }
    for (std::size_t j = 0; j < dim; ++j) b.at(static_cast<int>(vectors.size()), static_cast<int>(j)) = target[j];
    return rank_of(a) == rank_of(b);
}

} // namespace bschur
