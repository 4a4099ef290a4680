#pragma once

#include "bschur/partition.hpp"
#include "bschur/rational.hpp"
#include "bschur/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace bschur {

// Jacobi-Trudi matrix stored by entry subscripts: entry (i,j) holds
// lambda_i - i + j.  A negative subscript is the zero entry, subscript 0 is
// the constant 1 (h_0).
struct JTMatrix {
    int size = 0;
    std::vector<std::vector<int>> subs;

    int sub(int i, int j) const { return subs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
};

inline JTMatrix jt_matrix(const Partition& lam) {
    if (lam.empty()) throw std::invalid_argument("jt_matrix: partition must be nonempty");
    JTMatrix m;
    m.size = lam.length();
    m.subs.assign(static_cast<std::size_t>(m.size), std::vector<int>(static_cast<std::size_t>(m.size)));
    for (int i = 1; i <= m.size; ++i)
        for (int j = 1; j <= m.size; ++j)
            m.subs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = lam.part(i) - i + j;
    return m;
}

// The minor left after deleting every row and column that contains a
// constant-1 entry: rows i with lambda_i < i, each contributing the column
// j = i - lambda_i.  `sign` is the complementary-minor sign
// (-1)^{sum of removed row and column indices}; the deleted rows and
// columns form a triangular block with unit diagonal, so the lowest-degree
// part of det JT is exactly sign * det(minor with h -> ptilde).
struct JTMinor {
    JTMatrix matrix;
    std::vector<int> removed_rows; // 1-based
    std::vector<int> removed_cols;
    int sign = 1;
};

inline JTMinor jt_star(const Partition& lam) {
    JTMinor out;
    if (lam.empty()) return out; // empty minor, det 1
    int l = lam.length();
    long long index_sum = 0;
    std::vector<bool> col_removed(static_cast<std::size_t>(l) + 1, false);
    for (int i = 1; i <= l; ++i) {
        if (lam.part(i) < i) {
            int j = i - lam.part(i);
            out.removed_rows.push_back(i);
            out.removed_cols.push_back(j);
            col_removed[static_cast<std::size_t>(j)] = true;
            index_sum += i + j;
        }
    }
    out.sign = index_sum % 2 ? -1 : 1;
    int k = l - static_cast<int>(out.removed_rows.size());
    math_check(k == lam.rank(), "jt_star: minor size differs from rank");
    out.matrix.size = k;
    for (int i = 1; i <= k; ++i) { // kept rows are exactly 1..rank
        std::vector<int> row;
        for (int j = 1; j <= l; ++j)
            if (!col_removed[static_cast<std::size_t>(j)]) row.push_back(lam.part(i) - i + j);
        out.matrix.subs.push_back(std::move(row));
    }
    return out;
}

// Symbolic determinant over permutations, entries read as ptilde with the
// stored subscripts.  Negative subscripts annihilate the term; a constant-1
// entry (subscript 0) means the caller forgot to take the minor first.
inline SymFn det_ptilde(const JTMatrix& m) {
    for (const auto& row : m.subs)
        for (int s : row)
            if (s == 0)
                throw std::invalid_argument("det_ptilde: matrix contains a constant-1 entry; take the minor first");
    SymFn det(Basis::ptilde);
    if (m.size == 0) {
        det.add_term(Partition{}, 1);
        return det;
    }
    std::vector<int> perm(static_cast<std::size_t>(m.size));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> index;
        bool zero = false;
        for (int i = 1; i <= m.size && !zero; ++i) {
            int s = m.sub(i, perm[static_cast<std::size_t>(i - 1)]);
            if (s < 0) zero = true;
            else index.push_back(s);
        }
        if (zero) continue;
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        det.add_term(Partition::from_multiset(std::move(index)), inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    math_check(!det.is_zero(), "det_ptilde: determinant vanished");
    return det;
}

// Route (c): the signed minor determinant.
inline SymFn bottom_via_jt(const Partition& lam) {
    JTMinor minor = jt_star(lam);
    SymFn det = det_ptilde(minor.matrix);
    return minor.sign == 1 ? det : det * Rat(-1);
}

// Recover the skew shape mu/sigma whose Jacobi-Trudi matrix is jt_star(lam),
// from the minor's subscripts, and check it against the closed form
// mu_i = l(lam) - k + lambda_i, sigma_i = #{s : lambda_s <= k - i}.
inline SkewShape skew_from_minor(const Partition& lam) {
    if (lam.empty()) return SkewShape{};
    JTMinor minor = jt_star(lam);
    int k = minor.matrix.size;
    std::vector<int> sigma(static_cast<std::size_t>(k)), mu(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        sigma[static_cast<std::size_t>(i - 1)] = minor.matrix.sub(1, k) - minor.matrix.sub(1, i) - k + i;
    for (int i = 1; i <= k; ++i) mu[static_cast<std::size_t>(i - 1)] = minor.matrix.sub(i, i) + sigma[static_cast<std::size_t>(i - 1)];

    std::vector<int> mu2(static_cast<std::size_t>(k)), sigma2(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        mu2[static_cast<std::size_t>(i - 1)] = lam.length() - k + lam.part(i);
        int cnt = 0;
        for (int s = 1; s <= lam.length(); ++s)
            if (lam.part(s) <= k - i) ++cnt;
        sigma2[static_cast<std::size_t>(i - 1)] = cnt;
    }
    math_check(mu == mu2 && sigma == sigma2, "skew_from_minor: minor formulas disagree with the closed form for " +
                                                 lam.to_string());
    SkewShape sk{Partition(std::move(mu)), Partition(std::move(sigma))};
    math_check(sk.size() == lam.n(), "skew_from_minor: skew size mismatch");
    return sk;
}

// Does the k-row skew shape cover a full k x k square?  True iff rows
// 1..k all contain columns sigma_1+1 .. sigma_1+k.
inline bool square_certificate(const SkewShape& s, int k) {
    if (s.outer.length() != k) throw std::invalid_argument("square_certificate: shape must have exactly k rows");
    return s.outer.part(k) >= s.inner.part(1) + k;
}

} // namespace bschur
