#pragma once

#include "bschur/characters.hpp"
#include "bschur/linalg.hpp"
#include "bschur/partition.hpp"
#include "bschur/rational.hpp"
#include "bschur/snakes.hpp"
#include "bschur/symfunc.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <vector>

namespace bschur {

// Number of partitions of n whose consecutive parts differ by at least 2.
inline long long count_distinct_by_two(int n) {
    long long c = 0;
    for (const Partition& lam : partitions_of(n)) {
        bool ok = true;
        for (int i = 1; i < lam.length() && ok; ++i) ok = lam.part(i) - lam.part(i + 1) >= 2;
        if (ok) ++c;
    }
    return c;
}

// Number of partitions of n into parts congruent to 1 or 4 mod 5, by direct
// restricted enumeration.
inline long long count_mod5_parts(int n) {
    std::vector<int> allowed;
    for (int v = 1; v <= n; ++v)
        if (v % 5 == 1 || v % 5 == 4) allowed.push_back(v);
    long long c = 0;
    auto rec = [&](auto&& self, int remaining, std::size_t idx) -> void {
        if (remaining == 0) { ++c; return; }
        for (std::size_t i = idx; i < allowed.size(); ++i) {
            if (allowed[i] > remaining) break;
            self(self, remaining - allowed[i], i);
        }
    };
    rec(rec, n, 0);
    return c;
}

inline int sqrt_floor(int n) {
    int k = 0;
    while ((k + 1) * (k + 1) <= n) ++k;
    return k;
}

namespace detail {

// ptilde coefficient vectors of the given functions over the columns
// partitions_of(n), as rows of a matrix.
inline QMatrix coefficient_matrix(const std::vector<SymFn>& fns, int n) {
    std::vector<Partition> cols = partitions_of(n);
    std::map<Partition, int, CanonicalLess> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
    QMatrix m(static_cast<int>(fns.size()), static_cast<int>(cols.size()));
    m.col_labels = cols;
    for (std::size_t i = 0; i < fns.size(); ++i)
        for (const auto& [idx, c] : fns[i].terms()) m.at(static_cast<int>(i), col_of.at(idx)) = c;
    return m;
}

inline std::vector<Rat> coefficient_vector(const SymFn& f, int n) {
    std::vector<Partition> cols = partitions_of(n);
    std::vector<Rat> v(cols.size());
    std::map<Partition, int, CanonicalLess> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
    for (const auto& [idx, c] : f.terms()) v[static_cast<std::size_t>(col_of.at(idx))] = c;
    return v;
}

} // namespace detail

// The four-way (plus per-rank breakdown) dimension count for degree n.
// Span ranks are optional because they need the full set of bottom
// functions; the counting values are cheap at any n.
struct DimensionReport {
    int n = 0;
    bool with_rank = false;
    std::map<int, long long> k_breakdown;   // rank of {shat_lam : rank(lam) = k}
    std::optional<long long> span_rank;     // (i)
    long long count_length_eq_rank = 0;     // (ii)
    long long formula_value = 0;            // (iii) sum_k p_{<=k}(n - k^2)
    long long distinct2_count = 0;          // (iv)
    long long mod5_count = 0;               // (v)
    bool all_equal = false;

    long long beta() const { return formula_value; }
};

inline DimensionReport beta(int n, bool with_span_rank = true) {
    if (n < 1) throw std::invalid_argument("beta: n must be >= 1");
    DimensionReport rep;
    rep.n = n;
    rep.with_rank = with_span_rank;

    for (const Partition& nu : partitions_of(n))
        if (nu.length() == nu.rank()) ++rep.count_length_eq_rank;
    for (int k = 1; k <= sqrt_floor(n); ++k) rep.formula_value += p_le_k(n - k * k, k);
    rep.distinct2_count = count_distinct_by_two(n);
    rep.mod5_count = count_mod5_parts(n);

    rep.all_equal = rep.count_length_eq_rank == rep.formula_value && rep.formula_value == rep.distinct2_count &&
                    rep.distinct2_count == rep.mod5_count;

    if (with_span_rank) {
        std::vector<SymFn> all;
        std::map<int, std::vector<SymFn>> per_k;
        for (const Partition& lam : partitions_of(n)) {
            SymFn f = bottom_via_intervals(lam);
            per_k[lam.rank()].push_back(f);
            all.push_back(std::move(f));
        }
        rep.span_rank = rank_of(detail::coefficient_matrix(all, n));
        for (const auto& [k, fns] : per_k) rep.k_breakdown[k] = rank_of(detail::coefficient_matrix(fns, n));
        rep.all_equal = rep.all_equal && *rep.span_rank == rep.formula_value;
        long long sum = 0;
        for (const auto& [k, r] : rep.k_breakdown) sum += r;
        rep.all_equal = rep.all_equal && sum == *rep.span_rank;
    }
    return rep;
}

// The staircase bijection: a partition of n - k^2 with at most k parts maps
// to the parts-differ-by-at-least-2 partition lam_i = lam*_i + 2k - 2i + 1.
inline Partition staircase_bijection(int n, int k, const Partition& lam_star) {
    if (k < 1 || k * k > n) throw std::invalid_argument("staircase_bijection: need 1 <= k^2 <= n");
    if (lam_star.n() != n - k * k) throw std::invalid_argument("staircase_bijection: |lambda*| must be n - k^2");
    if (lam_star.length() > k) throw std::invalid_argument("staircase_bijection: lambda* has more than k parts");
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) parts[static_cast<std::size_t>(i - 1)] = lam_star.part(i) + 2 * k - 2 * i + 1;
    Partition lam(std::move(parts));
    for (int i = 1; i < k; ++i)
        math_check(lam.part(i) - lam.part(i + 1) >= 2, "staircase_bijection: gap below 2");
    math_check(lam.n() == n, "staircase_bijection: output size mismatch");
    return lam;
}

// Dimension of the span of the j-bottom functions of degree n, paired with
// the counting-side value #{lam |- n : l(lam) <= rank(lam) + j - 1}.
struct JBottomReport {
    int n = 0, j = 0;
    long long dim = 0;
    long long count = 0;
};

inline JBottomReport jbottom_dim(int n, int j) {
    if (n < 1 || j < 1) throw std::invalid_argument("jbottom_dim: need n >= 1 and j >= 1");
    JBottomReport rep;
    rep.n = n;
    rep.j = j;
    std::vector<SymFn> fns;
    for (const Partition& lam : partitions_of(n)) {
        fns.push_back(bottom_via_expansion(lam, j));
        if (lam.length() <= lam.rank() + j - 1) ++rep.count;
    }
    rep.dim = rank_of(detail::coefficient_matrix(fns, n));
    return rep;
}

// The power-sum / augmented-monomial identity: from shat_lam written as
// sum c_mu ptilde_mu, the functions sum c_mu p_mu and sum c_mu mtilde_mu
// coincide.  Both sides are expanded to the monomial basis and compared.
struct IdentityReport {
    Partition lam;
    bool equal = false;
    SymFn power_side_in_m{Basis::m};
    SymFn monomial_side_in_m{Basis::m};
};

inline IdentityReport verify_identity(const Partition& lam) {
    IdentityReport rep;
    rep.lam = lam;
    SymFn bottom = bottom_via_intervals(lam);
    SymFn p_side(Basis::p), mt_side(Basis::mtilde);
    for (const auto& [mu, c] : bottom.terms()) {
        p_side.add_term(mu, c);
        mt_side.add_term(mu, c);
    }
    rep.power_side_in_m = p_to_m(p_side);
    rep.monomial_side_in_m = from_augmented(mt_side);
    rep.equal = rep.power_side_in_m == rep.monomial_side_in_m;
    return rep;
}

// Gamma_n: coefficient vectors c (over ptilde_mu) with
// sum c_mu p_mu = sum c_mu mtilde_mu.  Writing both sides in the monomial
// basis turns the condition into (R^T - D) c = 0, so Gamma_n is the kernel
// of (R - D) acting on the left.
struct GammaReport {
    int n = 0;
    long long dim = 0;
    std::vector<SymFn> kernel; // elements of Gamma_n in the ptilde basis
    long long beta_n = 0;
    bool schur_in_span = false;
};

inline GammaReport gamma(int n) {
    if (n < 1) throw std::invalid_argument("gamma: n must be >= 1");
    GammaReport rep;
    rep.n = n;
    QMatrix rd = transition_R(n) - diagonal_D(n);
    std::vector<std::vector<Rat>> basis = kernel_basis(rd.transpose());
    rep.dim = static_cast<long long>(basis.size());
    std::vector<Partition> parts = partitions_of(n);
    for (const auto& v : basis) {
        SymFn f(Basis::ptilde);
        for (std::size_t i = 0; i < parts.size(); ++i) f.add_term(parts[i], v[i]);
        rep.kernel.push_back(std::move(f));
    }
    rep.schur_in_span = true;
    for (const Partition& lam : parts) {
        std::vector<Rat> target = detail::coefficient_vector(bottom_via_intervals(lam), n);
        if (!in_span(basis, target)) rep.schur_in_span = false;
    }
    math_check(rep.schur_in_span, "gamma: some bottom function lies outside ker(R - D)");
    rep.beta_n = beta(n, false).beta();
    math_check(rep.beta_n <= rep.dim, "gamma: beta_n exceeds gamma_n");
    return rep;
}

} // namespace bschur
