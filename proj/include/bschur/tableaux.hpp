#pragma once

#include "bschur/jacobi_trudi.hpp"
#include "bschur/partition.hpp"
#include "bschur/rational.hpp"
#include "bschur/snakes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace bschur {

// Filling of a skew shape.  Entries live on a dense grid; 0 marks cells
// outside the shape.  Slides mutate shape and grid together.
class SkewTableau {
public:
    SkewTableau() = default;

    // rows[i] holds the entries of row i+1, left to right, one per skew cell.
    SkewTableau(SkewShape shape, const std::vector<std::vector<int>>& rows) : shape_(std::move(shape)) {
        grid_.assign(static_cast<std::size_t>(shape_.outer.length()) + 1,
                     std::vector<int>(static_cast<std::size_t>(shape_.outer.part(1)) + 1, 0));
        if (static_cast<int>(rows.size()) != shape_.outer.length())
            throw std::invalid_argument("SkewTableau: row count mismatch");
        for (int r = 1; r <= shape_.outer.length(); ++r) {
            const auto& row = rows[static_cast<std::size_t>(r - 1)];
            int width = shape_.outer.part(r) - shape_.inner.part(r);
            if (static_cast<int>(row.size()) != width) throw std::invalid_argument("SkewTableau: row width mismatch");
            for (int t = 0; t < width; ++t) {
                int v = row[static_cast<std::size_t>(t)];
                if (v <= 0) throw std::invalid_argument("SkewTableau: entries must be positive");
                grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(shape_.inner.part(r) + 1 + t)] = v;
            }
        }
    }

    const SkewShape& shape() const { return shape_; }
    int size() const { return shape_.size(); }

    int entry(int r, int c) const {
        if (r < 1 || r >= static_cast<int>(grid_.size()) || c < 1 ||
            c >= static_cast<int>(grid_[static_cast<std::size_t>(r)].size()))
            return 0;
        return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        for (int r = 1; r <= shape_.outer.length(); ++r) {
            std::vector<int> row;
            for (int c = shape_.inner.part(r) + 1; c <= shape_.outer.part(r); ++c) row.push_back(entry(r, c));
            out.push_back(std::move(row));
        }
        return out;
    }

    bool is_ssyt() const {
        for (int r = 1; r <= shape_.outer.length(); ++r)
            for (int c = shape_.inner.part(r) + 1; c <= shape_.outer.part(r); ++c) {
                if (shape_.has_cell({r, c + 1}) && entry(r, c) > entry(r, c + 1)) return false;
                if (shape_.has_cell({r + 1, c}) && entry(r, c) >= entry(r + 1, c)) return false;
            }
        return true;
    }

    bool is_syt() const {
        int n = size();
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (const Cell& c : shape_.cells()) {
            int v = entry(c.row, c.col);
            if (v < 1 || v > n || used[static_cast<std::size_t>(v)]) return false;
            used[static_cast<std::size_t>(v)] = true;
            if (shape_.has_cell({c.row, c.col + 1}) && v >= entry(c.row, c.col + 1)) return false;
            if (shape_.has_cell({c.row + 1, c.col}) && v >= entry(c.row + 1, c.col)) return false;
        }
        return true;
    }

    // Content counts as a weak composition; index i-1 holds the number of i's.
    std::vector<int> type() const {
        std::vector<int> t;
        for (const Cell& c : shape_.cells()) {
            int v = entry(c.row, c.col);
            if (static_cast<int>(t.size()) < v) t.resize(static_cast<std::size_t>(v), 0);
            ++t[static_cast<std::size_t>(v - 1)];
        }
        return t;
    }

    friend bool operator==(const SkewTableau& a, const SkewTableau& b) {
        return a.shape_ == b.shape_ && a.rows() == b.rows();
    }

    // Rows r with (r, inner_r) an inner corner: a slide can start there.
    std::vector<int> inner_corner_rows() const {
        std::vector<int> out;
        for (int r = 1; r <= shape_.outer.length(); ++r) {
            int c = shape_.inner.part(r);
            if (c > 0 && c > shape_.inner.part(r + 1)) out.push_back(r);
        }
        return out;
    }

    // One inward jeu de taquin slide from the inner corner in the given row.
    // When the hole sees entries both to its right and below, the smaller
    // one moves; in SYT mode a tie is impossible and is checked.
    void inward_slide(int corner_row) {
        int r = corner_row, c = shape_.inner.part(r);
        if (c == 0 || c <= shape_.inner.part(r + 1))
            throw std::invalid_argument("inward_slide: not an inner corner");
        set_inner(r, c - 1);
        while (true) {
            bool right = shape_.has_cell({r, c + 1});
            bool below = shape_.has_cell({r + 1, c});
            if (!right && !below) break;
            bool take_right;
            if (right && below) {
                math_check(entry(r, c + 1) != entry(r + 1, c), "inward_slide: tie between neighbors");
                take_right = entry(r, c + 1) < entry(r + 1, c);
            } else {
                take_right = right;
            }
            if (take_right) {
                grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry(r, c + 1);
                ++c;
            } else {
                grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry(r + 1, c);
                ++r;
            }
        }
        grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        set_outer(r, c - 1);
    }

    // The reverse move: start from an addable outer cell, larger neighbor
    // moves.  The vacated cell joins the inner shape.
    void outward_slide(int row) {
        int r = row, c = shape_.outer.part(r) + 1;
        if (r != 1 && shape_.outer.part(r - 1) < c)
            throw std::invalid_argument("outward_slide: not an addable outer cell");
        set_outer(r, c);
        while (true) {
            bool up = shape_.has_cell({r - 1, c});
            bool left = shape_.has_cell({r, c - 1});
            if (!up && !left) break;
            bool take_up;
            if (up && left) {
                math_check(entry(r - 1, c) != entry(r, c - 1), "outward_slide: tie between neighbors");
                take_up = entry(r - 1, c) > entry(r, c - 1);
            } else {
                take_up = up;
            }
            if (take_up) {
                grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry(r - 1, c);
                --r;
            } else {
                grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry(r, c - 1);
                --c;
            }
        }
        grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
        set_inner(r, c);
    }

private:
    void set_inner(int r, int value) {
        std::vector<int> in(static_cast<std::size_t>(std::max(shape_.inner.length(), r)), 0);
        for (int i = 1; i <= static_cast<int>(in.size()); ++i) in[static_cast<std::size_t>(i - 1)] = shape_.inner.part(i);
        in[static_cast<std::size_t>(r - 1)] = value;
        shape_ = SkewShape(shape_.outer, Partition(std::move(in)));
    }

    void set_outer(int r, int value) {
        std::vector<int> out(shape_.outer.parts());
        if (r > static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(r), 0);
        out[static_cast<std::size_t>(r - 1)] = value;
        shape_ = SkewShape(Partition(std::move(out)), shape_.inner);
    }

    SkewShape shape_;
    std::vector<std::vector<int>> grid_;
};

// Rows concatenated bottom to top, each left to right.
inline std::vector<int> reading_word(const SkewTableau& t) {
    std::vector<int> w;
    std::vector<std::vector<int>> rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline std::vector<int> reverse_reading_word(const SkewTableau& t) {
    std::vector<int> w = reading_word(t);
    std::reverse(w.begin(), w.end());
    return w;
}

// Every prefix contains at least as many i's as (i+1)'s.
inline bool is_lattice(const std::vector<int>& w) {
    std::map<int, long long> counts;
    for (int a : w) {
        ++counts[a];
        if (a > 1 && counts[a] > counts[a - 1]) return false;
    }
    return true;
}

// The SYT of straight shape nu whose rows are filled consecutively.
inline SkewTableau superstandard_syt(const Partition& nu) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 1; r <= nu.length(); ++r) {
        std::vector<int> row;
        for (int c = 1; c <= nu.part(r); ++c) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return SkewTableau(SkewShape(nu, Partition{}), rows);
}

// Iterated inward slides until the inner shape is empty.  `pick` selects
// which inner corner to use, given how many are available; the result does
// not depend on the choice (tested, not assumed).
inline SkewTableau jdt_rectify(SkewTableau t, const std::function<std::size_t(std::size_t)>& pick) {
    while (true) {
        std::vector<int> corners = t.inner_corner_rows();
        if (corners.empty()) break;
        t.inward_slide(corners[pick(corners.size())]);
    }
    return t;
}

inline SkewTableau jdt_rectify(SkewTableau t) {
    return jdt_rectify(std::move(t), [](std::size_t) { return 0; });
}

// All standard Young tableaux of a skew shape.
inline std::vector<SkewTableau> all_syt(const SkewShape& shape) {
    int n = shape.size();
    std::vector<Cell> cells = shape.cells();
    std::map<Cell, int> filled;
    std::vector<SkewTableau> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            std::vector<std::vector<int>> rows;
            for (int r = 1; r <= shape.outer.length(); ++r) {
                std::vector<int> row;
                for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c) row.push_back(filled.at({r, c}));
                rows.push_back(std::move(row));
            }
            out.push_back(SkewTableau(shape, rows));
            return;
        }
        for (const Cell& c : cells) {
            if (filled.count(c)) continue;
            Cell left{c.row, c.col - 1}, up{c.row - 1, c.col};
            if (shape.has_cell(left) && !filled.count(left)) continue;
            if (shape.has_cell(up) && !filled.count(up)) continue;
            filled[c] = v;
            self(self, v + 1);
            filled.erase(c);
        }
    };
    rec(rec, 1);
    return out;
}

namespace detail {

// Lattice-word SSYT counts for all types at once: DFS over the cells in
// reverse reading order (row 1 right-to-left, then row 2, ...), carrying
// the prefix counts.  Buckets finished fillings by their type.
inline std::map<Partition, long long, CanonicalLess> lr_lattice_by_type(const SkewShape& shape,
                                                                        const Partition* target) {
    std::vector<Cell> order;
    for (int r = 1; r <= shape.outer.length(); ++r)
        for (int c = shape.outer.part(r); c >= shape.inner.part(r) + 1; --c) order.push_back({r, c});
    int n = shape.size();
    std::map<Partition, long long, CanonicalLess> out;
    std::map<Cell, int> entry;
    std::vector<long long> counts(static_cast<std::size_t>(n) + 2, 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == order.size()) {
            std::vector<int> type;
            for (int v = 1; v <= n && counts[static_cast<std::size_t>(v)] > 0; ++v)
                type.push_back(static_cast<int>(counts[static_cast<std::size_t>(v)]));
            ++out[Partition(std::move(type))];
            return;
        }
        Cell c = order[pos];
        for (int v = 1; v <= n; ++v) {
            if (v > 1 && counts[static_cast<std::size_t>(v - 1)] == 0) break; // counts are weakly decreasing
            if (v > 1 && counts[static_cast<std::size_t>(v)] >= counts[static_cast<std::size_t>(v - 1)]) continue;
            if (target && counts[static_cast<std::size_t>(v)] >= target->part(v)) continue;
            Cell right{c.row, c.col + 1}, above{c.row - 1, c.col};
            if (shape.has_cell(right) && v > entry.at(right)) continue;       // rows weakly increase
            if (shape.has_cell(above) && v <= entry.at(above)) continue;      // columns strictly increase
            entry[c] = v;
            ++counts[static_cast<std::size_t>(v)];
            self(self, pos + 1);
            --counts[static_cast<std::size_t>(v)];
            entry.erase(c);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

inline void check_lr_inputs(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!lam.contains(mu)) throw std::invalid_argument("LR coefficient: mu is not contained in lambda");
    if (lam.n() - mu.n() != nu.n()) throw std::invalid_argument("LR coefficient: |lambda| - |mu| != |nu|");
}

// Littlewood-Richardson rule, lattice-word form: SSYT of shape lam/mu and
// type nu whose reverse reading word is a lattice permutation.
inline long long lr_coeff_lattice(const Partition& lam, const Partition& mu, const Partition& nu) {
    check_lr_inputs(lam, mu, nu);
    auto m = detail::lr_lattice_by_type(SkewShape(lam, mu), &nu);
    auto it = m.find(nu);
    return it == m.end() ? 0 : it->second;
}

// All nonzero c^lam_{mu,nu} at once, by the lattice rule.
inline std::map<Partition, long long, CanonicalLess> lr_all_lattice(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) throw std::invalid_argument("LR coefficient: mu is not contained in lambda");
    return detail::lr_lattice_by_type(SkewShape(lam, mu), nullptr);
}

// Littlewood-Richardson rule, jeu de taquin form: SYT of shape lam/mu that
// rectify to the fixed superstandard tableau of shape nu.
inline long long lr_coeff_jdt(const Partition& lam, const Partition& mu, const Partition& nu) {
    check_lr_inputs(lam, mu, nu);
    SkewTableau target = superstandard_syt(nu);
    long long count = 0;
    for (const SkewTableau& t : all_syt(SkewShape(lam, mu)))
        if (jdt_rectify(t) == target) ++count;
    return count;
}

// All coefficients at once: rectify every SYT of lam/mu and count those
// landing exactly on the superstandard tableau of their shape.
inline std::map<Partition, long long, CanonicalLess> lr_all_jdt(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) throw std::invalid_argument("LR coefficient: mu is not contained in lambda");
    std::map<Partition, long long, CanonicalLess> out;
    for (const SkewTableau& t : all_syt(SkewShape(lam, mu))) {
        SkewTableau p = jdt_rectify(t);
        if (p == superstandard_syt(p.shape().outer)) ++out[p.shape().outer];
    }
    return out;
}

// Expansion of the bottom function over the rank-k basis: with
// mu/sigma = skew_from_minor(lam), the coefficients c^mu_{sigma,nu}.  The
// support is checked to satisfy l(nu) = rank(nu) = k, and the expansion is
// re-verified as an exact ptilde identity.  The identity carries the same
// complementary-minor sign as the determinant route,
//   shat_lam = sign * sum_nu c^mu_{sigma,nu} shat_nu,
// because shat_lam equals sign * shat_{mu/sigma}, not shat_{mu/sigma}
// itself (e.g. shat_33111 = -shat_63).
inline std::map<Partition, long long, CanonicalLess> expand_bottom_in_basis(const Partition& lam) {
    std::map<Partition, long long, CanonicalLess> out;
    if (lam.empty()) return out;
    int k = lam.rank();
    SkewShape sk = skew_from_minor(lam);
    SymFn expansion(Basis::ptilde);
    for (const auto& [nu, c] : lr_all_lattice(sk.outer, sk.inner)) {
        math_check(nu.length() == k && nu.rank() == k,
                   "expand_bottom_in_basis: coefficient outside the rank-k basis at " + nu.to_string());
        out[nu] = c;
        expansion += bottom_via_intervals(nu) * Rat(c);
    }
    if (jt_star(lam).sign < 0) expansion = expansion * Rat(-1);
    math_check(expansion == bottom_via_intervals(lam),
               "expand_bottom_in_basis: ptilde identity fails for " + lam.to_string());
    return out;
}

} // namespace bschur
