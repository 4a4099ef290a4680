#pragma once

#include "bschur/partition.hpp"
#include "bschur/rational.hpp"
#include "bschur/symfunc.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace bschur {

// A border strip (rim hook): edgewise-connected skew shape with no 2x2
// block.  Height is one less than the number of rows it spans.
struct BorderStrip {
    std::vector<Cell> cells;
    int height = 0;
};

// Is this cell set a border strip?  Checked geometrically: nonempty,
// edge-connected, and containing no 2x2 square.
inline bool is_border_strip(const std::vector<Cell>& cells) {
    if (cells.empty()) return false;
    std::set<Cell> s(cells.begin(), cells.end());
    for (const Cell& c : cells)
        if (s.count({c.row + 1, c.col}) && s.count({c.row, c.col + 1}) && s.count({c.row + 1, c.col + 1}))
            return false;
    std::set<Cell> seen;
    std::queue<Cell> q;
    q.push(cells.front());
    seen.insert(cells.front());
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        for (Cell d : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}})
            if (s.count(d) && !seen.count(d)) {
                seen.insert(d);
                q.push(d);
            }
    }
    return seen.size() == s.size();
}

inline int strip_height(const std::vector<Cell>& cells) {
    std::set<int> rows;
    for (const Cell& c : cells) rows.insert(c.row);
    return static_cast<int>(rows.size()) - 1;
}

struct StripRemoval {
    Partition rest;
    int height = 0;
};

namespace detail {

// First-column hook lengths ("beta numbers"): b_i = lambda_i + l - i,
// strictly decreasing.  Removing a border strip of size s moves one b_i
// down to an unoccupied b_i - s; the strip spans one row per beta value
// jumped over, plus one.
inline std::vector<int> beta_numbers(const Partition& lam) {
    std::vector<int> b(static_cast<std::size_t>(lam.length()));
    for (int i = 1; i <= lam.length(); ++i)
        b[static_cast<std::size_t>(i - 1)] = lam.part(i) + lam.length() - i;
    return b;
}

inline Partition partition_from_betas(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    int l = static_cast<int>(b.size());
    std::vector<int> parts(b.size());
    for (int i = 1; i <= l; ++i) parts[static_cast<std::size_t>(i - 1)] = b[static_cast<std::size_t>(i - 1)] - (l - i);
    return Partition(std::move(parts));
}

} // namespace detail

// All mu obtained from lam by removing a border strip of the given size,
// with the strip's height, in canonical order of the results.
inline std::vector<StripRemoval> removable_border_strips(const Partition& lam, int size) {
    if (size < 1) throw std::invalid_argument("removable_border_strips: size must be >= 1");
    std::vector<int> b = detail::beta_numbers(lam);
    std::vector<StripRemoval> out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        int t = b[i] - size;
        if (t < 0 || std::find(b.begin(), b.end(), t) != b.end()) continue;
        int ht = 0;
        for (int x : b)
            if (t < x && x < b[i]) ++ht;
        std::vector<int> nb = b;
        nb[i] = t;
        out.push_back({detail::partition_from_betas(std::move(nb)), ht});
    }
    std::sort(out.begin(), out.end(),
              [](const StripRemoval& a, const StripRemoval& b2) { return canonical_less(a.rest, b2.rest); });
    return out;
}

// Border strip tableau of a given shape and type (a weak composition; zero
// parts contribute nothing).  The chain has one partition per type entry,
// starting from the empty shape.
struct BorderStripTableau {
    Partition shape;
    std::vector<Partition> chain; // chain[0] = empty, chain[i] after placing type[0..i)
    std::vector<int> type;
    int height = 0;
};

// Exhaustive enumeration, depth-first over the chain, validating each
// difference geometrically.  Independent of the beta-number machinery.
inline std::vector<BorderStripTableau> border_strip_tableaux(const Partition& shape, const std::vector<int>& type) {
    for (int t : type)
        if (t < 0) throw std::invalid_argument("border_strip_tableaux: type entries must be >= 0");
    int total = 0;
    for (int t : type) total += t;
    std::vector<BorderStripTableau> out;
    if (total != shape.n()) return out;

    std::vector<int> sizes; // nonzero entries, in order
    for (int t : type)
        if (t > 0) sizes.push_back(t);

    // Peel strips off `shape` for sizes back-to-front.
    std::vector<Partition> stack{shape};
    std::vector<int> heights;
    auto rec = [&](auto&& self, int step) -> void {
        if (step < 0) {
            if (!stack.back().empty()) return;
            BorderStripTableau t;
            t.shape = shape;
            t.type = type;
            for (int h : heights) t.height += h;
            // Reinsert the zero-part repeats while building the ascending chain.
            std::vector<Partition> nonzero_chain(stack.rbegin(), stack.rend()); // empty .. shape
            t.chain.push_back(nonzero_chain.front());
            std::size_t k = 1;
            for (int tp : type)
                t.chain.push_back(tp == 0 ? t.chain.back() : nonzero_chain[k++]);
            out.push_back(std::move(t));
            return;
        }
        Partition cur = stack.back(); // copy: pushes below may reallocate the stack
        int s = sizes[static_cast<std::size_t>(step)];
        if (cur.n() < s) return;
        // candidate sub-partitions mu with |mu| = |cur| - s and cur/mu a strip
        std::vector<int> mu;
        auto gen = [&](auto&& gen_self, int row, int remaining) -> void {
            if (remaining < 0) return;
            if (row > cur.length()) {
                if (remaining != 0) return;
                Partition m(mu);
                std::vector<Cell> cells = SkewShape(cur, m).cells();
                if (!is_border_strip(cells)) return;
                heights.push_back(strip_height(cells));
                stack.push_back(m);
                self(self, step - 1);
                stack.pop_back();
                heights.pop_back();
                return;
            }
            int hi = std::min(cur.part(row), row == 1 ? cur.part(1) : mu[static_cast<std::size_t>(row - 2)]);
            for (int v = hi; v >= 0; --v) {
                mu.push_back(v);
                gen_self(gen_self, row + 1, remaining - v);
                mu.pop_back();
            }
        };
        gen(gen, 1, cur.n() - s);
    };
    rec(rec, static_cast<int>(sizes.size()) - 1);
    return out;
}

namespace detail {

struct PartitionPairLess {
    bool operator()(const std::pair<Partition, Partition>& a, const std::pair<Partition, Partition>& b) const {
        if (a.first != b.first) return canonical_less(a.first, b.first);
        return canonical_less(a.second, b.second);
    }
};

inline std::map<std::pair<Partition, Partition>, long long, PartitionPairLess>& chi_cache() {
    static std::map<std::pair<Partition, Partition>, long long, PartitionPairLess> cache;
    return cache;
}

inline std::shared_mutex& chi_cache_mutex() {
    static std::shared_mutex mtx;
    return mtx;
}

} // namespace detail

// Irreducible symmetric group character chi^lam(nu), by Murnaghan-Nakayama
// recursion over the largest remaining part of nu (that order keeps the
// memo keys canonical).
inline long long chi(const Partition& lam, const Partition& nu) {
    if (lam.n() != nu.n()) throw std::invalid_argument("chi: |lambda| != |nu|");
    if (lam.empty()) return 1;
    std::pair<Partition, Partition> key{lam, nu};
    {
        std::shared_lock lock(detail::chi_cache_mutex());
        auto it = detail::chi_cache().find(key);
        if (it != detail::chi_cache().end()) return it->second;
    }
    int t = nu.part(1);
    Partition rest_nu(std::vector<int>(nu.parts().begin() + 1, nu.parts().end()));
    long long v = 0;
    for (const StripRemoval& r : removable_border_strips(lam, t))
        v += (r.height % 2 ? -1 : 1) * chi(r.rest, rest_nu);
    std::unique_lock lock(detail::chi_cache_mutex());
    detail::chi_cache().emplace(key, v);
    return v;
}

// Direct route: signed count over all border strip tableaux of shape lam
// and type nu.
inline long long chi_by_enumeration(const Partition& lam, const Partition& nu) {
    if (lam.n() != nu.n()) throw std::invalid_argument("chi_by_enumeration: |lambda| != |nu|");
    long long v = 0;
    for (const BorderStripTableau& t : border_strip_tableaux(lam, nu.parts())) v += (t.height % 2 ? -1 : 1);
    return v;
}

// s_lam = sum_nu chi^lam(nu) p_nu / z_nu.
inline SymFn schur_in_p(const Partition& lam) {
    SymFn f(Basis::p);
    for (const Partition& nu : partitions_of(lam.n())) {
        long long c = chi(lam, nu);
        if (c) f.add_term(nu, Rat(c) / Rat(nu.z()));
    }
    return f;
}

// Height of the greedy border strip tableau: repeatedly remove the largest
// removable strip.  The largest has the size of the principal hook, and the
// result of removing it must be unique; that uniqueness is checked rather
// than assumed.
inline int greedy_z(const Partition& lam) {
    Partition cur = lam;
    int z = 0;
    while (!cur.empty()) {
        int hook = cur.part(1) + cur.length() - 1;
        std::vector<StripRemoval> rs = removable_border_strips(cur, hook);
        math_check(rs.size() == 1, "greedy_z: maximum-size strip removal is not unique for " + cur.to_string());
        z += rs.front().height;
        cur = rs.front().rest;
    }
    return z;
}

// j-bottom extraction via the character expansion: keep terms with
// l(nu) <= rank(lam) + j - 1 and rescale to the ptilde basis.
inline SymFn bottom_via_expansion(const Partition& lam, int j = 1) {
    if (j < 1) throw std::invalid_argument("bottom_via_expansion: j must be >= 1");
    return to_ptilde(degree_filter(schur_in_p(lam), lam.rank() + j - 1));
}

// Full character table of S_n, rows and columns in canonical order.
struct CharacterTable {
    int n = 0;
    std::vector<std::tuple<Partition, Partition, long long>> entries;

    friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

inline CharacterTable character_table(int n) {
    CharacterTable t;
    t.n = n;
    std::vector<Partition> parts = partitions_of(n);
    for (const Partition& lam : parts)
        for (const Partition& nu : parts) t.entries.emplace_back(lam, nu, chi(lam, nu));
    return t;
}

// Pre-populate the chi cache from a stored table (used by the CLI cache).
inline void seed_chi_cache(const CharacterTable& t) {
    std::unique_lock lock(detail::chi_cache_mutex());
    for (const auto& [lam, nu, v] : t.entries) detail::chi_cache().emplace(std::make_pair(lam, nu), v);
}

} // namespace bschur
