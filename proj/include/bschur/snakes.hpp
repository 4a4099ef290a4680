#pragma once

#include "bschur/characters.hpp"
#include "bschur/partition.hpp"
#include "bschur/polynomial.hpp"
#include "bschur/rational.hpp"
#include "bschur/symfunc.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace bschur {

enum class SnakeLabel { L, R, O };

inline char snake_label_char(SnakeLabel l) { return l == SnakeLabel::L ? 'L' : l == SnakeLabel::R ? 'R' : 'O'; }

// One edge of the lower envelope: horizontal edges carry the cell directly
// above them, vertical edges the cell directly to their left.
struct SnakeEdge {
    bool horizontal = false;
    Cell cell;
    SnakeLabel label = SnakeLabel::O;
};

struct SnakeSequence {
    std::vector<SnakeEdge> edges; // lower-left to upper-right

    std::string word() const {
        std::string w;
        for (const SnakeEdge& e : edges) w.push_back(snake_label_char(e.label));
        return w;
    }

    std::vector<int> positions_of(SnakeLabel l) const { // 1-based
        std::vector<int> out;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].label == l) out.push_back(static_cast<int>(i) + 1);
        return out;
    }
};

// Walk the lower envelope from lower left to upper right.  Classification
// by the diagonal rule: a horizontal edge under cell (i,j) is L iff i >= j,
// a vertical edge right of cell (i,j) is R iff i <= j, all else O.
inline SnakeSequence snake_sequence(const Partition& lam) {
    if (lam.empty()) throw std::invalid_argument("snake_sequence: partition must be nonempty");
    SnakeSequence s;
    for (int i = lam.length(); i >= 1; --i) {
        for (int j = lam.part(i + 1) + 1; j <= lam.part(i); ++j)
            s.edges.push_back({true, {i, j}, i >= j ? SnakeLabel::L : SnakeLabel::O});
        int j = lam.part(i);
        s.edges.push_back({false, {i, j}, i <= j ? SnakeLabel::R : SnakeLabel::O});
    }
    return s;
}

// The snake attached to an envelope edge, as the printed chain of cells:
// starting from the edge's own cell the chain steps up and left, and stops
// at the first listed cell outside the diagram.  Exposed for inspection;
// the L/R/O classification above does not use it.
inline std::vector<Cell> snake_cells(const Partition& lam, std::size_t edge_index) {
    SnakeSequence s = snake_sequence(lam);
    if (edge_index >= s.edges.size()) throw std::invalid_argument("snake_cells: edge index out of range");
    const SnakeEdge& e = s.edges[edge_index];
    std::vector<Cell> chain;
    Cell c = e.cell;
    bool step_row = e.horizontal; // horizontal: (i,j),(i-1,j),(i-1,j-1),... ; vertical: (i,j),(i,j-1),(i-1,j-1),...
    while (lam.has_cell(c)) {
        chain.push_back(c);
        if (step_row) --c.row; else --c.col;
        step_row = !step_row;
    }
    return chain;
}

// Interval set: a matching of the k L-positions to the k R-positions,
// pairs sorted by start.  Crossings count pairs u_i < u_j < v_i < v_j.
struct IntervalSet {
    std::vector<std::pair<int, int>> pairs; // 1-based word positions
    int crossings = 0;

    Partition type() const {
        std::vector<int> lens;
        lens.reserve(pairs.size());
        for (auto [u, v] : pairs) lens.push_back(v - u);
        return Partition::from_multiset(std::move(lens));
    }
};

inline int count_crossings(const std::vector<std::pair<int, int>>& pairs) {
    int c = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [ui, vi] = pairs[i];
            auto [uj, vj] = pairs[j];
            if (uj < ui) { std::swap(ui, uj); std::swap(vi, vj); }
            if (ui < uj && uj < vi && vi < vj) ++c;
        }
    return c;
}

// All k! interval sets, in lexicographic order of the R-assignment.
inline std::vector<IntervalSet> interval_sets(const Partition& lam) {
    std::vector<IntervalSet> out;
    if (lam.empty()) {
        out.push_back({});
        return out;
    }
    SnakeSequence s = snake_sequence(lam);
    std::vector<int> ls = s.positions_of(SnakeLabel::L);
    std::vector<int> rs = s.positions_of(SnakeLabel::R);
    math_check(ls.size() == rs.size(), "interval_sets: L and R counts differ");
    std::vector<int> perm = rs;
    do {
        IntervalSet is;
        for (std::size_t i = 0; i < ls.size(); ++i) is.pairs.push_back({ls[i], perm[i]});
        is.crossings = count_crossings(is.pairs);
        out.push_back(std::move(is));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Route (b): shat_lam = (-1)^{z(lam)} sum_I (-1)^{c(I)} prod ptilde_{v_i-u_i}.
inline SymFn bottom_via_intervals(const Partition& lam) {
    SymFn f(Basis::ptilde);
    int n = lam.n();
    for (const IntervalSet& is : interval_sets(lam)) {
        Partition type = is.type();
        math_check(type.n() == n, "bottom_via_intervals: interval lengths do not sum to n");
        f.add_term(type, is.crossings % 2 ? -1 : 1);
    }
    if (greedy_z(lam) % 2) f = f * Rat(-1);
    return f;
}

// A labelled interval set: the intervals (sorted by start) plus one
// positive-integer variable label per interval.
struct LabelledIntervalSet {
    IntervalSet base;
    std::vector<int> labels;

    Poly::Monomial monomial() const {
        Poly p = Poly::constant(1);
        for (std::size_t i = 0; i < labels.size(); ++i)
            p = p * Poly::variable_power(labels[i], base.pairs[i].second - base.pairs[i].first);
        return p.terms().begin()->first;
    }

    bool has_repeat() const {
        std::vector<int> l = labels;
        std::sort(l.begin(), l.end());
        return std::adjacent_find(l.begin(), l.end()) != l.end();
    }
};

enum class LabelFilter { all, repeated, distinct };

// Signed sum of x^I over labelled interval sets of lam with labels in
// 1..nvars, optionally restricted to one type.  Returned as the raw
// (unsymmetrized) polynomial.
inline Poly labelled_interval_poly(const Partition& lam, const std::optional<Partition>& type, int nvars,
                                   LabelFilter filter) {
    if (nvars < lam.n()) throw std::invalid_argument("labelled_interval_poly: need nvars >= |lambda|");
    Poly acc;
    for (const IntervalSet& is : interval_sets(lam)) {
        if (type && is.type() != *type) continue;
        std::size_t k = is.pairs.size();
        std::vector<int> labels(k, 1);
        Rat sign = is.crossings % 2 ? -1 : 1;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == k) {
                LabelledIntervalSet lis{is, labels};
                bool rep = lis.has_repeat();
                if ((filter == LabelFilter::repeated && !rep) || (filter == LabelFilter::distinct && rep)) return;
                acc.add_term(lis.monomial(), sign);
                return;
            }
            for (int a = 1; a <= nvars; ++a) {
                labels[i] = a;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return acc;
}

// Same sum, collapsed to exponent-multiset form (checks symmetry).
inline EvalMap labelled_sum_by_type(const Partition& lam, const std::optional<Partition>& type, int nvars,
                                    LabelFilter filter) {
    return symmetrize_checked(labelled_interval_poly(lam, type, nvars, filter), nvars);
}

// The pairing used on labelled interval sets with a repeated label: find the
// smallest repeated label, take the first two intervals carrying it, and
// swap their right endpoints.
inline LabelledIntervalSet involution_partner(const LabelledIntervalSet& lis) {
    int a = 0;
    {
        std::vector<int> l = lis.labels;
        std::sort(l.begin(), l.end());
        for (std::size_t i = 0; i + 1 < l.size(); ++i)
            if (l[i] == l[i + 1]) { a = l[i]; break; }
    }
    if (a == 0) throw std::invalid_argument("involution_partner: no repeated label");
    std::size_t i = lis.labels.size(), j = lis.labels.size();
    for (std::size_t t = 0; t < lis.labels.size(); ++t)
        if (lis.labels[t] == a) {
            if (i == lis.labels.size()) i = t;
            else { j = t; break; }
        }
    LabelledIntervalSet out = lis;
    std::swap(out.base.pairs[i].second, out.base.pairs[j].second);
    out.base.crossings = count_crossings(out.base.pairs);
    return out;
}

struct InvolutionReport {
    long long checked = 0;
    long long violations = 0;
    bool ok() const { return violations == 0; }
};

// Sweeps every repeated-label labelled interval set of lam (labels bounded
// by nvars) and verifies the pairing is a fixed-point-free involution that
// flips crossing parity and preserves the monomial.
inline InvolutionReport involution_check(const Partition& lam, int nvars) {
    if (nvars < lam.n()) throw std::invalid_argument("involution_check: need nvars >= |lambda|");
    InvolutionReport rep;
    for (const IntervalSet& is : interval_sets(lam)) {
        std::size_t k = is.pairs.size();
        if (k < 2) continue;
        std::vector<int> labels(k, 1);
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == k) {
                LabelledIntervalSet lis{is, labels};
                if (!lis.has_repeat()) return;
                ++rep.checked;
                LabelledIntervalSet partner = involution_partner(lis);
                LabelledIntervalSet back = involution_partner(partner);
                bool good = partner.base.pairs != lis.base.pairs;                      // fixed-point-free
                good = good && back.base.pairs == lis.base.pairs && back.labels == lis.labels; // involution
                good = good && ((partner.base.crossings - lis.base.crossings) % 2 != 0);       // sign reversing
                good = good && partner.monomial() == lis.monomial();                   // weight preserving
                if (!good) ++rep.violations;
                return;
            }
            for (int a = 1; a <= nvars; ++a) {
                labels[i] = a;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return rep;
}

} // namespace bschur
