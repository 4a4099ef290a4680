#pragma once

#include "bschur/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace bschur {

// A cell (i,j) of a Young diagram, rows and columns 1-based, English
// notation (row 1 on top).
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer partition: weakly decreasing positive parts.  Stored without
// trailing zeros; the empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    // Accepts trailing zeros and strips them; rejects anything that is not
    // weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i > 0 && parts_[i - 1] < parts_[i]))
                throw std::invalid_argument("partition parts must be weakly decreasing and positive");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts into weakly decreasing order first; zeros are dropped.
    static Partition from_multiset(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // The integer being partitioned.
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based part access; parts beyond the length are 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool has_cell(Cell c) const { return c.row >= 1 && c.col >= 1 && c.col <= part(c.row); }

    // mu is contained in this partition's diagram.
    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    // Largest i with lambda_i >= i (Durfee / Frobenius rank).
    int rank() const {
        int r = 0;
        while (r < length() && parts_[static_cast<std::size_t>(r)] >= r + 1) ++r;
        return r;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(static_cast<std::size_t>(parts_[0]));
            for (std::size_t j = 0; j < cols.size(); ++j)
                cols[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                         [&](int p) { return p > static_cast<int>(j); }));
        }
        return Partition(std::move(cols));
    }

    // Multiplicity of the part value v.
    int multiplicity(int v) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
    }

    // Distinct part values, descending.
    std::vector<int> distinct_parts() const {
        std::vector<int> d;
        for (int p : parts_)
            if (d.empty() || d.back() != p) d.push_back(p);
        return d;
    }

    // z_lambda = prod_i i^{m_i} m_i!.
    Int z() const {
        Int r = 1;
        for (int v : distinct_parts()) {
            int m = multiplicity(v);
            r *= int_pow(v, m) * factorial(m);
        }
        return r;
    }

    // Product of the parts (the factor between p_nu and ptilde_nu).
    Int parts_product() const {
        Int r = 1;
        for (int p : parts_) r *= p;
        return r;
    }

    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Canonical order everywhere: descending lexicographic on the part
// sequences, so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1) for n=4.
inline bool canonical_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(a.parts().begin(), a.parts().end(),
                                        b.parts().begin(), b.parts().end(),
                                        std::greater<int>());
}

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

// All partitions of n (at most max_len parts if given), canonical order.
inline std::vector<Partition> partitions_of(int n, std::optional<int> max_len = std::nullopt) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        if (max_len && static_cast<int>(cur.size()) == *max_len) return;
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Number of partitions of n with at most k parts; p_{<=k}(0) = 1.
inline long long p_le_k(int n, int k) {
    if (n < 0) return 0;
    if (k < 1) throw std::invalid_argument("p_le_k: k must be >= 1");
    // ways[m] = partitions of m into at most j parts, j growing.
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int j = 1; j <= k; ++j)
        for (int m = j; m <= n; ++m) ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - j)];
    return ways[static_cast<std::size_t>(n)];
}

// Every mu contained in lam, canonical order within each size.
inline std::vector<Partition> subpartitions_of(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row) -> void {
        if (row > lam.length()) {
            out.push_back(Partition(cur));
            return;
        }
        int hi = std::min(lam.part(row), row == 1 ? lam.part(1) : cur[static_cast<std::size_t>(row - 2)]);
        for (int v = hi; v >= 0; --v) {
            if (v == 0) {
                out.push_back(Partition(cur));
                return; // remaining rows forced to 0
            }
            cur.push_back(v);
            self(self, row + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// Partition text input: comma-separated decimal parts ("5,4,4,2,1"), or a
// digit-string shorthand ("54421") when every part is a single digit.  "0"
// and "" denote the empty partition.  Trailing zeros are stripped.
inline Partition parse_partition(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("malformed partition literal: \"" + text + "\""); };
    if (text.empty()) return Partition{};
    std::vector<int> parts;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue; // permits a trailing comma ("12,")
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                fail();
            }
            if (pos != tok.size() || v < 0) fail();
            parts.push_back(v);
        }
    } else {
        if (text.find_first_not_of("0123456789") != std::string::npos) fail();
        // Digit shorthand when it reads as a weakly decreasing sequence,
        // otherwise a single decimal part ("12" means the one-part partition).
        bool shorthand = text.size() > 1;
        for (std::size_t i = 0; i + 1 < text.size() && shorthand; ++i)
            if (text[i] < text[i + 1]) shorthand = false;
        if (shorthand || text.size() == 1) {
            for (char c : text) parts.push_back(c - '0');
        } else {
            parts.push_back(std::stoi(text));
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::exception&) {
        fail();
    }
    return Partition{}; // unreachable
}

// Skew shape outer/inner.  The inner partition is stored canonically
// (no trailing zeros) and must be contained in the outer one.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("skew shape: inner partition not contained in outer");
    }

    int size() const { return outer.n() - inner.n(); }
    bool has_cell(Cell c) const { return outer.has_cell(c) && !inner.has_cell(c); }

    std::vector<Cell> cells() const {
        std::vector<Cell> cs;
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cs.push_back({i, j});
        return cs;
    }

    std::string to_string() const { return outer.to_string() + " / " + inner.to_string(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

} // namespace bschur
