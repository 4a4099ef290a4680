#pragma once

#include "bschur/partition.hpp"
#include "bschur/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bschur {

// Sparse exact polynomial in x_1..x_N.  A monomial is a sorted list of
// (variable, exponent) pairs with positive exponents.  This is the faithful
// finite-variable oracle behind evaluate_finite and the labelled
// interval-set sums; it is not symmetric by construction, symmetry is
// checked on conversion.
class Poly {
public:
    using Monomial = std::vector<std::pair<int, int>>;

    Poly() = default;

    static Poly constant(const Rat& c) {
        Poly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }

    static Poly variable_power(int var, int exp, const Rat& coeff = 1) {
        Poly p;
        if (coeff != 0) {
            Monomial m;
            if (exp > 0) m.push_back({var, exp});
            p.terms_[std::move(m)] = coeff;
        }
        return p;
    }

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(merge(ma, mb), ca * cb);
        return r;
    }

    Poly operator*(const Rat& c) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    static Monomial merge(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].first < b[j].first) r.push_back(a[i++]);
            else if (a[i].first > b[j].first) r.push_back(b[j++]);
            else { r.push_back({a[i].first, a[i].second + b[j].second}); ++i; ++j; }
        }
        while (i < a.size()) r.push_back(a[i++]);
        while (j < b.size()) r.push_back(b[j++]);
        return r;
    }

private:
    std::map<Monomial, Rat> terms_;
};

// A symmetric polynomial in N variables, keyed by the exponent multiset of
// each monomial (a partition).  The stored coefficient is the one carried by
// every individual monomial with that exponent shape.
struct EvalMap {
    int nvars = 0;
    std::map<Partition, Rat, CanonicalLess> coeffs;

    friend bool operator==(const EvalMap&, const EvalMap&) = default;
};

// Collapse a polynomial to its exponent-multiset form, checking on the way
// that all monomials sharing a shape carry equal coefficients (i.e. that the
// polynomial really is symmetric).
inline EvalMap symmetrize_checked(const Poly& p, int nvars) {
    EvalMap out;
    out.nvars = nvars;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps;
        exps.reserve(m.size());
        for (auto [var, e] : m) exps.push_back(e);
        Partition shape = Partition::from_multiset(std::move(exps));
        auto [it, inserted] = out.coeffs.emplace(shape, c);
        if (!inserted)
            math_check(it->second == c, "symmetrize_checked: polynomial is not symmetric");
    }
    return out;
}

} // namespace bschur
