#pragma once

#include "bschur/linalg.hpp"
#include "bschur/partition.hpp"
#include "bschur/polynomial.hpp"
#include "bschur/rational.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <vector>

namespace bschur {

enum class Basis { p, ptilde, m, mtilde, h };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::ptilde: return "ptilde";
        case Basis::m: return "m";
        case Basis::mtilde: return "mtilde";
        case Basis::h: return "h";
    }
    return "?";
}

inline std::string basis_symbol(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::ptilde: return "p~";
        case Basis::m: return "m";
        case Basis::mtilde: return "m~";
        case Basis::h: return "h";
    }
    return "?";
}

// Sparse symmetric function: a basis label plus a map from index partitions
// to nonzero rational coefficients, kept in canonical order.
class SymFn {
public:
    explicit SymFn(Basis b = Basis::p) : basis_(b) {}

    static SymFn zero(Basis b) { return SymFn(b); }

    static SymFn unit(Basis b, const Partition& index, const Rat& c = 1) {
        SymFn f(b);
        f.add_term(index, c);
        return f;
    }

    Basis basis() const { return basis_; }
    const std::map<Partition, Rat, CanonicalLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coefficient(const Partition& index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Largest |index| over stored terms (polynomial degree).
    int degree() const {
        int d = 0;
        for (const auto& [idx, c] : terms_) d = std::max(d, idx.n());
        return d;
    }

    void add_term(const Partition& index, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(index);
        if (it == terms_.end()) {
            terms_.emplace(index, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SymFn& operator+=(const SymFn& o) {
        if (basis_ != o.basis_) throw std::invalid_argument("SymFn add: basis mismatch");
        for (const auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }

    SymFn& operator-=(const SymFn& o) { return *this += o * Rat(-1); }

    friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
    friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }

    SymFn operator*(const Rat& c) const {
        SymFn r(basis_);
        if (c == 0) return r;
        for (const auto& [idx, k] : terms_) r.terms_.emplace(idx, k * c);
        return r;
    }

    // Product by multiset union of indices; valid in the multiplicative
    // bases p and ptilde only.
    SymFn operator*(const SymFn& o) const {
        if (basis_ != o.basis_) throw std::invalid_argument("SymFn multiply: basis mismatch");
        if (basis_ != Basis::p && basis_ != Basis::ptilde)
            throw std::invalid_argument("SymFn multiply: only defined in the p and ptilde bases");
        SymFn r(basis_);
        for (const auto& [ia, ca] : terms_)
            for (const auto& [ib, cb] : o.terms_) {
                std::vector<int> parts = ia.parts();
                parts.insert(parts.end(), ib.parts().begin(), ib.parts().end());
                r.add_term(Partition::from_multiset(std::move(parts)), ca * cb);
            }
        return r;
    }

    friend bool operator==(const SymFn&, const SymFn&) = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, c] : terms_) {
            Rat a = c < 0 ? Rat(-c) : c;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            if (a != 1) os << a << " ";
            os << basis_symbol(basis_) << "[" << idx.to_string() << "]";
            first = false;
        }
        return os.str();
    }

private:
    Basis basis_;
    std::map<Partition, Rat, CanonicalLess> terms_;
};

inline SymFn operator*(const Rat& c, const SymFn& f) { return f * c; }

// h_n = sum over lambda |- n of p_lambda / z_lambda.
inline SymFn h_in_p(int n) {
    if (n < 1) throw std::invalid_argument("h_in_p: n must be >= 1");
    SymFn f(Basis::p);
    for (const Partition& lam : partitions_of(n)) f.add_term(lam, Rat(1) / Rat(lam.z()));
    return f;
}

// Coefficient transport between p and ptilde: p_nu = (prod nu_i) ptilde_nu.
inline SymFn to_ptilde(const SymFn& f) {
    if (f.basis() != Basis::p) throw std::invalid_argument("to_ptilde: input must be in the p basis");
    SymFn r(Basis::ptilde);
    for (const auto& [idx, c] : f.terms()) r.add_term(idx, c * Rat(idx.parts_product()));
    return r;
}

inline SymFn from_ptilde(const SymFn& f) {
    if (f.basis() != Basis::ptilde) throw std::invalid_argument("from_ptilde: input must be in the ptilde basis");
    SymFn r(Basis::p);
    for (const auto& [idx, c] : f.terms()) r.add_term(idx, c / Rat(idx.parts_product()));
    return r;
}

// m_mu <-> mtilde_mu = (prod_i m_i(mu)!) m_mu.
namespace detail {
inline Int repeat_factor(const Partition& mu) {
    Int r = 1;
    for (int v : mu.distinct_parts()) r *= factorial(mu.multiplicity(v));
    return r;
}
} // namespace detail

inline SymFn to_augmented(const SymFn& f) {
    if (f.basis() != Basis::m) throw std::invalid_argument("to_augmented: input must be in the m basis");
    SymFn r(Basis::mtilde);
    for (const auto& [idx, c] : f.terms()) r.add_term(idx, c / Rat(detail::repeat_factor(idx)));
    return r;
}

inline SymFn from_augmented(const SymFn& f) {
    if (f.basis() != Basis::mtilde) throw std::invalid_argument("from_augmented: input must be in the mtilde basis");
    SymFn r(Basis::m);
    for (const auto& [idx, c] : f.terms()) r.add_term(idx, c * Rat(detail::repeat_factor(idx)));
    return r;
}

// Keep only terms indexed by nu with l(nu) <= max_len.
inline SymFn degree_filter(const SymFn& f, int max_len) {
    if (f.basis() != Basis::p && f.basis() != Basis::ptilde)
        throw std::invalid_argument("degree_filter: input must be in the p or ptilde basis");
    SymFn r(f.basis());
    for (const auto& [idx, c] : f.terms())
        if (idx.length() <= max_len) r.add_term(idx, c);
    return r;
}

namespace detail {

// Coefficient of m_lam in p_k * m_mu: the number of positions of lam from
// which removing k leaves mu.
inline std::map<Partition, Int, CanonicalLess> multiply_pk_m(const std::map<Partition, Int, CanonicalLess>& cur,
                                                             int k) {
    std::map<Partition, Int, CanonicalLess> next;
    for (const auto& [mu, c] : cur) {
        std::vector<Partition> candidates;
        {
            std::vector<int> ps = mu.parts();
            ps.push_back(k);
            candidates.push_back(Partition::from_multiset(std::move(ps)));
        }
        for (int v : mu.distinct_parts()) {
            std::vector<int> ps = mu.parts();
            *std::find(ps.begin(), ps.end(), v) = v + k;
            candidates.push_back(Partition::from_multiset(std::move(ps)));
        }
        for (const Partition& lam : candidates) {
            long long cnt = 0;
            for (int w : lam.distinct_parts()) {
                if (w < k) continue;
                std::vector<int> ps = lam.parts();
                *std::find(ps.begin(), ps.end(), w) = w - k;
                if (Partition::from_multiset(std::move(ps)) == mu) cnt += lam.multiplicity(w);
            }
            if (cnt) next[lam] += c * cnt;
        }
    }
    return next;
}

inline std::map<Partition, Int, CanonicalLess> p_index_to_m(const Partition& nu) {
    std::map<Partition, Int, CanonicalLess> cur;
    cur[Partition{}] = 1;
    for (int k : nu.parts()) cur = multiply_pk_m(cur, k);
    return cur;
}

} // namespace detail

// Expand a p-basis function in the monomial basis.  Each homogeneous
// component is processed independently.
inline SymFn p_to_m(const SymFn& f) {
    if (f.basis() != Basis::p) throw std::invalid_argument("p_to_m: input must be in the p basis");
    SymFn r(Basis::m);
    for (const auto& [nu, c] : f.terms())
        for (const auto& [mu, cnt] : detail::p_index_to_m(nu)) r.add_term(mu, c * Rat(cnt));
    return r;
}

// Transition matrix R with p_lam = sum_mu R_{lam,mu} m_mu, rows and columns
// indexed by partitions_of(n) in canonical order.  Cached per n; results are
// immutable once published.
inline const QMatrix& transition_R(int n) {
    if (n < 1) throw std::invalid_argument("transition_R: n must be >= 1");
    static std::map<int, QMatrix> cache;
    static std::shared_mutex mtx;
    {
        std::shared_lock lock(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Partition> parts = partitions_of(n);
    QMatrix r(static_cast<int>(parts.size()), static_cast<int>(parts.size()));
    r.row_labels = parts;
    r.col_labels = parts;
    std::map<Partition, int, CanonicalLess> col_of;
    for (std::size_t j = 0; j < parts.size(); ++j) col_of[parts[j]] = static_cast<int>(j);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& [mu, cnt] : detail::p_index_to_m(parts[i]))
            r.at(static_cast<int>(i), col_of.at(mu)) = Rat(cnt);
    std::unique_lock lock(mtx);
    return cache.emplace(n, std::move(r)).first->second;
}

// Diagonal of R: D_{lam,lam} = prod_i m_i(lam)!.
inline QMatrix diagonal_D(int n) {
    std::vector<Partition> parts = partitions_of(n);
    QMatrix d(static_cast<int>(parts.size()), static_cast<int>(parts.size()));
    d.row_labels = parts;
    d.col_labels = parts;
    for (std::size_t i = 0; i < parts.size(); ++i)
        d.at(static_cast<int>(i), static_cast<int>(i)) = Rat(detail::repeat_factor(parts[i]));
    return d;
}

namespace detail {

inline Poly power_sum_poly(int k, int nvars) {
    Poly p;
    for (int v = 1; v <= nvars; ++v) p += Poly::variable_power(v, k);
    return p;
}

inline Poly monomial_sym_poly(const Partition& mu, int nvars) {
    // Sum over distinct assignments of mu's parts to variables.
    Poly out;
    std::vector<int> dp = mu.distinct_parts();
    std::vector<int> assigned(static_cast<std::size_t>(nvars) + 1, 0);
    Poly::Monomial mono;
    auto rec = [&](auto&& self, std::size_t di) -> void {
        if (di == dp.size()) {
            out.add_term(mono, 1);
            return;
        }
        int value = dp[di], want = mu.multiplicity(value);
        // choose `want` unused variables, increasing, for this value
        std::vector<int> chosen;
        auto pick = [&](auto&& pick_self, int from, int left) -> void {
            if (left == 0) {
                Poly::Monomial saved = mono;
                Poly::Monomial add;
                for (int v : chosen) add.push_back({v, value});
                mono = Poly::merge(mono, add);
                for (int v : chosen) assigned[static_cast<std::size_t>(v)] = 1;
                self(self, di + 1);
                for (int v : chosen) assigned[static_cast<std::size_t>(v)] = 0;
                mono = saved;
                return;
            }
            for (int v = from; v <= nvars - left + 1; ++v) {
                if (assigned[static_cast<std::size_t>(v)]) continue;
                chosen.push_back(v);
                pick_self(pick_self, v + 1, left - 1);
                chosen.pop_back();
            }
        };
        pick(pick, 1, want);
    };
    rec(rec, 0);
    return out;
}

inline Poly homogeneous_poly(int k, int nvars) {
    // All monomials of total degree k: multisets of size k from nvars variables.
    Poly out;
    std::vector<int> exps(static_cast<std::size_t>(nvars) + 1, 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (left == 0 || var > nvars) {
            if (left == 0) {
                Poly::Monomial m;
                for (int v = 1; v <= nvars; ++v)
                    if (exps[static_cast<std::size_t>(v)] > 0) m.push_back({v, exps[static_cast<std::size_t>(v)]});
                out.add_term(m, 1);
            }
            return;
        }
        for (int take = left; take >= 0; --take) {
            exps[static_cast<std::size_t>(var)] = take;
            self(self, var + 1, left - take);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 1, k);
    return out;
}

} // namespace detail

// Expand f as an honest polynomial in x_1..x_N.  Faithful only when
// N >= degree(f); smaller N is rejected.
inline EvalMap evaluate_finite(const SymFn& f, int nvars) {
    if (nvars < f.degree())
        throw std::invalid_argument("evaluate_finite: need at least degree(f) variables to be faithful");
    Poly acc;
    for (const auto& [idx, c] : f.terms()) {
        Poly term = Poly::constant(1);
        switch (f.basis()) {
            case Basis::p:
            case Basis::ptilde: {
                for (int k : idx.parts()) term = term * detail::power_sum_poly(k, nvars);
                Rat scale = c;
                if (f.basis() == Basis::ptilde) scale /= Rat(idx.parts_product());
                acc += term * scale;
                break;
            }
            case Basis::m:
            case Basis::mtilde: {
                term = detail::monomial_sym_poly(idx, nvars);
                Rat scale = c;
                if (f.basis() == Basis::mtilde) scale *= Rat(detail::repeat_factor(idx));
                acc += term * scale;
                break;
            }
            case Basis::h: {
                for (int k : idx.parts()) term = term * detail::homogeneous_poly(k, nvars);
                acc += term * c;
                break;
            }
        }
    }
    return symmetrize_checked(acc, nvars);
}

} // namespace bschur
