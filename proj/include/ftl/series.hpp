#pragma once

// Multivariate truncated power series with exact coefficients in a Ring.
// Terms are kept in an exponent-vector-keyed map in graded-lex order; zero
// coefficients are never stored. The truncation bound is on total variable
// degree; kUnbounded marks exact polynomial computations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ftl/errors.hpp"
#include "ftl/rings.hpp"

namespace ftl {

inline constexpr int kUnbounded = 1 << 28;

using Exponents = std::vector<std::uint32_t>;

inline int total_degree(const Exponents& e) {
    long d = 0;
    for (auto x : e) d += x;
    return static_cast<int>(d);
}

struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

template <Ring R>
class TruncSeries {
   public:
    using Terms = std::map<Exponents, R, GradedLex>;

    TruncSeries() = default;
    explicit TruncSeries(std::vector<std::string> vars, int bound = kUnbounded)
        : vars_(std::move(vars)), bound_(bound) {}

    static TruncSeries constant(std::vector<std::string> vars, const R& c,
                                int bound = kUnbounded) {
        TruncSeries s(std::move(vars), bound);
        s.add_term(Exponents(s.vars_.size(), 0), c);
        return s;
    }

    // The series c * x_i, in the given variable list.
    static TruncSeries monomial(std::vector<std::string> vars, std::size_t var_index,
                                unsigned power, const R& c, int bound = kUnbounded) {
        TruncSeries s(std::move(vars), bound);
        Exponents e(s.vars_.size(), 0);
        e.at(var_index) = power;
        s.add_term(e, c);
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    int bound() const { return bound_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t var_count() const { return vars_.size(); }

    void set_bound(int b) {
        bound_ = b;
        truncate_in_place();
    }

    void add_term(const Exponents& e, const R& c) {
        if (c.is_zero() || total_degree(e) > bound_) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Stored coefficient (zero when absent); throws past the truncation bound.
    R coeff(const Exponents& e) const {
        auto c = coeff_checked(e);
        if (!c) {
            throw degree_overflow_error("coefficient of degree " +
                                        std::to_string(total_degree(e)) +
                                        " requested past truncation bound " +
                                        std::to_string(bound_));
        }
        return *c;
    }

    // nullopt when the requested monomial lies beyond the truncation bound.
    std::optional<R> coeff_checked(const Exponents& e) const {
        if (total_degree(e) > bound_) return std::nullopt;
        auto it = terms_.find(e);
        return it == terms_.end() ? R::zero() : it->second;
    }

    R constant_term() const {
        auto it = terms_.find(Exponents(vars_.size(), 0));
        return it == terms_.end() ? R::zero() : it->second;
    }

    bool has_zero_constant_term() const { return constant_term().is_zero(); }

    int degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_same_vars(a, b);
        TruncSeries r(a.vars_, std::min(a.bound_, b.bound_));
        r.terms_ = a.terms_;
        r.truncate_in_place();
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        check_same_vars(a, b);
        TruncSeries r(a.vars_, std::min(a.bound_, b.bound_));
        r.terms_ = a.terms_;
        r.truncate_in_place();
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r(vars_, bound_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_same_vars(a, b);
        TruncSeries r(a.vars_, std::min(a.bound_, b.bound_));
        if (a.terms_.empty() || b.terms_.empty()) return r;
        Exponents key(r.vars_.size());
        for (const auto& [es, cs] : a.terms_) {
            int ds = total_degree(es);
            for (const auto& [el, cl] : b.terms_) {
                if (ds + total_degree(el) > r.bound_) continue;
                for (std::size_t i = 0; i < key.size(); ++i) key[i] = es[i] + el[i];
                R prod = cs * cl;
                if (prod.is_zero()) continue;
                auto [it, inserted] = r.terms_.try_emplace(key, prod);
                if (!inserted) {
                    it->second += prod;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }
    TruncSeries& operator-=(const TruncSeries& o) { *this = *this - o; return *this; }
    TruncSeries& operator*=(const TruncSeries& o) { *this = *this * o; return *this; }

    TruncSeries scaled(const R& c) const {
        TruncSeries r(vars_, bound_);
        for (const auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }

    // x_i -> c * x_i
    TruncSeries var_scaled(std::size_t var_index, const R& c) const {
        TruncSeries r(vars_, bound_);
        for (const auto& [e, x] : terms_) {
            R factor = x;
            for (std::uint32_t p = 0; p < e.at(var_index); ++p) factor = factor * c;
            r.add_term(e, factor);
        }
        return r;
    }

    TruncSeries truncated(int new_bound) const {
        TruncSeries r(vars_, std::min(bound_, new_bound));
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    template <typename F>
    auto map_coeffs(F&& f) const {
        using R2 = std::decay_t<decltype(f(std::declval<R>()))>;
        TruncSeries<R2> r(vars_, bound_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    // Reinterprets this series in a wider/reordered variable list.
    TruncSeries aligned_to(const std::vector<std::string>& target) const {
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(target.begin(), target.end(), vars_[i]);
            if (it == target.end()) {
                throw variable_mismatch_error("variable '" + vars_[i] +
                                              "' missing from target variable list");
            }
            pos[i] = static_cast<std::size_t>(it - target.begin());
        }
        TruncSeries r(target, bound_);
        for (const auto& [e, c] : terms_) {
            Exponents ne(target.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    TruncSeries renamed(std::vector<std::string> new_vars) const {
        if (new_vars.size() != vars_.size()) {
            throw variable_mismatch_error("rename requires the same variable count");
        }
        TruncSeries r(std::move(new_vars), bound_);
        r.terms_ = terms_;
        return r;
    }

    // Substitutes a series (over the same variable list) for variable i.
    TruncSeries substituted_var(std::size_t var_index, const TruncSeries& inner) const {
        check_same_vars(*this, inner);
        int rbound = std::min(bound_, inner.bound_);
        TruncSeries r(vars_, rbound);
        bool inner_zero_const = inner.has_zero_constant_term();
        std::uint32_t max_pow = 0;
        for (const auto& [e, c] : terms_) max_pow = std::max(max_pow, e.at(var_index));
        std::vector<TruncSeries> powers;
        powers.push_back(constant(vars_, R::one(), rbound));
        for (std::uint32_t p = 1; p <= max_pow; ++p) {
            if (inner_zero_const && static_cast<int>(p) > rbound) break;
            powers.push_back(powers.back() * inner);
        }
        for (const auto& [e, c] : terms_) {
            std::uint32_t p = e.at(var_index);
            Exponents rest = e;
            rest[var_index] = 0;
            if (total_degree(rest) > rbound) continue;
            if (p >= powers.size()) continue;  // vanishes under truncation
            TruncSeries term = powers[p].scaled(c);
            for (const auto& [ei, ci] : term.terms_) {
                Exponents ne = ei;
                for (std::size_t j = 0; j < ne.size(); ++j) ne[j] += rest[j];
                r.add_term(ne, ci);
            }
        }
        return r;
    }

    // Equality of term maps over the same variable list; bounds are not compared.
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::string> parts;
        for (const auto& [e, c] : terms_) {
            std::string mono = monomial_str(e);
            std::string cs = c.str();
            if (mono.empty()) {
                parts.push_back(cs);
            } else if (cs == "1") {
                parts.push_back(mono);
            } else if (cs == "-1") {
                parts.push_back("-" + mono);
            } else if (cs.find(' ') != std::string::npos) {
                parts.push_back("(" + cs + ")*" + mono);
            } else {
                parts.push_back(cs + "*" + mono);
            }
        }
        return detail::join_terms(parts);
    }

   private:
    static void check_same_vars(const TruncSeries& a, const TruncSeries& b) {
        if (a.vars_ != b.vars_) {
            throw variable_mismatch_error("series over different variable lists");
        }
    }

    void truncate_in_place() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (total_degree(it->first) > bound_) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
    }

    std::string monomial_str(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    std::vector<std::string> vars_;
    int bound_ = kUnbounded;
    Terms terms_;
};

// --- one-variable helpers ---

// g(f(x)) truncated; f must have zero constant term.
template <Ring R>
TruncSeries<R> compose1(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    if (f.var_count() != 1 || g.var_count() != 1) {
        throw variable_mismatch_error("compose1 expects one-variable series");
    }
    if (!f.has_zero_constant_term()) {
        throw not_composable_error("inner series of compose1 must have zero constant term");
    }
    return g.renamed(f.vars()).substituted_var(0, f);
}

// Compositional inverse of f = u1 x + ... with u1 a unit, to the given bound.
template <Ring R>
TruncSeries<R> revert(const TruncSeries<R>& f, int bound) {
    if (f.var_count() != 1) {
        throw variable_mismatch_error("revert expects a one-variable series");
    }
    if (!f.has_zero_constant_term()) {
        throw not_invertible_error("revert requires zero constant term");
    }
    R u1 = f.coeff({1});
    auto u1_inv = try_invert(u1);
    if (!u1_inv) {
        throw not_invertible_error("linear coefficient is not a unit: " + u1.str());
    }
    TruncSeries<R> g = TruncSeries<R>::monomial(f.vars(), 0, 1, *u1_inv, bound);
    TruncSeries<R> ft = f.truncated(bound);
    for (int k = 2; k <= bound; ++k) {
        TruncSeries<R> fg = compose1(g, ft);
        R c = fg.coeff(Exponents{static_cast<std::uint32_t>(k)});
        if (c.is_zero()) continue;
        g = g - TruncSeries<R>::monomial(f.vars(), 0, static_cast<unsigned>(k), c * *u1_inv,
                                         bound);
    }
    return g;
}

// Multiplicative inverse of a one-variable series with unit constant term.
template <Ring R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f, int bound) {
    if (f.var_count() != 1) {
        throw variable_mismatch_error("series_inverse expects a one-variable series");
    }
    R c0 = f.constant_term();
    auto c0_inv = try_invert(c0);
    if (!c0_inv) {
        throw not_invertible_error("constant term is not a unit: " + c0.str());
    }
    TruncSeries<R> g = TruncSeries<R>::constant(f.vars(), *c0_inv, bound);
    TruncSeries<R> ft = f.truncated(bound);
    for (int k = 1; k <= bound; ++k) {
        TruncSeries<R> fg = ft * g;
        R c = fg.coeff(Exponents{static_cast<std::uint32_t>(k)});
        if (c.is_zero()) continue;
        g = g - TruncSeries<R>::monomial(f.vars(), 0, static_cast<unsigned>(k), c * *c0_inv,
                                         bound);
    }
    return g;
}

}  // namespace ftl
