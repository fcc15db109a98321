#pragma once

// Sparse Laurent polynomials in a single symbol, used for the gamma-graded
// pieces of the multiplicative coefficient rings.

#include <cstdlib>
#include <map>
#include <optional>
#include <utility>

#include "ftl/errors.hpp"
#include "ftl/numeric.hpp"

namespace ftl {

namespace detail {

template <typename C>
bool value_is_zero(const C& c) {
    if constexpr (requires { c.is_zero(); }) {
        return c.is_zero();
    } else {
        return c == 0;
    }
}

inline int checked_exp_add(int a, int b) {
    long s = static_cast<long>(a) + static_cast<long>(b);
    if (s > (1L << 30) || s < -(1L << 30)) {
        throw exponent_overflow_error("gamma exponent out of range");
    }
    return static_cast<int>(s);
}

}  // namespace detail

template <typename C>
class Laurent {
   public:
    using Terms = std::map<int, C>;

    Laurent() = default;
    Laurent(int exp, C coeff) {
        if (!detail::value_is_zero(coeff)) terms_.emplace(exp, std::move(coeff));
    }

    static Laurent constant(C c) { return Laurent(0, std::move(c)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    C coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(int exp, const C& c) {
        if (detail::value_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (detail::value_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Laurent operator+(const Laurent& x, const Laurent& y) {
        Laurent r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, c);
        return r;
    }
    friend Laurent operator-(const Laurent& x, const Laurent& y) {
        Laurent r = x;
        for (const auto& [e, c] : y.terms_) r.add_term(e, C(-c));
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(-c));
        return r;
    }
    friend Laurent operator*(const Laurent& x, const Laurent& y) {
        Laurent r;
        for (const auto& [ex, cx] : x.terms_) {
            for (const auto& [ey, cy] : y.terms_) {
                r.add_term(detail::checked_exp_add(ex, ey), C(cx * cy));
            }
        }
        return r;
    }
    Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
    Laurent& operator-=(const Laurent& o) { *this = *this - o; return *this; }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    // gamma^k * this
    Laurent shifted(int k) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(detail::checked_exp_add(e, k), c);
        return r;
    }

    template <typename F>
    auto map(F&& f) const -> Laurent<std::decay_t<decltype(f(std::declval<C>()))>> {
        Laurent<std::decay_t<decltype(f(std::declval<C>()))>> r;
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    friend bool operator==(const Laurent&, const Laurent&) = default;

   private:
    Terms terms_;
};

// Exact division of Laurent polynomials over Q: returns num/den when the
// quotient is again a Laurent polynomial, nullopt otherwise.
inline std::optional<Laurent<Rat>> laurent_exact_div(const Laurent<Rat>& num,
                                                     const Laurent<Rat>& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return Laurent<Rat>{};
    int num_lo = num.terms().begin()->first;
    int num_hi = num.terms().rbegin()->first;
    int den_lo = den.terms().begin()->first;
    int den_hi = den.terms().rbegin()->first;
    int qlo = num_lo - den_lo;
    int qhi = num_hi - den_hi;
    if (qhi < qlo) return std::nullopt;

    // Ascending (power-series style) division anchored at the lowest term.
    Laurent<Rat> rem = num;
    Laurent<Rat> q;
    Rat den_low = den.terms().begin()->second;
    while (!rem.is_zero()) {
        int e = rem.terms().begin()->first - den_lo;
        if (e < qlo || e > qhi) return std::nullopt;
        Rat c = rem.terms().begin()->second / den_low;
        Laurent<Rat> t(e, c);
        q += t;
        rem -= t * den;
    }
    return q;
}

inline std::optional<Laurent<Rat>> try_invert(const Laurent<Rat>& x) {
    if (!x.is_monomial()) return std::nullopt;
    auto [e, c] = *x.terms().begin();
    return Laurent<Rat>(-e, Rat(1) / c);
}

}  // namespace ftl
