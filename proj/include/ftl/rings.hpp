#pragma once

// Exact coefficient rings: Z_eps = Z[eps]/(eps^2-1), its rational version,
// the plus/minus quotients (eps = -1 / eps = +1) and Witt rationals.
// Every ring used by the series and law machinery models the Ring concept
// below; rings that carry an eps element additionally model EpsRing.

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftl/errors.hpp"
#include "ftl/numeric.hpp"

namespace ftl {

template <typename R>
concept Ring = std::regular<R> && requires(const R a, const R b) {
    { R::zero() } -> std::convertible_to<R>;
    { R::one() } -> std::convertible_to<R>;
    { R::from_int(long{}) } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

template <typename R>
concept EpsRing = Ring<R> && requires {
    { R::eps() } -> std::convertible_to<R>;
};

namespace detail {

// Renders c * sym, eliding unit coefficients ("tau", "-tau", "3*tau").
inline std::string coeff_times(const std::string& coeff, const std::string& sym) {
    if (sym.empty()) return coeff;
    if (coeff == "1") return sym;
    if (coeff == "-1") return "-" + sym;
    return coeff + "*" + sym;
}

// Joins rendered terms with " + " / " - ", folding each term's sign.
inline std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (const std::string& t : terms) {
        if (out.empty()) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace detail

// a + b*eps with eps^2 = 1. Z is the scalar type (Int, Rat, or a polynomial
// ring when coefficients are treated symbolically).
template <typename Z>
struct EpsT {
    Z a{};
    Z b{};

    EpsT() = default;
    EpsT(Z a, Z b) : a(std::move(a)), b(std::move(b)) {}

    static EpsT zero() { return {}; }
    static EpsT one() { return {Z(1), Z(0)}; }
    static EpsT eps() { return {Z(0), Z(1)}; }
    // Hyperbolic element h = 1 - eps.
    static EpsT h() { return {Z(1), Z(-1)}; }
    static EpsT from_int(long v) { return {Z(v), Z(0)}; }

    bool is_zero() const { return a == 0 && b == 0; }

    friend EpsT operator+(const EpsT& x, const EpsT& y) { return {Z(x.a + y.a), Z(x.b + y.b)}; }
    friend EpsT operator-(const EpsT& x, const EpsT& y) { return {Z(x.a - y.a), Z(x.b - y.b)}; }
    EpsT operator-() const { return {Z(-a), Z(-b)}; }
    friend EpsT operator*(const EpsT& x, const EpsT& y) {
        return {Z(x.a * y.a + x.b * y.b), Z(x.a * y.b + x.b * y.a)};
    }
    EpsT& operator+=(const EpsT& o) { a += o.a; b += o.b; return *this; }
    EpsT& operator-=(const EpsT& o) { a -= o.a; b -= o.b; return *this; }
    EpsT& operator*=(const EpsT& o) { *this = *this * o; return *this; }

    friend bool operator==(const EpsT&, const EpsT&) = default;

    std::string str() const {
        std::vector<std::string> terms;
        if (!(a == 0)) terms.push_back(to_string(a));
        if (!(b == 0)) terms.push_back(detail::coeff_times(to_string(b), "eps"));
        return detail::join_terms(terms);
    }
};

using ZEps = EpsT<Int>;
using QEps = EpsT<Rat>;

// Quotient of an eps-ring with eps specialized to a fixed sign:
// EpsSign = -1 models the plus part R/(1+eps), +1 the minus part R/(1-eps).
template <typename Z, int EpsSign>
struct ScalarT {
    static_assert(EpsSign == 1 || EpsSign == -1);
    Z v{};

    ScalarT() = default;
    explicit ScalarT(Z v) : v(std::move(v)) {}

    static ScalarT zero() { return {}; }
    static ScalarT one() { return ScalarT{Z(1)}; }
    static ScalarT eps() { return ScalarT{Z(EpsSign)}; }
    static ScalarT from_int(long x) { return ScalarT{Z(x)}; }

    bool is_zero() const { return v == 0; }

    friend ScalarT operator+(const ScalarT& x, const ScalarT& y) { return ScalarT{Z(x.v + y.v)}; }
    friend ScalarT operator-(const ScalarT& x, const ScalarT& y) { return ScalarT{Z(x.v - y.v)}; }
    friend ScalarT operator*(const ScalarT& x, const ScalarT& y) { return ScalarT{Z(x.v * y.v)}; }
    ScalarT operator-() const { return ScalarT{Z(-v)}; }
    ScalarT& operator+=(const ScalarT& o) { v += o.v; return *this; }
    ScalarT& operator-=(const ScalarT& o) { v -= o.v; return *this; }
    ScalarT& operator*=(const ScalarT& o) { v *= o.v; return *this; }

    friend bool operator==(const ScalarT&, const ScalarT&) = default;

    std::string str() const { return to_string(v); }
};

using ZPlus = ScalarT<Int, -1>;
using ZMinus = ScalarT<Int, +1>;
using QPlus = ScalarT<Rat, -1>;
using QMinus = ScalarT<Rat, +1>;
// W(S) tensor Q: eps = 1 and h = 0.
using WittRat = QMinus;

enum class Part { plus, minus };

// --- specializations (ring homomorphisms fixing the sign of eps) ---

inline ZPlus specialize_plus(const ZEps& x) { return ZPlus{x.a - x.b}; }
inline ZMinus specialize_minus(const ZEps& x) { return ZMinus{x.a + x.b}; }
inline QPlus specialize_plus(const QEps& x) { return QPlus{x.a - x.b}; }
inline QMinus specialize_minus(const QEps& x) { return QMinus{x.a + x.b}; }

inline QEps rationalize(const ZEps& x) { return QEps{Rat(x.a), Rat(x.b)}; }
inline QPlus rationalize(const ZPlus& x) { return QPlus{Rat(x.v)}; }
inline QMinus rationalize(const ZMinus& x) { return QMinus{Rat(x.v)}; }

// Reassembles a + b*eps from its plus (eps=-1) and minus (eps=+1) values.
inline QEps combine_parts(const QPlus& p, const QMinus& m) {
    Rat a = (m.v + p.v) / 2;
    Rat b = (m.v - p.v) / 2;
    return QEps{a, b};
}

// --- exact inversion / division ---

inline std::optional<QEps> try_invert(const QEps& x) {
    Rat norm = x.a * x.a - x.b * x.b;
    if (norm == 0) return std::nullopt;
    return QEps{x.a / norm, -x.b / norm};
}

inline std::optional<ZEps> try_invert(const ZEps& x) {
    Int norm = x.a * x.a - x.b * x.b;
    auto qa = exact_div(x.a, norm);
    auto qb = exact_div(x.b, norm);
    if (!qa || !qb) return std::nullopt;
    return ZEps{*qa, -*qb};
}

template <int S>
inline std::optional<ScalarT<Rat, S>> try_invert(const ScalarT<Rat, S>& x) {
    if (x.v == 0) return std::nullopt;
    return ScalarT<Rat, S>{Rat(1) / x.v};
}

template <int S>
inline std::optional<ScalarT<Int, S>> try_invert(const ScalarT<Int, S>& x) {
    if (x.v == 1 || x.v == -1) return x;
    return std::nullopt;
}

template <typename R>
std::optional<R> try_divide(const R& num, const R& den) {
    auto inv = try_invert(den);
    if (!inv) return std::nullopt;
    return num * *inv;
}

inline std::optional<ZEps> try_divide(const ZEps& num, const ZEps& den) {
    Int norm = den.a * den.a - den.b * den.b;
    // num * conj(den) / norm, kept exact.
    ZEps prod = num * ZEps{den.a, -den.b};
    auto qa = exact_div(prod.a, norm);
    auto qb = exact_div(prod.b, norm);
    if (!qa || !qb) return std::nullopt;
    return ZEps{*qa, *qb};
}

template <int S>
inline std::optional<ScalarT<Int, S>> try_divide(const ScalarT<Int, S>& num,
                                                 const ScalarT<Int, S>& den) {
    auto q = exact_div(num.v, den.v);
    if (!q) return std::nullopt;
    return ScalarT<Int, S>{*q};
}

}  // namespace ftl
