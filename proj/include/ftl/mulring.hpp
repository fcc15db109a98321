#pragma once

// The multiplicative coefficient ring Z_eps[tau, gamma^{+-1}] / (tau^2 - 2(1-eps)gamma,
// (1+eps)tau) and its plus/minus specializations over Q.
//
// Normal form: tau-degree <= 1. The even part is a Laurent polynomial in gamma
// over Z_eps; the tau-component is a Laurent polynomial in gamma over the plain
// scalars, with eps acting there as -1 (forced by (1+eps)tau = 0).
// Grading: deg eps = 0, deg tau = 2, deg gamma = 4.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ftl/laurent.hpp"
#include "ftl/rings.hpp"

namespace ftl {

template <typename Z>
struct MulT {
    Laurent<EpsT<Z>> even;
    Laurent<Z> odd;  // coefficient of tau

    MulT() = default;
    MulT(Laurent<EpsT<Z>> even, Laurent<Z> odd) : even(std::move(even)), odd(std::move(odd)) {}

    static MulT zero() { return {}; }
    static MulT one() { return {Laurent<EpsT<Z>>(0, EpsT<Z>::one()), {}}; }
    static MulT eps() { return {Laurent<EpsT<Z>>(0, EpsT<Z>::eps()), {}}; }
    static MulT h() { return {Laurent<EpsT<Z>>(0, EpsT<Z>::h()), {}}; }
    static MulT from_int(long v) { return {Laurent<EpsT<Z>>(0, EpsT<Z>::from_int(v)), {}}; }
    static MulT tau() { return {{}, Laurent<Z>(0, Z(1))}; }
    static MulT gamma(int k = 1) { return {Laurent<EpsT<Z>>(k, EpsT<Z>::one()), {}}; }
    static MulT scalar(EpsT<Z> c) { return {Laurent<EpsT<Z>>(0, std::move(c)), {}}; }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    friend MulT operator+(const MulT& x, const MulT& y) {
        return {x.even + y.even, x.odd + y.odd};
    }
    friend MulT operator-(const MulT& x, const MulT& y) {
        return {x.even - y.even, x.odd - y.odd};
    }
    MulT operator-() const { return {-even, -odd}; }

    friend MulT operator*(const MulT& x, const MulT& y) {
        // (e1 + o1*tau)(e2 + o2*tau) with tau^2 = 2(1-eps)gamma and eps*tau = -tau.
        Laurent<EpsT<Z>> e = x.even * y.even;
        Laurent<Z> oo = x.odd * y.odd;
        e += oo.map([](const Z& c) { return EpsT<Z>{Z(c * 2), Z(c * -2)}; }).shifted(1);
        Laurent<Z> o = x.even.map(&MulT::to_odd) * y.odd + y.even.map(&MulT::to_odd) * x.odd;
        return {e, o};
    }
    MulT& operator+=(const MulT& o) { *this = *this + o; return *this; }
    MulT& operator-=(const MulT& o) { *this = *this - o; return *this; }
    MulT& operator*=(const MulT& o) { *this = *this * o; return *this; }

    friend bool operator==(const MulT&, const MulT&) = default;

    // Homogeneous degree, or nullopt when the element is 0 or mixed.
    std::optional<int> degree() const {
        std::set<int> degs;
        for (const auto& [k, c] : even.terms()) degs.insert(4 * k);
        for (const auto& [k, c] : odd.terms()) degs.insert(4 * k + 2);
        if (degs.size() != 1) return std::nullopt;
        return *degs.begin();
    }

    std::string str() const {
        std::vector<std::string> terms;
        std::set<int> exps;
        for (const auto& [k, c] : even.terms()) exps.insert(k);
        for (const auto& [k, c] : odd.terms()) exps.insert(k);
        for (int k : exps) {
            EpsT<Z> e = even.coeff(k);
            if (!e.is_zero()) {
                if (k == 0) {
                    if (!(e.a == 0)) terms.push_back(to_string(e.a));
                    if (!(e.b == 0)) terms.push_back(detail::coeff_times(to_string(e.b), "eps"));
                } else {
                    std::string coeff =
                        (!(e.a == 0) && !(e.b == 0)) ? "(" + e.str() + ")" : e.str();
                    terms.push_back(detail::coeff_times(coeff, gamma_str(k)));
                }
            }
            Z o = odd.coeff(k);
            if (!(o == 0)) {
                std::string sym = k == 0 ? "tau" : "tau*" + gamma_str(k);
                terms.push_back(detail::coeff_times(to_string(o), sym));
            }
        }
        return detail::join_terms(terms);
    }

   private:
    static Z to_odd(const EpsT<Z>& c) { return Z(c.a - c.b); }
    static std::string gamma_str(int k) {
        return k == 1 ? "gamma" : "gamma^" + std::to_string(k);
    }
};

using MulRing = MulT<Int>;

// Plus part over Q: eps = -1, so tau^2 = 4*gamma (and tau is invertible).
struct MulPlusQ {
    Laurent<Rat> even;
    Laurent<Rat> odd;  // coefficient of tau

    MulPlusQ() = default;
    MulPlusQ(Laurent<Rat> even, Laurent<Rat> odd)
        : even(std::move(even)), odd(std::move(odd)) {}

    static MulPlusQ zero() { return {}; }
    static MulPlusQ one() { return {Laurent<Rat>(0, Rat(1)), {}}; }
    static MulPlusQ eps() { return {Laurent<Rat>(0, Rat(-1)), {}}; }
    static MulPlusQ from_int(long v) { return {Laurent<Rat>(0, Rat(v)), {}}; }
    static MulPlusQ tau() { return {{}, Laurent<Rat>(0, Rat(1))}; }
    static MulPlusQ gamma(int k = 1) { return {Laurent<Rat>(k, Rat(1)), {}}; }
    static MulPlusQ scalar(Rat c) { return {Laurent<Rat>(0, std::move(c)), {}}; }

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }

    friend MulPlusQ operator+(const MulPlusQ& x, const MulPlusQ& y) {
        return {x.even + y.even, x.odd + y.odd};
    }
    friend MulPlusQ operator-(const MulPlusQ& x, const MulPlusQ& y) {
        return {x.even - y.even, x.odd - y.odd};
    }
    MulPlusQ operator-() const { return {-even, -odd}; }
    friend MulPlusQ operator*(const MulPlusQ& x, const MulPlusQ& y) {
        Laurent<Rat> e = x.even * y.even;
        e += (x.odd * y.odd).map([](const Rat& c) { return Rat(c * 4); }).shifted(1);
        return {e, x.even * y.odd + y.even * x.odd};
    }
    MulPlusQ& operator+=(const MulPlusQ& o) { *this = *this + o; return *this; }
    MulPlusQ& operator-=(const MulPlusQ& o) { *this = *this - o; return *this; }
    MulPlusQ& operator*=(const MulPlusQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const MulPlusQ&, const MulPlusQ&) = default;

    std::optional<int> degree() const {
        std::set<int> degs;
        for (const auto& [k, c] : even.terms()) degs.insert(4 * k);
        for (const auto& [k, c] : odd.terms()) degs.insert(4 * k + 2);
        if (degs.size() != 1) return std::nullopt;
        return *degs.begin();
    }

    std::string str() const {
        std::vector<std::string> terms;
        std::set<int> exps;
        for (const auto& [k, c] : even.terms()) exps.insert(k);
        for (const auto& [k, c] : odd.terms()) exps.insert(k);
        for (int k : exps) {
            Rat e = even.coeff(k);
            if (e != 0) {
                terms.push_back(k == 0 ? to_string(e)
                                       : detail::coeff_times(to_string(e), gamma_str(k)));
            }
            Rat o = odd.coeff(k);
            if (o != 0) {
                std::string sym = k == 0 ? "tau" : "tau*" + gamma_str(k);
                terms.push_back(detail::coeff_times(to_string(o), sym));
            }
        }
        return detail::join_terms(terms);
    }

   private:
    static std::string gamma_str(int k) {
        return k == 1 ? "gamma" : "gamma^" + std::to_string(k);
    }
};

// Minus part over Q: eps = +1, 2 tau = 0 forces tau = 0; plain Laurent ring Q[gamma^{+-1}].
struct MulMinusQ {
    Laurent<Rat> value;

    MulMinusQ() = default;
    explicit MulMinusQ(Laurent<Rat> v) : value(std::move(v)) {}

    static MulMinusQ zero() { return {}; }
    static MulMinusQ one() { return MulMinusQ{Laurent<Rat>(0, Rat(1))}; }
    static MulMinusQ eps() { return one(); }
    static MulMinusQ from_int(long v) { return MulMinusQ{Laurent<Rat>(0, Rat(v))}; }
    static MulMinusQ tau() { return zero(); }
    static MulMinusQ gamma(int k = 1) { return MulMinusQ{Laurent<Rat>(k, Rat(1))}; }
    static MulMinusQ scalar(Rat c) { return MulMinusQ{Laurent<Rat>(0, std::move(c))}; }

    bool is_zero() const { return value.is_zero(); }

    friend MulMinusQ operator+(const MulMinusQ& x, const MulMinusQ& y) {
        return MulMinusQ{x.value + y.value};
    }
    friend MulMinusQ operator-(const MulMinusQ& x, const MulMinusQ& y) {
        return MulMinusQ{x.value - y.value};
    }
    MulMinusQ operator-() const { return MulMinusQ{-value}; }
    friend MulMinusQ operator*(const MulMinusQ& x, const MulMinusQ& y) {
        return MulMinusQ{x.value * y.value};
    }
    MulMinusQ& operator+=(const MulMinusQ& o) { *this = *this + o; return *this; }
    MulMinusQ& operator-=(const MulMinusQ& o) { *this = *this - o; return *this; }
    MulMinusQ& operator*=(const MulMinusQ& o) { *this = *this * o; return *this; }

    friend bool operator==(const MulMinusQ&, const MulMinusQ&) = default;

    std::optional<int> degree() const {
        std::set<int> degs;
        for (const auto& [k, c] : value.terms()) degs.insert(4 * k);
        if (degs.size() != 1) return std::nullopt;
        return *degs.begin();
    }

    std::string str() const {
        std::vector<std::string> terms;
        for (const auto& [k, c] : value.terms()) {
            if (k == 0) {
                terms.push_back(to_string(c));
            } else {
                std::string sym = k == 1 ? "gamma" : "gamma^" + std::to_string(k);
                terms.push_back(detail::coeff_times(to_string(c), sym));
            }
        }
        return detail::join_terms(terms);
    }
};

// --- specializations ---

inline MulPlusQ specialize_plus(const MulRing& x) {
    return {x.even.map([](const ZEps& c) { return Rat(c.a - c.b); }),
            x.odd.map([](const Int& c) { return Rat(c); })};
}

inline MulMinusQ specialize_minus(const MulRing& x) {
    return MulMinusQ{x.even.map([](const ZEps& c) { return Rat(c.a + c.b); })};
}

// --- exact inversion / division ---

inline std::optional<MulPlusQ> try_divide(const MulPlusQ& num, const MulPlusQ& den) {
    // num * conj(den) / (den * conj(den)), the denominator being even.
    MulPlusQ conj{den.even, -den.odd};
    MulPlusQ prod = num * conj;
    Laurent<Rat> norm = (den * conj).even;
    auto e = laurent_exact_div(prod.even, norm);
    auto o = laurent_exact_div(prod.odd, norm);
    if (!e || !o) return std::nullopt;
    return MulPlusQ{*e, *o};
}

inline std::optional<MulPlusQ> try_invert(const MulPlusQ& x) {
    return try_divide(MulPlusQ::one(), x);
}

inline std::optional<MulMinusQ> try_divide(const MulMinusQ& num, const MulMinusQ& den) {
    auto q = laurent_exact_div(num.value, den.value);
    if (!q) return std::nullopt;
    return MulMinusQ{*q};
}

inline std::optional<MulMinusQ> try_invert(const MulMinusQ& x) {
    auto inv = try_invert(x.value);
    if (!inv) return std::nullopt;
    return MulMinusQ{*inv};
}

inline std::optional<MulRing> try_invert(const MulRing& x) {
    // Inverses are needed only for units concentrated in the even part.
    if (!x.odd.is_zero() || !x.even.is_monomial()) return std::nullopt;
    auto [k, c] = *x.even.terms().begin();
    auto cinv = try_invert(c);
    if (!cinv) return std::nullopt;
    return MulRing{Laurent<ZEps>(-k, *cinv), {}};
}

inline std::optional<MulRing> try_divide(const MulRing& num, const MulRing& den) {
    auto inv = try_invert(den);
    if (!inv) return std::nullopt;
    return num * *inv;
}

}  // namespace ftl
