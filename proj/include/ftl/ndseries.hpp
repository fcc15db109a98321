#pragma once

// (n,d)-series 1 + F_1 t + ... + F_n t^n with truncated-series coefficients,
// and substitution of a composable series into a variable via the roots
// identity G_t = prod_l (1 + G^[l] t): the product over roots is expanded,
// rewritten in elementary symmetric polynomials of the roots, and e_s is
// replaced by the coefficient G_s.
//
// Filtration: variables count +1 and t counts -1, so the t^l coefficient of a
// series with filtration bound N retains terms of plain degree <= N + l.

#include <optional>
#include <string>
#include <vector>

#include "ftl/symfunc.hpp"

namespace ftl {

template <Ring R>
class NDSeries {
   public:
    NDSeries(int valued, std::vector<std::string> vars, int filt_bound = kUnbounded)
        : valued_(valued), vars_(std::move(vars)), filt_(filt_bound) {
        coeffs_.reserve(valued_);
        for (int l = 1; l <= valued_; ++l) coeffs_.emplace_back(vars_, coeff_bound(l));
    }

    int valued() const { return valued_; }
    std::size_t dim() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    int filt_bound() const { return filt_; }

    int coeff_bound(int l) const { return filt_ >= kUnbounded ? kUnbounded : filt_ + l; }

    // 1-indexed access to F_l; F_0 is implicitly 1.
    TruncSeries<R>& coeff(int l) { return coeffs_.at(l - 1); }
    const TruncSeries<R>& coeff(int l) const { return coeffs_.at(l - 1); }

    bool composable() const {
        for (const auto& f : coeffs_) {
            if (!f.has_zero_constant_term()) return false;
        }
        return true;
    }

    bool has_negative_filtration_terms() const {
        for (int l = 1; l <= valued_; ++l) {
            for (const auto& [e, c] : coeff(l).terms()) {
                if (total_degree(e) < l) return true;
            }
        }
        return false;
    }

    friend bool operator==(const NDSeries& a, const NDSeries& b) {
        return a.valued_ == b.valued_ && a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        std::string out = "1";
        for (int l = 1; l <= valued_; ++l) {
            const auto& f = coeff(l);
            if (f.is_zero()) continue;
            std::string t = l == 1 ? "t" : "t^" + std::to_string(l);
            out += " + (" + f.str() + ")*" + t;
        }
        return out;
    }

   private:
    int valued_;
    std::vector<std::string> vars_;
    int filt_;
    std::vector<TruncSeries<R>> coeffs_;
};

struct NDWitness {
    int t_power = 0;
    Exponents monomial;
    std::string lhs;
    std::string rhs;
};

// First coefficient where two series disagree, restricted to filtration
// degree <= filt; nullopt when they agree there.
template <Ring R>
std::optional<NDWitness> nd_diff_witness(const NDSeries<R>& a, const NDSeries<R>& b,
                                         int filt = kUnbounded) {
    int n = std::max(a.valued(), b.valued());
    for (int l = 1; l <= n; ++l) {
        const TruncSeries<R>* fa = l <= a.valued() ? &a.coeff(l) : nullptr;
        const TruncSeries<R>* fb = l <= b.valued() ? &b.coeff(l) : nullptr;
        int cap = filt >= kUnbounded ? kUnbounded
                                     : std::min({filt + l, fa ? fa->bound() : kUnbounded,
                                                 fb ? fb->bound() : kUnbounded});
        std::map<Exponents, std::pair<R, R>, GradedLex> joined;
        if (fa) {
            for (const auto& [e, c] : fa->terms()) {
                if (total_degree(e) <= cap) joined[e].first = c;
            }
        }
        if (fb) {
            for (const auto& [e, c] : fb->terms()) {
                if (total_degree(e) <= cap) joined[e].second = c;
            }
        }
        for (const auto& [e, cc] : joined) {
            if (!(cc.first == cc.second)) {
                return NDWitness{l, e, cc.first.str(), cc.second.str()};
            }
        }
    }
    return std::nullopt;
}

// Substitution of the composable (m,r)-series G into variable `slot` of the
// (n,d)-series F, giving an (n*m, d+r-1)-series over F's spectator variables
// followed by G's variables. When max_t >= 0 only the t-coefficients up to
// max_t are produced (the rest are left zero); callers doing partial
// computations own that contract.
template <Ring R>
NDSeries<R> substitute(const NDSeries<R>& F, std::size_t slot, const NDSeries<R>& G,
                       int max_t = -1) {
    if (slot >= F.dim()) throw variable_mismatch_error("substitution slot out of range");
    if (!G.composable()) {
        throw not_composable_error("substituted series must satisfy G(0,...,0) = 1");
    }
    const int n = F.valued();
    const int m = G.valued();
    const int nt = n * m;
    if (max_t < 0 || max_t > nt) max_t = nt;
    const int filt = std::min(F.filt_bound(), G.filt_bound());
    if (filt < kUnbounded &&
        (F.has_negative_filtration_terms() || G.has_negative_filtration_terms())) {
        throw error("truncated substitution requires coefficients of nonnegative filtration");
    }

    std::vector<std::string> spect;
    for (std::size_t i = 0; i < F.dim(); ++i) {
        if (i != slot) spect.push_back(F.vars()[i]);
    }
    for (const auto& v : G.vars()) {
        if (std::find(spect.begin(), spect.end(), v) != spect.end()) {
            throw variable_mismatch_error("substitution variables collide: " + v);
        }
    }
    const std::size_t ns = spect.size();

    std::vector<std::string> work_vars = spect;
    for (int l = 1; l <= m; ++l) work_vars.push_back("#r" + std::to_string(l));
    const int work_bound = filt >= kUnbounded ? kUnbounded : filt + max_t;

    // prod[k] = t^k coefficient of prod_{l} F_t(..., r_l, ...).
    std::vector<TruncSeries<R>> prod;
    prod.push_back(TruncSeries<R>::constant(work_vars, R::one(), work_bound));
    for (int k = 1; k <= max_t; ++k) prod.emplace_back(work_vars, work_bound);

    for (int l = 1; l <= m; ++l) {
        // F with the slot variable moved to root l.
        std::vector<TruncSeries<R>> factor;
        factor.push_back(TruncSeries<R>::constant(work_vars, R::one(), work_bound));
        for (int j = 1; j <= n; ++j) {
            TruncSeries<R> fj(work_vars, work_bound);
            for (const auto& [e, c] : F.coeff(j).terms()) {
                Exponents ne(work_vars.size(), 0);
                std::size_t si = 0;
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (i == slot) {
                        ne[ns + static_cast<std::size_t>(l - 1)] = e[i];
                    } else {
                        ne[si++] = e[i];
                    }
                }
                fj.add_term(ne, c);
            }
            factor.push_back(std::move(fj));
        }
        std::vector<TruncSeries<R>> next;
        for (int k = 0; k <= max_t; ++k) next.emplace_back(work_vars, work_bound);
        for (int i = 0; i <= max_t; ++i) {
            if (prod[i].is_zero() && i > 0) continue;
            for (int j = 0; j <= n && i + j <= max_t; ++j) {
                if (j == 0) {
                    next[i] += prod[i];
                } else if (!factor[j].is_zero()) {
                    next[i + j] += prod[i] * factor[j];
                }
            }
        }
        prod = std::move(next);
    }

    std::vector<std::string> out_vars = spect;
    out_vars.insert(out_vars.end(), G.vars().begin(), G.vars().end());
    NDSeries<R> out(nt, out_vars, filt);

    // Cache of prod_s G_s^{k_s} over G's variables.
    const int pow_bound = work_bound;
    std::map<Exponents, TruncSeries<R>> gpow;
    auto g_power = [&](const Exponents& k) -> const TruncSeries<R>& {
        auto it = gpow.find(k);
        if (it != gpow.end()) return it->second;
        TruncSeries<R> r = TruncSeries<R>::constant(G.vars(), R::one(), pow_bound);
        for (int s = 1; s <= m; ++s) {
            for (std::uint32_t p = 0; p < k[s - 1]; ++p) r = r * G.coeff(s);
        }
        return gpow.emplace(k, std::move(r)).first->second;
    };

    for (int t = 1; t <= max_t; ++t) {
        // Group by spectator part; root parts must be symmetric.
        std::map<Exponents, std::map<Exponents, R, GradedLex>, GradedLex> groups;
        for (const auto& [e, c] : prod[t].terms()) {
            Exponents sp(e.begin(), e.begin() + ns);
            Exponents root(e.begin() + ns, e.end());
            groups[sp].emplace(std::move(root), c);
        }
        TruncSeries<R>& target = out.coeff(t);
        for (const auto& [sp, rootpoly] : groups) {
            auto orbits = symf::orbit_decompose(rootpoly, static_cast<unsigned>(m),
                                                "substitute roots");
            for (const auto& [lambda, c] : orbits) {
                for (const auto& [eexp, z] : symf::msym_to_e(static_cast<unsigned>(m), lambda)) {
                    const TruncSeries<R>& gp = g_power(eexp);
                    R factor = c * ring_int<R>(z);
                    if (factor.is_zero()) continue;
                    for (const auto& [eg, cg] : gp.terms()) {
                        Exponents key(out_vars.size(), 0);
                        for (std::size_t i = 0; i < ns; ++i) key[i] = sp[i];
                        for (std::size_t i = 0; i < eg.size(); ++i) key[ns + i] = eg[i];
                        target.add_term(key, factor * cg);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace ftl
