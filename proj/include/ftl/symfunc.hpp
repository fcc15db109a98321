#pragma once

// Symmetric-function machinery: decomposition of symmetric polynomials into
// orbit sums and the classical reduction of an orbit sum (monomial symmetric
// function) to a polynomial in the elementary symmetric polynomials, with
// graded-lex leading terms. Expansions are ring-independent and cached.

#include <map>
#include <utility>
#include <vector>

#include "ftl/errors.hpp"
#include "ftl/series.hpp"

namespace ftl {
namespace symf {

using IntTerms = std::map<Exponents, Int, GradedLex>;

inline IntTerms poly_mul(const IntTerms& a, const IntTerms& b) {
    IntTerms r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Int prod = ca * cb;
            auto [it, inserted] = r.try_emplace(std::move(e), prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) r.erase(it);
            }
        }
    }
    return r;
}

// Elementary symmetric polynomial e_k in m variables (k = 0 gives 1).
inline IntTerms elem_sym(unsigned m, unsigned k) {
    IntTerms r;
    if (k > m) return r;
    Exponents e(m, 0);
    // enumerate k-subsets
    std::vector<unsigned> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::fill(e.begin(), e.end(), 0u);
        for (unsigned i : idx) e[i] = 1;
        r.emplace(e, Int(1));
        if (k == 0) break;
        int j = static_cast<int>(k) - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (unsigned t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return r;
}

// Number of distinct permutations of a sorted exponent vector, padded to m slots.
inline Int orbit_size(const Exponents& lambda, unsigned m) {
    Int perms = factorial(m);
    unsigned zeros = m - static_cast<unsigned>(lambda.size());
    Int d = factorial(zeros);
    std::size_t i = 0;
    while (i < lambda.size()) {
        std::size_t j = i;
        while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
        d *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return perms / d;
}

inline Exponents sorted_desc_trimmed(const Exponents& e) {
    Exponents s = e;
    std::sort(s.begin(), s.end(), std::greater<>());
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

// Expansion of the monomial symmetric function m_lambda (in m variables) as a
// polynomial in e_1..e_m. Keys of the result are exponent vectors (k_1..k_m)
// standing for e_1^{k_1} * ... * e_m^{k_m}. Classical leading-term reduction:
// the e-product matching the leading exponent is subtracted and the remainder,
// which has strictly smaller graded-lex leading monomial, is reduced
// recursively.
inline const IntTerms& msym_to_e(unsigned m, const Exponents& lambda) {
    thread_local std::map<std::pair<unsigned, Exponents>, IntTerms> cache;
    auto key = std::make_pair(m, lambda);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    IntTerms result;
    if (lambda.empty()) {
        result.emplace(Exponents(m, 0), Int(1));
        return cache.emplace(std::move(key), std::move(result)).first->second;
    }

    // e-product with leading monomial x^lambda: prod_i e_i^{lambda_i - lambda_{i+1}}.
    Exponents eexp(m, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        unsigned next = i + 1 < lambda.size() ? lambda[i + 1] : 0;
        eexp[i] = lambda[i] - next;
    }
    IntTerms prod{{Exponents(m, 0), Int(1)}};
    for (unsigned i = 0; i < m; ++i) {
        if (eexp[i] == 0) continue;
        IntTerms base = elem_sym(m, i + 1);
        for (unsigned p = 0; p < eexp[i]; ++p) prod = poly_mul(prod, base);
    }

    result.emplace(eexp, Int(1));
    // Collect orbit coefficients of the expansion, each via its descending
    // representative, and subtract the lower ones.
    std::map<Exponents, Int, GradedLex> orbits;
    for (const auto& [e, c] : prod) {
        Exponents mu = sorted_desc_trimmed(e);
        Exponents rep = mu;
        rep.resize(m, 0);
        if (e == rep) orbits.emplace(std::move(mu), c);
    }
    for (const auto& [mu, c] : orbits) {
        if (mu == lambda) {
            if (c != 1) throw error("internal: leading orbit coefficient != 1");
            continue;
        }
        const IntTerms& sub = msym_to_e(m, mu);
        for (const auto& [se, sc] : sub) {
            Int v = c * sc;
            auto [it, inserted] = result.try_emplace(se, -v);
            if (!inserted) {
                it->second -= v;
                if (it->second == 0) result.erase(it);
            }
        }
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

// Orbit decomposition of a polynomial given by exponent->coefficient terms over
// m variables. Returns trimmed sorted exponent vectors with their common
// coefficient; throws not_symmetric_error when the polynomial is not symmetric.
template <typename R>
std::map<Exponents, R, GradedLex> orbit_decompose(
    const std::map<Exponents, R, GradedLex>& terms, unsigned m, const char* what) {
    struct Acc {
        R coeff;
        Int count;
    };
    std::map<Exponents, Acc, GradedLex> acc;
    for (const auto& [e, c] : terms) {
        Exponents mu = sorted_desc_trimmed(e);
        auto [it, inserted] = acc.try_emplace(mu, Acc{c, Int(1)});
        if (!inserted) {
            if (!(it->second.coeff == c)) {
                throw not_symmetric_error(std::string(what) +
                                          ": orbit coefficients disagree");
            }
            it->second.count += 1;
        }
    }
    std::map<Exponents, R, GradedLex> out;
    for (auto& [mu, a] : acc) {
        if (a.count != orbit_size(mu, m)) {
            throw not_symmetric_error(std::string(what) + ": incomplete orbit");
        }
        out.emplace(mu, std::move(a.coeff));
    }
    return out;
}

}  // namespace symf

// Image of an arbitrary-precision integer in a ring.
template <Ring R>
R ring_int(const Int& z) {
    if (z.fits_slong_p()) return R::from_int(z.get_si());
    // Horner on the decimal digits keeps this exact for huge values.
    R r = R::zero();
    R ten = R::from_int(10);
    std::string s = z.get_str();
    std::size_t i = 0;
    bool neg = false;
    if (!s.empty() && s[0] == '-') {
        neg = true;
        i = 1;
    }
    for (; i < s.size(); ++i) r = r * ten + R::from_int(s[i] - '0');
    return neg ? -r : r;
}

// Rewrites a polynomial that is symmetric in a contiguous block of "root"
// variables as a polynomial in fresh variables e_1..e_m standing for the
// elementary symmetric polynomials of the roots. Spectator variables pass
// through. Result variables: spectators (original order) followed by e_names.
template <Ring R>
TruncSeries<R> sym_to_elementary(const TruncSeries<R>& p, std::size_t root_begin,
                                 std::size_t root_count,
                                 const std::vector<std::string>& e_names) {
    if (root_begin + root_count > p.var_count()) {
        throw variable_mismatch_error("root block out of range");
    }
    if (e_names.size() != root_count) {
        throw variable_mismatch_error("need one e-variable per root");
    }
    const unsigned m = static_cast<unsigned>(root_count);
    std::vector<std::string> out_vars;
    for (std::size_t i = 0; i < p.var_count(); ++i) {
        if (i < root_begin || i >= root_begin + root_count) out_vars.push_back(p.vars()[i]);
    }
    const std::size_t spect_count = out_vars.size();
    out_vars.insert(out_vars.end(), e_names.begin(), e_names.end());

    // Group terms by spectator part; the root parts must each be symmetric.
    std::map<Exponents, std::map<Exponents, R, GradedLex>, GradedLex> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents spect;
        spect.reserve(spect_count);
        Exponents root(m);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i < root_begin || i >= root_begin + root_count) {
                spect.push_back(e[i]);
            } else {
                root[i - root_begin] = e[i];
            }
        }
        groups[spect].emplace(std::move(root), c);
    }

    TruncSeries<R> out(out_vars, kUnbounded);
    for (const auto& [spect, rootpoly] : groups) {
        auto orbits = symf::orbit_decompose(rootpoly, m, "sym_to_elementary");
        for (const auto& [lambda, c] : orbits) {
            const symf::IntTerms& expansion = symf::msym_to_e(m, lambda);
            for (const auto& [eexp, z] : expansion) {
                Exponents key(out_vars.size(), 0);
                for (std::size_t i = 0; i < spect_count; ++i) key[i] = spect[i];
                for (unsigned i = 0; i < m; ++i) key[spect_count + i] = eexp[i];
                out.add_term(key, c * ring_int<R>(z));
            }
        }
    }
    return out;
}

}  // namespace ftl
