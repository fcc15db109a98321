#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftl/ndseries.hpp"
#include "ftl/series.hpp"
#include "ftl/symfunc.hpp"
#include "test_util.hpp"

using namespace ftl;

namespace {

TruncSeries<ZEps> make_poly(std::vector<std::string> vars,
                            std::vector<std::pair<Exponents, long>> terms) {
    TruncSeries<ZEps> s(std::move(vars));
    for (auto& [e, c] : terms) s.add_term(e, ZEps::from_int(c));
    return s;
}

}  // namespace

TEST_CASE("arithmetic and truncation basics") {
    auto f = make_poly({"x", "y"}, {{{1, 0}, 1}, {{0, 1}, 2}});
    auto g = make_poly({"x", "y"}, {{{1, 0}, 1}, {{1, 1}, -3}});
    auto prod = f * g;
    CHECK(prod.coeff({2, 0}) == ZEps::from_int(1));
    CHECK(prod.coeff({1, 1}) == ZEps::from_int(-1));  // 2*1 + 1*(-3)
    CHECK(prod.coeff({2, 1}) == ZEps::from_int(-3));
    CHECK(prod.coeff({1, 2}) == ZEps::from_int(-6));

    auto ft = f.truncated(1);
    auto pt = (ft * g);
    CHECK(pt.bound() == 1);
    CHECK(pt.is_zero() == false);
    CHECK_THROWS_AS((void)pt.coeff({2, 0}), degree_overflow_error);
    CHECK(!pt.coeff_checked({2, 0}).has_value());
}

TEST_CASE("variable mismatch is an error") {
    auto f = make_poly({"x", "y"}, {{{1, 0}, 1}});
    auto g = make_poly({"x", "z"}, {{{1, 0}, 1}});
    CHECK_THROWS_AS((void)(f * g), variable_mismatch_error);
    CHECK_THROWS_AS((void)(f + g), variable_mismatch_error);
}

TEST_CASE("truncation consistency") {
    ftltest::Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        TruncSeries<ZEps> f({"x", "y"}, 8);
        TruncSeries<ZEps> g({"x", "y"}, 8);
        for (int i = 0; i < 6; ++i) {
            Exponents e{static_cast<std::uint32_t>(ftltest::rand_int(rng, 0, 4)),
                        static_cast<std::uint32_t>(ftltest::rand_int(rng, 0, 4))};
            f.add_term(e, ftltest::rand_zeps(rng));
            Exponents e2{static_cast<std::uint32_t>(ftltest::rand_int(rng, 0, 4)),
                         static_cast<std::uint32_t>(ftltest::rand_int(rng, 0, 4))};
            g.add_term(e2, ftltest::rand_zeps(rng));
        }
        auto full = (f * g).truncated(5);
        auto direct = f.truncated(5) * g.truncated(5);
        CHECK(full == direct);
    }
}

TEST_CASE("sym_to_elementary classical identities") {
    // x1^2 + x2^2 = e1^2 - 2 e2
    auto p = make_poly({"x1", "x2"}, {{{2, 0}, 1}, {{0, 2}, 1}});
    auto r = sym_to_elementary(p, 0, 2, {"e1", "e2"});
    auto expected = make_poly({"e1", "e2"}, {{{2, 0}, 1}, {{0, 1}, -2}});
    CHECK(r == expected);

    // x1 x2 x3 = e3
    auto q = make_poly({"x1", "x2", "x3"}, {{{1, 1, 1}, 1}});
    auto r3 = sym_to_elementary(q, 0, 3, {"e1", "e2", "e3"});
    auto expected3 = make_poly({"e1", "e2", "e3"}, {{{0, 0, 1}, 1}});
    CHECK(r3 == expected3);

    // (x1+x2)(1+x1x2) = e1 + e1 e2
    auto s = make_poly({"x1", "x2"},
                       {{{1, 0}, 1}, {{0, 1}, 1}, {{2, 1}, 1}, {{1, 2}, 1}});
    auto rs = sym_to_elementary(s, 0, 2, {"e1", "e2"});
    auto expecteds = make_poly({"e1", "e2"}, {{{1, 0}, 1}, {{1, 1}, 1}});
    CHECK(rs == expecteds);
}

TEST_CASE("sym_to_elementary rejects non-symmetric input") {
    auto p = make_poly({"x1", "x2"}, {{{2, 0}, 1}});
    CHECK_THROWS_AS((void)sym_to_elementary(p, 0, 2, {"e1", "e2"}),
                    not_symmetric_error);
    auto q = make_poly({"x1", "x2"}, {{{2, 0}, 1}, {{0, 2}, 2}});
    CHECK_THROWS_AS((void)sym_to_elementary(q, 0, 2, {"e1", "e2"}),
                    not_symmetric_error);
}

TEST_CASE("sym_to_elementary round trip on random symmetric polynomials") {
    ftltest::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned m = static_cast<unsigned>(ftltest::rand_int(rng, 1, 4));
        std::vector<std::string> vars;
        for (unsigned i = 0; i < m; ++i) vars.push_back("x" + std::to_string(i + 1));
        // random symmetric polynomial: symmetrize random monomials
        TruncSeries<ZEps> p(vars);
        for (int t = 0; t < 4; ++t) {
            Exponents e(m);
            for (unsigned i = 0; i < m; ++i) {
                e[i] = static_cast<std::uint32_t>(ftltest::rand_int(rng, 0, 3));
            }
            ZEps c = ftltest::rand_zeps(rng);
            std::sort(e.begin(), e.end());
            do {
                p.add_term(e, c);
            } while (std::next_permutation(e.begin(), e.end()));
        }
        std::vector<std::string> enames;
        for (unsigned i = 0; i < m; ++i) enames.push_back("e" + std::to_string(i + 1));
        auto in_e = sym_to_elementary(p, 0, m, enames);

        // substitute e_i -> elementary symmetric polynomial of the roots
        TruncSeries<ZEps> back(vars);
        for (const auto& [ee, c] : in_e.terms()) {
            symf::IntTerms acc{{Exponents(m, 0), Int(1)}};
            for (unsigned i = 0; i < m; ++i) {
                for (std::uint32_t pw = 0; pw < ee[i]; ++pw) {
                    acc = symf::poly_mul(acc, symf::elem_sym(m, i + 1));
                }
            }
            for (const auto& [xe, z] : acc) back.add_term(xe, c * ring_int<ZEps>(z));
        }
        CHECK(back == p);
    }
}

TEST_CASE("compose and revert") {
    // f = x, any g -> g
    TruncSeries<ZEps> x({"x"}, 10);
    x.add_term({1}, ZEps::one());
    TruncSeries<ZEps> g({"x"}, 10);
    g.add_term({1}, ZEps::from_int(3));
    g.add_term({2}, ZEps::from_int(-2));
    CHECK(compose1(x, g) == g);

    // f = x + a x^2, g = x
    TruncSeries<ZEps> f({"x"}, 10);
    f.add_term({1}, ZEps::one());
    f.add_term({2}, ZEps::from_int(1));
    CHECK(compose1(f, x) == f);

    // revert(x) = x, revert(-eps x) = -eps x
    CHECK(revert(x, 10) == x);
    TruncSeries<ZEps> me({"x"}, 10);
    me.add_term({1}, -ZEps::eps());
    CHECK(revert(me, 10) == me);

    // revert(x + x^2) = x - x^2 + 2x^3 - 5x^4 + ...
    auto r = revert(f, 4);
    CHECK(r.coeff({1}) == ZEps::one());
    CHECK(r.coeff({2}) == ZEps::from_int(-1));
    CHECK(r.coeff({3}) == ZEps::from_int(2));
    CHECK(r.coeff({4}) == ZEps::from_int(-5));
    CHECK(compose1(r, f.truncated(4)).coeff({1}) == ZEps::one());

    // non-unit linear coefficient
    TruncSeries<ZEps> bad({"x"}, 10);
    bad.add_term({1}, ZEps::from_int(2));
    CHECK_THROWS_AS((void)revert(bad, 10), not_invertible_error);
}

TEST_CASE("revert round trip on random invertible series") {
    ftltest::Rng rng(41);
    const int bound = 10;
    TruncSeries<QEps> ident({"x"}, bound);
    ident.add_term({1}, QEps::one());
    for (int trial = 0; trial < 30; ++trial) {
        TruncSeries<QEps> f({"x"}, bound);
        f.add_term({1}, ftltest::rand_int(rng, 0, 1) ? QEps::one() : -QEps::eps());
        for (int k = 2; k <= 6; ++k) {
            f.add_term({static_cast<std::uint32_t>(k)}, ftltest::rand_qeps(rng));
        }
        auto inv = revert(f, bound);
        CHECK(compose1(inv, f) == ident);
        CHECK(compose1(f, inv) == ident);
    }
}

TEST_CASE("series_inverse") {
    TruncSeries<QEps> f({"t"}, 6);
    f.add_term({0}, QEps::one());
    f.add_term({1}, QEps::from_int(-2));
    auto g = series_inverse(f, 6);
    auto prod = f * g;
    TruncSeries<QEps> one({"t"}, 6);
    one.add_term({0}, QEps::one());
    CHECK(prod == one);
}

TEST_CASE("substitute single root is renaming") {
    // G_t(y) = 1 + y t ; F arbitrary (2,2)-series
    NDSeries<ZEps> F(2, {"x", "w"});
    F.coeff(1).add_term({1, 0}, ZEps::from_int(2));
    F.coeff(1).add_term({0, 1}, ZEps::from_int(3));
    F.coeff(2).add_term({1, 1}, ZEps::from_int(-1));
    NDSeries<ZEps> G(1, {"y"});
    G.coeff(1).add_term({1}, ZEps::one());
    auto r = substitute(F, 0, G);
    CHECK(r.valued() == 2);
    CHECK(r.vars() == std::vector<std::string>{"w", "y"});
    CHECK(r.coeff(1).coeff({0, 1}) == ZEps::from_int(2));
    CHECK(r.coeff(1).coeff({1, 0}) == ZEps::from_int(3));
    CHECK(r.coeff(2).coeff({1, 1}) == ZEps::from_int(-1));
}

TEST_CASE("substitute against explicit-root product") {
    // F = (2,1)-series 1 + a x t + b x^2 t^2 ; G = (1+ut)(1+vt) with explicit roots u, v.
    NDSeries<ZEps> F(2, {"x"});
    F.coeff(1).add_term({1}, ZEps::from_int(2));
    F.coeff(2).add_term({2}, ZEps::from_int(-3));
    NDSeries<ZEps> G(2, {"u", "v"});
    G.coeff(1).add_term({1, 0}, ZEps::one());
    G.coeff(1).add_term({0, 1}, ZEps::one());
    G.coeff(2).add_term({1, 1}, ZEps::one());
    auto r = substitute(F, 0, G);

    // Direct product F_t(u) * F_t(v)
    NDSeries<ZEps> direct(4, {"u", "v"});
    auto mul_into = [&](int tu, const Exponents& eu, long cu, int tv, const Exponents& ev,
                        long cv) {
        Exponents key{eu[0], ev[0]};
        if (tu + tv >= 1) {
            direct.coeff(tu + tv).add_term(key, ZEps::from_int(cu) * ZEps::from_int(cv));
        }
    };
    // terms of F_t(u): (0,{0},1),(1,{1},2),(2,{2},-3)
    std::vector<std::tuple<int, Exponents, long>> terms{
        {0, {0}, 1}, {1, {1}, 2}, {2, {2}, -3}};
    for (auto& [tu, eu, cu] : terms) {
        for (auto& [tv, ev, cv] : terms) {
            mul_into(tu, eu, cu, tv, Exponents{ev[0]}, cv);
        }
    }
    CHECK(!nd_diff_witness(r, direct).has_value());
}

TEST_CASE("substitute rejects non-composable series") {
    NDSeries<ZEps> F(1, {"x"});
    F.coeff(1).add_term({1}, ZEps::one());
    NDSeries<ZEps> G(1, {"y"});
    G.coeff(1).add_term({0}, ZEps::one());  // nonzero constant term
    CHECK_THROWS_AS((void)substitute(F, 0, G), not_composable_error);
}
