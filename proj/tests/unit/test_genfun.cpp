#include "support.hpp"

#include "qordkit/error.hpp"
#include "qordkit/genfun.hpp"

using namespace qordkit;

namespace {

const Alphabet ab({"a", "b"});

Integer binom(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Cyclotomic c(long v)
{
    return Cyclotomic(v);
}

FactoredRational geom1()
{
    return FactoredRational::geometric(LinearForm{{c(1)}});
}

FactoredRational geom_ab()
{
    return FactoredRational::geometric(LinearForm{{c(1), c(1)}});
}

} // namespace

TEST_CASE("series of automata")
{
    Dfa even = compile_congruence(ab, CongruenceSpec{AbelianGroup({2}), {1, 0}, {0}});
    auto s = series_from_dfa(even, Norm{{0, 0}, 1}, {4});
    for (int n = 0; n <= 4; ++n) {
        CHECK(s.coefficient({n}) == c(n == 0 ? 1 : 1L << (n - 1)));
    }
    auto all = series_from_dfa(all_words_dfa(ab), Norm::identity(2), {2, 1});
    CHECK(all.coefficient({2, 1}) == c(3));
    CHECK(series_from_dfa(empty_dfa(ab), Norm::identity(2), {3, 3}).coeffs.empty());
}

TEST_CASE("closed forms of ordered expressions")
{
    auto star = ordered_genfun(ab, LanguageExpr::star({0, 1}), Norm::identity(2));
    CHECK(star == geom_ab());
    auto e = expand_rational(star, {8, 8});
    for (int i = 0; i <= 8; ++i) {
        for (int j = 0; j <= 8; ++j) {
            CHECK(e.coefficient({i, j}) == Cyclotomic(Rational(binom(i + j, i))));
        }
    }

    Alphabet a1({"a"});
    auto t_over = ordered_genfun(a1, LanguageExpr::concat({LanguageExpr::singleton(0), LanguageExpr::star({0})}),
                                 Norm::identity(1));
    auto te = expand_rational(t_over, {8});
    for (int n = 0; n <= 8; ++n) {
        CHECK(te.coefficient({n}) == c(n == 0 ? 0 : 1));
    }
    CHECK(ordered_genfun(ab, LanguageExpr::empty(), Norm::identity(2)).is_zero());
}

TEST_CASE("ambiguous unions are refused")
{
    auto twice = LanguageExpr::union_of({LanguageExpr::singleton(0), LanguageExpr::singleton(0)});
    CHECK_FALSE(is_unambiguous(ab, twice));
    CHECK_THROWS_AS(ordered_genfun(ab, twice, Norm::identity(2)), AmbiguousExpression);
    auto split = LanguageExpr::union_of({LanguageExpr::singleton(0), LanguageExpr::singleton(1)});
    CHECK(is_unambiguous(ab, split));
}

TEST_CASE("cyclotomic translation")
{
    auto f = expand_rational(cyclotomic_translate(geom1(), 2, {1}), {8});
    CHECK(f == expand_rational(FactoredRational::geometric(LinearForm{{c(-1)}}), {8}));
    CHECK(expand_rational(cyclotomic_translate(geom1(), 1, {0}), {8}) == expand_rational(geom1(), {8}));

    auto g = FactoredRational::from_polynomial(Polynomial::monomial(2, {1, 0}, c(1))) * geom_ab();
    auto tg = expand_rational(cyclotomic_translate(g, 2, {1, 0}), {6, 6});
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            // [t^i u^j] t/(1-t-u) = C(i-1+j, j) for i >= 1
            Integer v = i == 0 ? Integer(0) : binom(i - 1 + j, j);
            if (i % 2 == 1) {
                v = -v;
            }
            CHECK(tg.coefficient({i, j}) == Cyclotomic(Rational(v)));
        }
    }
}

TEST_CASE("congruence filters")
{
    AbelianGroup z2({2});
    auto even = congruence_filter(geom1(), z2, {1}, {0});
    auto ee = expand_rational(even, {10});
    for (int n = 0; n <= 10; ++n) {
        CHECK(ee.coefficient({n}) == c(n % 2 == 0 ? 1 : 0));
    }
    CHECK(is_class_kn(even));

    auto even_a = expand_rational(congruence_filter(geom_ab(), z2, {1, 0}, {0}), {6, 6});
    CHECK(even_a.coefficient({2, 1}) == c(3));
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            CHECK(even_a.coefficient({i, j}) == Cyclotomic(Rational(i % 2 == 0 ? binom(i + j, i) : Integer(0))));
        }
    }

    auto full = congruence_filter(geom_ab(), z2, {1, 0}, {0, 1});
    CHECK(agree(expand_rational(full, {6, 6}), expand_rational(geom_ab(), {6, 6})));
}

TEST_CASE("quasi-ordered closed forms")
{
    Alphabet a1({"a"});
    QuasiOrderedExpr q{a1, LanguageExpr::star({0}), CongruenceSpec{AbelianGroup({3}), {1}, {0}}};
    auto f = quasi_ordered_genfun(q, Norm::identity(1));
    CHECK(f.order() % 3 == 0);
    CHECK(is_class_kn(f));
    auto e = expand_rational(f, {12});
    for (int n = 0; n <= 12; ++n) {
        CHECK(e.coefficient({n}) == c(n % 3 == 0 ? 1 : 0));
    }

    QuasiOrderedExpr nothing{ab, LanguageExpr::star({0, 1}), CongruenceSpec{AbelianGroup({2}), {1, 0}, {}}};
    CHECK(quasi_ordered_genfun(nothing, Norm::identity(2)).is_zero());

    QuasiOrderedExpr even{ab, LanguageExpr::star({0, 1}), CongruenceSpec{AbelianGroup({2}), {1, 0}, {0}}};
    auto dfa_series = series_from_dfa(compile_quasi_ordered(even), Norm::identity(2), {8, 8});
    CHECK(expand_rational(quasi_ordered_genfun(even, Norm::identity(2)), {8, 8}) == dfa_series);
}

TEST_CASE("class K_N")
{
    CHECK(is_class_kn(FactoredRational::geometric(LinearForm{{Cyclotomic::root(3, 1)}})));
    CHECK_FALSE(is_class_kn(FactoredRational::geometric(LinearForm{{Cyclotomic(Rational(1, 2))}})));
}

TEST_CASE("expansion with a total-degree cut")
{
    auto e = expand_rational(geom_ab(), {5, 5}, 3);
    CHECK(e.coefficient({1, 2}) == c(3));
    CHECK_FALSE(e.in_range({2, 2}));
    CHECK(e.coeffs.size() == 10);
}
