#include "support.hpp"

#include <set>

#include "qordkit/error.hpp"
#include "qordkit/langkit.hpp"

using namespace qordkit;

namespace {

const Alphabet ab({"a", "b"});

std::vector<Word> all_words(int num_symbols, int max_len)
{
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (static_cast<int>(out[i].size()) == max_len) {
            continue;
        }
        for (int s = 0; s < num_symbols; ++s) {
            Word w = out[i];
            w.push_back(s);
            out.push_back(w);
        }
    }
    return out;
}

CongruenceSpec even_a()
{
    return CongruenceSpec{AbelianGroup({2}), {1, 0}, {0}};
}

int count_a(const Word& w)
{
    int k = 0;
    for (int s : w) {
        k += s == 0;
    }
    return k;
}

} // namespace

TEST_CASE("ordered expressions")
{
    auto a_then_any = LanguageExpr::concat({LanguageExpr::singleton(0), LanguageExpr::star({0, 1})});
    Dfa d = compile_ordered(ab, a_then_any);
    for (const char* w : {"a", "ab", "abb"}) {
        CHECK(membership(d, parse_word(ab, w)));
    }
    for (const char* w : {"", "ba"}) {
        CHECK_FALSE(membership(d, parse_word(ab, w)));
    }

    Dfa all = compile_ordered(ab, LanguageExpr::star({0, 1}));
    for (const Word& w : all_words(2, 6)) {
        CHECK(membership(all, w));
    }

    Dfa eps_or_a = compile_ordered(ab, LanguageExpr::union_of({LanguageExpr::epsilon(), LanguageExpr::singleton(0)}));
    for (const Word& w : all_words(2, 4)) {
        CHECK(membership(eps_or_a, w) == (w.empty() || w == Word{0}));
    }

    CHECK(compile_ordered(ab, LanguageExpr::empty()).empty_language());
}

TEST_CASE("compiled automata are minimal")
{
    // a (a|b)* needs start, accept and dead
    auto e = LanguageExpr::concat({LanguageExpr::singleton(0), LanguageExpr::star({0, 1})});
    CHECK(compile_ordered(ab, e).num_states() == 3);
    CHECK(compile_ordered(ab, LanguageExpr::star({0, 1})).num_states() == 1);
    Dfa m = minimize(compile_ordered(ab, e));
    CHECK(m == compile_ordered(ab, e));
}

TEST_CASE("congruence languages")
{
    Dfa d = compile_congruence(ab, even_a());
    CHECK(d.num_states() == 2);
    CHECK(membership(d, parse_word(ab, "abab")));
    CHECK_FALSE(membership(d, parse_word(ab, "a")));
    CHECK(membership(d, {}));
    CHECK(membership(d, parse_word(ab, "aba")));
    CHECK_FALSE(membership(d, parse_word(ab, "ab")));

    Alphabet a1({"a"});
    CongruenceSpec z3{AbelianGroup({3}), {1}, {0}};
    Dfa d3 = compile_congruence(a1, z3);
    CHECK(d3.num_states() == 3);
    CHECK(membership(d3, parse_word(a1, "aaa")));
    CHECK_FALSE(membership(d3, parse_word(a1, "aa")));

    CongruenceSpec bad{AbelianGroup({2}), {1}, {0}};
    CHECK_THROWS_AS(compile_congruence(ab, bad), ValidationError);
}

TEST_CASE("intersection")
{
    Dfa even = compile_congruence(ab, even_a());
    Dfa x = compile_ordered(ab, LanguageExpr::concat({LanguageExpr::singleton(0), LanguageExpr::star({0, 1})}));
    Dfa both = intersect_dfa(even, x);
    CHECK(membership(both, parse_word(ab, "aab")));
    CHECK_FALSE(membership(both, parse_word(ab, "ab")));

    Dfa same = intersect_dfa(x, all_words_dfa(ab));
    Dfa none = intersect_dfa(x, empty_dfa(ab));
    Dfa either = union_dfa(even, x);
    for (const Word& w : all_words(2, 6)) {
        CHECK(membership(same, w) == membership(x, w));
        CHECK_FALSE(membership(none, w));
        CHECK(membership(either, w) == (count_a(w) % 2 == 0 || (!w.empty() && w[0] == 0)));
    }
}

TEST_CASE("enumeration by norm")
{
    Dfa all = all_words_dfa(ab);
    auto words = enumerate_by_norm(all, Norm::identity(2), {2, 1});
    int exact = 0;
    for (const Word& w : words) {
        exact += count_a(w) == 2 && w.size() == 3;
    }
    CHECK(exact == 3);
    CHECK(words.size() == 9); // 1+1+1+1+2+3 over the box (2,1)

    Norm length{{0, 0}, 1};
    Dfa even = compile_congruence(ab, even_a());
    std::vector<int> by_length(5, 0);
    for (const Word& w : enumerate_by_norm(even, length, {4})) {
        ++by_length[w.size()];
    }
    CHECK(by_length == std::vector<int>{1, 1, 2, 4, 8});
    CHECK(enumerate_by_norm(empty_dfa(ab), length, {5}).empty());
}

TEST_CASE("foreign symbols are rejected")
{
    CHECK_THROWS_AS(parse_word(ab, "abc"), ValidationError);
    CHECK_THROWS_AS(validate(ab, LanguageExpr::singleton(5)), ValidationError);
}
