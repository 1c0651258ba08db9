#include "support.hpp"

#include "qordkit/genfun.hpp"
#include "qordkit/grouptheory.hpp"
#include "qordkit/partitions.hpp"
#include "qordkit/wreath.hpp"

using namespace qordkit;

namespace {

Integer power(const Integer& b, int e)
{
    Integer r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

// n! / prod |lambda_i|! * prod dim(V_i)^|lambda_i| * f^lambda_i
Integer wreath_dimension(const CharacterTable& g, const PartitionValuedFunction& lambda)
{
    Integer d = factorial(total_size(lambda));
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int k = size(lambda[i]);
        d /= factorial(k);
        d *= power(g.dimension(static_cast<int>(i)), k);
        if (k > 0) {
            d *= sn_character(lambda[i], Partition(static_cast<std::size_t>(k), 1));
        }
    }
    return d;
}

} // namespace

TEST_CASE("wreath classes")
{
    for (int order : {1, 2, 3}) {
        auto g = cyclic_character_table(order);
        for (int n = 1; n <= 4; ++n) {
            Integer total = 0;
            for (const auto& c : wreath_classes(g, n)) {
                total += c.size;
                CHECK(c.size * c.centralizer == power(order, n) * factorial(n));
            }
            CHECK(total == power(order, n) * factorial(n));
            CHECK(wreath_classes(g, n).size() == wreath_irreducible_labels(g, n).size());
        }
    }
    auto s3 = symmetric_character_table(3);
    Integer total = 0;
    for (const auto& c : wreath_classes(s3, 2)) {
        total += c.size;
    }
    CHECK(total == 72);
}

TEST_CASE("wreath characters")
{
    for (int order : {2, 3}) {
        auto g = cyclic_character_table(order);
        const int n = order == 2 ? 3 : 2;
        auto labels = wreath_irreducible_labels(g, n);
        std::vector<ClassFunction> chars;
        for (const auto& l : labels) {
            chars.push_back(wreath_irreducible_character(g, l));
            const auto& cls = chars.back().classes;
            for (std::size_t c = 0; c < cls.size(); ++c) {
                if (cls[c].label[0] == Partition(static_cast<std::size_t>(n), 1)) {
                    CHECK(chars.back().values[c] == Cyclotomic(Rational(wreath_dimension(g, l))));
                }
            }
        }
        for (std::size_t a = 0; a < chars.size(); ++a) {
            for (std::size_t b = 0; b < chars.size(); ++b) {
                CHECK(wreath_inner_product(chars[a], chars[b]) == Cyclotomic(a == b ? 1 : 0));
            }
        }
    }
}

TEST_CASE("trivial group gives symmetric groups")
{
    auto g = cyclic_character_table(1);
    const int n = 4;
    for (const auto& lambda : partitions(n)) {
        auto chi = wreath_irreducible_character(g, {lambda});
        for (std::size_t c = 0; c < chi.classes.size(); ++c) {
            CHECK(chi.values[c] == Cyclotomic(Rational(sn_character(lambda, chi.classes[c].label[0]))));
        }
    }
}

TEST_CASE("padding")
{
    auto g = cyclic_character_table(2);
    PartitionValuedFunction lambda{{1}, {1}};
    auto p = pad(g, lambda, 4);
    REQUIRE(p);
    CHECK(*p == PartitionValuedFunction{{2, 1}, {1}});
    CHECK_FALSE(pad(g, lambda, 2));
    CHECK(min_valid_n(g, {lambda, {{}, {1}}}) == 3);
}

TEST_CASE("stability tables")
{
    auto g = cyclic_character_table(1);
    PartitionValuedFunction empty{{}};
    auto t = tensor_stability_table(g, empty, empty, empty, 1, 5);
    for (const auto& e : t.entries) {
        REQUIRE(e.multiplicity);
        CHECK(*e.multiplicity == 1);
    }
    CHECK(t.tail_constant);
    CHECK(t.observed_onset == 1);
}

TEST_CASE("diagonal induction")
{
    auto g = cyclic_character_table(2);
    auto d = decompose_induced(g, 0, 2);
    CHECK(d == std::map<std::vector<int>, Integer>{{{0, 0}, 1}, {{1, 1}, 1}});
    auto mono = monomial_image(d, 2);
    CHECK(mono.coefficient({2, 0}) == Cyclotomic(1));
    CHECK(mono.coefficient({1, 1}).is_zero());
    auto s = expand_rational(diag_induced_series(g, 0), {4, 4});
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            // ordered tuples of a trivial and b sign factors, each once, when the product is trivial
            Integer tuples;
            mpz_bin_uiui(tuples.get_mpz_t(), static_cast<unsigned long>(a + b), static_cast<unsigned long>(a));
            CHECK(s.coefficient({a, b}) == Cyclotomic(Rational(b % 2 == 0 ? tuples : Integer(0))));
        }
    }

    auto trivial = cyclic_character_table(1);
    auto e = expand_rational(diag_induced_series(trivial, 0), {6});
    for (int n = 0; n <= 6; ++n) {
        CHECK(e.coefficient({n}) == Cyclotomic(1));
    }
}
