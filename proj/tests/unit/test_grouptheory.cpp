#include "support.hpp"

#include <numeric>

#include "qordkit/error.hpp"
#include "qordkit/grouptheory.hpp"
#include "qordkit/partitions.hpp"

using namespace qordkit;

namespace {

Integer hook_dimension(const Partition& lambda)
{
    Integer prod = 1;
    std::vector<int> conj(static_cast<std::size_t>(lambda.empty() ? 0 : lambda[0]), 0);
    for (int row : lambda) {
        for (int j = 0; j < row; ++j) {
            ++conj[static_cast<std::size_t>(j)];
        }
    }
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            prod *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
        }
    }
    return factorial(size(lambda)) / prod;
}

int row_with(const CharacterTable& t, const std::vector<Cyclotomic>& values)
{
    for (int r = 0; r < t.num_irreducibles(); ++r) {
        if (t.chars[static_cast<std::size_t>(r)] == values) {
            return r;
        }
    }
    return -1;
}

} // namespace

TEST_CASE("partitions")
{
    CHECK(partitions(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) {
        CHECK(partitions(n).size() == static_cast<std::size_t>(counts[n]));
    }
    CHECK(z_value({2, 1}) == 2);
    CHECK(z_value({1, 1, 1}) == 6);
    CHECK(z_value({2, 2}) == 8);
    for (int n = 1; n <= 7; ++n) {
        Rational total = 0;
        for (const auto& mu : partitions(n)) {
            total += Rational(1) / Rational(z_value(mu));
        }
        CHECK(total == 1);
    }
    CHECK(cycle_type({1, 0, 2}) == Partition{2, 1});
    CHECK(cycle_type({1, 2, 0, 4, 3}) == Partition{3, 2});
}

TEST_CASE("Murnaghan-Nakayama")
{
    CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(sn_character({2, 1}, {3}) == -1);
    CHECK(sn_character({2, 1}, {2, 1}) == 0);
    CHECK(sn_character({2, 2}, {2, 2}) == 2);
    for (int n = 1; n <= 8; ++n) {
        Partition ones(static_cast<std::size_t>(n), 1);
        for (const auto& lambda : partitions(n)) {
            CHECK(sn_character(lambda, ones) == hook_dimension(lambda));
        }
        // row orthonormality
        auto ps = partitions(n);
        for (const auto& a : ps) {
            for (const auto& b : ps) {
                Rational ip = 0;
                for (const auto& mu : ps) {
                    ip += Rational(sn_character(a, mu) * sn_character(b, mu)) / Rational(z_value(mu));
                }
                CHECK(ip == (a == b ? 1 : 0));
            }
        }
    }
}

TEST_CASE("character tables")
{
    auto z3 = character_table(FiniteGroup::cyclic(3));
    CHECK(z3.num_irreducibles() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(row_with(z3, {Cyclotomic::root(3, 0), Cyclotomic::root(3, j), Cyclotomic::root(3, 2 * j)}) >= 0);
    }

    auto s3 = character_table(FiniteGroup::symmetric(3));
    std::vector<Integer> dims;
    for (int r = 0; r < s3.num_irreducibles(); ++r) {
        dims.push_back(s3.dimension(r));
    }
    CHECK(dims == std::vector<Integer>{1, 1, 2});
    s3.check();

    auto p = character_table(FiniteGroup::direct_product(FiniteGroup::symmetric(2), FiniteGroup::cyclic(2)));
    CHECK(p.num_irreducibles() == 4);
    for (int r = 0; r < 4; ++r) {
        CHECK(p.dimension(r) == 1);
    }
    p.check();

    for (int n = 2; n <= 7; ++n) {
        auto t = symmetric_character_table(n);
        CHECK(t.group_order == factorial(n));
        CHECK(static_cast<std::size_t>(t.num_irreducibles()) == partitions(n).size());
        t.check();
    }
    std::vector<Integer> by_partitions;
    std::vector<Integer> by_elements;
    auto s4 = character_table(FiniteGroup::symmetric(4));
    for (int r = 0; r < 5; ++r) {
        by_partitions.push_back(symmetric_character_table(4).dimension(r));
        by_elements.push_back(s4.dimension(r));
    }
    CHECK(by_partitions == by_elements);
}

TEST_CASE("group tables are validated")
{
    // 0 + 1 = 1, 1 + 1 = 1 has no inverse
    CHECK_THROWS_AS(FiniteGroup({0, 1, 1, 1}, 2), ValidationError);
    FiniteGroup z2({0, 1, 1, 0}, 2);
    CHECK(z2.classes().size() == 2);
}

TEST_CASE("restriction")
{
    auto s3 = FiniteGroup::symmetric(3);
    auto t = character_table(s3);
    auto h = young_subgroup(3, {2, 1});
    auto m = restriction_matrix(s3, t, h);
    REQUIRE(m.size() == 3);
    // each row of S_2 is triv or sgn; std restricts to both
    for (int r = 0; r < 3; ++r) {
        Integer total = 0;
        for (const auto& e : m[static_cast<std::size_t>(r)]) {
            total += e;
        }
        CHECK(total == t.dimension(r));
    }
    CHECK(m[0] != m[1]);

    auto tm = restriction_matrix(s3, t, trivial_subgroup(s3));
    for (int r = 0; r < 3; ++r) {
        CHECK(tm[static_cast<std::size_t>(r)] == std::vector<Integer>{t.dimension(r)});
    }

    Subgroup self{s3, {0, 1, 2, 3, 4, 5}, std::nullopt};
    auto id = restriction_matrix(s3, t, self);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            CHECK(id[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == (r == c ? 1 : 0));
        }
    }
}

TEST_CASE("abelianization")
{
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(commutator_subgroup(s3).size() == 3);
    CHECK(abelianization_exponent(s3) == 2);
    CHECK(abelianization_exponent(FiniteGroup::cyclic(4)) == 4);

    auto t = character_table(s3);
    auto m = abelianization_matrix(s3, t);
    REQUIRE(m.size() == 3);
    CHECK(m[2] == std::vector<Integer>{0, 0});
    CHECK(m[0] != m[1]);

    auto z4 = FiniteGroup::cyclic(4);
    auto a = abelianization_matrix(z4, character_table(z4));
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            CHECK(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == (r == c ? 1 : 0));
        }
    }
}

TEST_CASE("good families")
{
    auto s3 = FiniteGroup::symmetric(3);
    auto t = character_table(s3);
    // det [[1,0,1],[0,1,1],[1,1,2]] = 0
    CHECK_FALSE(is_good_family(s3, t, {young_subgroup(3, {2, 1}), young_subgroup(3, {1, 1, 1})}).good);
    auto r = is_good_family(s3, t, {young_subgroup(3, {3}), young_subgroup(3, {2, 1}), young_subgroup(3, {1, 1, 1})});
    CHECK(r.good);
    CHECK(r.exponent_lcm == 2);

    auto z3 = FiniteGroup::cyclic(3);
    auto only_trivial = is_good_family(z3, character_table(z3), {trivial_subgroup(z3)});
    CHECK_FALSE(only_trivial.good);
}
