#include "support.hpp"

#include "qordkit/cyclotomic.hpp"
#include "qordkit/error.hpp"

using namespace qordkit;

TEST_CASE("roots of unity")
{
    CHECK(Cyclotomic::root(4, 2) == Cyclotomic(-1));
    CHECK(Cyclotomic::root(6, 3) == Cyclotomic(-1));
    CHECK(Cyclotomic::root(5, 5).is_one());
    for (int n = 1; n <= 24; ++n) {
        CHECK(Cyclotomic::root(n, 1).pow(n).is_one());
        CHECK(Cyclotomic::root(n, -1) == Cyclotomic::root(n, n - 1));
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
    // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("field arithmetic")
{
    const Cyclotomic z3 = Cyclotomic::root(3, 1);
    CHECK(z3 + z3 * z3 == Cyclotomic(-1));
    CHECK(Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1) == Cyclotomic(-1));
    const Cyclotomic w = Cyclotomic(1) + Cyclotomic::root(5, 1);
    CHECK(w * Cyclotomic(1) == w);
    CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
    CHECK(Cyclotomic::root(7, 1).inverse() == Cyclotomic::root(7, 6));
    const Cyclotomic u = Cyclotomic(1) + z3;
    CHECK(u.inverse() == -z3);
    CHECK((u * u.inverse()).is_one());
    CHECK_THROWS_AS(Cyclotomic().inverse(), DivisionByZero);
}

TEST_CASE("mixed orders embed into the lcm")
{
    const Cyclotomic minus_one = Cyclotomic::root(2, 1);
    const Cyclotomic z6 = Cyclotomic::root(6, 1);
    CHECK(minus_one.lift(6) == z6.pow(3));
    CHECK(Cyclotomic::root(3, 1) == z6 * z6);
    CHECK((minus_one + z6).order() % 6 == 0);
    CHECK(Cyclotomic(1) == Cyclotomic(Rational(1), 6));
    // i * zeta_3 has order 12
    CHECK((Cyclotomic::root(4, 1) * Cyclotomic::root(3, 1)).pow(12).is_one());
}

TEST_CASE("conjugation and Galois action")
{
    const Cyclotomic z5 = Cyclotomic::root(5, 1);
    CHECK(z5.conj() == z5.pow(4));
    CHECK(z5.galois(2) == z5 * z5);
    // zeta + zeta^-1 is fixed by conjugation
    CHECK((z5 + z5.conj()).conj() == z5 + z5.conj());
    CHECK((Cyclotomic::root(8, 1) + Cyclotomic::root(8, 7)).pow(2) == Cyclotomic(2));
}

TEST_CASE("integrality")
{
    CHECK(Cyclotomic::root(9, 4).is_integral());
    CHECK_FALSE(Cyclotomic(Rational(1, 3)).is_integral());
    CHECK_FALSE(((Cyclotomic(1) + Cyclotomic::root(3, 1)) / Cyclotomic(2)).is_integral());
}
