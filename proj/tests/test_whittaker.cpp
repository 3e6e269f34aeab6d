#include "lz/whittaker.hpp"

#include <doctest.h>

using namespace lz;

TEST_CASE("dominance")
{
    CHECK(is_dominant({PadicGroup::GL, 3, {2, 1, 0}}));
    CHECK_FALSE(is_dominant({PadicGroup::GL, 2, {0, 1}}));
    CHECK(is_dominant({PadicGroup::GSpinOdd, 2, {1, 1}}));
}

TEST_CASE("modulus factor")
{
    CHECK(delta_half({PadicGroup::GL, 2, {0, 0}}) == Scalar(1));
    CHECK(delta_half({PadicGroup::GL, 2, {1, 0}}) == Scalar::u(-1));
    // SO5 roots e1-e2, e1+e2, e1, e2: 2 rho = (3, 1)
    CHECK(delta_half({PadicGroup::GSpinOdd, 2, {1, 0}}) == Scalar::u(-3));
    CHECK(two_rho_pairing({PadicGroup::GSpinOdd, 2, {1, 0}}) == 3);
}

TEST_CASE("GL(2) values")
{
    const SatakePoint p{GroupType::gl(2), {Rational(2, 3), 5}};
    CHECK(cs_value({PadicGroup::GL, 2, {0, 0}}, p) == Scalar(1));
    CHECK(cs_value({PadicGroup::GL, 2, {1, 0}}, p) == Scalar::monomial(Rational(2, 3) + 5, -1));
    CHECK(cs_value({PadicGroup::GL, 2, {0, 1}}, p).is_zero());
}

TEST_CASE("GSpin(5) std value")
{
    // dual GSp(4): sigma; b1, b2 with eigenvalues sigma b_i, sigma / b_i
    const Rational s = 2, b1 = 3, b2 = Rational(1, 5);
    const SatakePoint p{GroupType::gsp(2), {s, b1, b2}};
    const Rational tr = s * b1 + s * b2 + s / b2 + s / b1;
    CHECK(cs_value({PadicGroup::GSpinOdd, 2, {1, 0}, 0}, p) == Scalar::monomial(tr, -3));
}

TEST_CASE("GSO torus shapes")
{
    const Cocharacter c = gso_from_diagonal({2, 1, 0, 3, 2, 1});
    CHECK(c.k0 == 3);
    CHECK(c.k == IVec{2, 1, 0});
    CHECK_THROWS(gso_from_diagonal({2, 1, 0, 3, 2, 2}));
}
