#include "lz/exactring.hpp"

#include <doctest.h>

using namespace lz;

TEST_CASE("scalar products")
{
    const Scalar u = Scalar::u();
    CHECK(u * u == Scalar::u(2));
    CHECK((Scalar(1) + u) * (Scalar(1) - u) == Scalar(1) - Scalar::u(2));
    CHECK(Scalar::monomial(Rational(3, 2), -1) + Scalar::monomial(Rational(1, 2), -1) == Scalar::monomial(2, -1));
    const Scalar a = Scalar(3) + Scalar::monomial(Rational(-2, 7), 5);
    CHECK(a * Scalar(1) == a);
    CHECK((a - a).is_zero());
    CHECK(a.low() == 0);
    CHECK(a.high() == 5);
}

TEST_CASE("scalar_arith pow reads a constant exponent")
{
    const Scalar b = Scalar(1) + Scalar::u();
    CHECK(scalar_arith(b, Scalar(3), Op::pow) == b * b * b);
    CHECK(scalar_arith(b, Scalar(0), Op::pow) == Scalar(1));
    CHECK(scalar_arith(b, b, Op::add) == b + b);
}

TEST_CASE("qpow")
{
    CHECK(qpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(qpow(Rational(5), 0) == 1);
    CHECK_THROWS(qpow(Rational(0), -1));
}

TEST_CASE("rational text round trip")
{
    for (const char* s : {"0", "-3", "7/11", "-22/7"})
        CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("bi-series products")
{
    const Box b4{4, 0};
    BiSeries p = BiSeries::one(b4), m = BiSeries::one(b4);
    p.add_term(2, 0, Scalar(1));
    m.add_term(2, 0, Scalar(-1));
    BiSeries want = BiSeries::one(b4);
    want.add_term(4, 0, Scalar(-1));
    CHECK(p * m == want);

    const Box b22{2, 2};
    const Rational al(2, 5), be(-3);
    BiSeries f = BiSeries::one(b22), g = BiSeries::one(b22);
    f.add_term(2, 0, Scalar(al));
    g.add_term(0, 2, Scalar(be));
    BiSeries w = BiSeries::one(b22);
    w.add_term(2, 0, Scalar(al));
    w.add_term(0, 2, Scalar(be));
    w.add_term(2, 2, Scalar(al * be));
    CHECK(f * g == w);
    CHECK(series_arith(f, g, Op::mul) == w);
}

TEST_CASE("terms outside the box are dropped")
{
    BiSeries s(Box{2, 0});
    s.add_term(4, 0, Scalar(1));
    CHECK(s.is_zero());
    CHECK_THROWS(s.add_term(-1, 0, Scalar(1)));
}

TEST_CASE("geometric inverse")
{
    const Rational a(3, 4);
    BiSeries w = BiSeries::one(Box{6, 0});
    w.add_term(2, 0, Scalar(a));
    w.add_term(4, 0, Scalar(a * a));
    w.add_term(6, 0, Scalar(a * a * a));
    CHECK(geom_inverse(Scalar(a), 2, 0, Box{6, 0}) == w);
    CHECK(geom_inverse(Scalar(0), 2, 0, Box{6, 0}) == BiSeries::one(Box{6, 0}));

    BiSeries w2 = BiSeries::one(Box{4, 4});
    w2.add_term(2, 2, Scalar(2));
    w2.add_term(4, 4, Scalar(4));
    CHECK(geom_inverse(Scalar(2), 2, 2, Box{4, 4}) == w2);
}

TEST_CASE("first difference and parity")
{
    BiSeries a = BiSeries::one(Box{4, 4}), b = a;
    b.add_term(2, 4, Scalar(1));
    auto d = a.first_difference(b);
    REQUIRE(d);
    CHECK((*d)[0] == 2);
    CHECK((*d)[1] == 4);
    CHECK(a.even_support());
    b.add_term(1, 0, Scalar(1));
    CHECK_FALSE(b.even_support());
    CHECK(b.truncated(Box{0, 0}) == BiSeries::one(Box{0, 0}));
}

TEST_CASE("Laurent3 carries negative exponents until conversion")
{
    const Laurent3 m = Laurent3::monomial(Rational(1, 2), -2, 0, -2);
    CHECK((m * m.pow(-1)) == Laurent3::constant(1));
    CHECK_THROWS(m.to_series(Box{4, 4}));
    const Laurent3 p = Laurent3::monomial(1, 2, 0, 0) + Laurent3::constant(1);
    BiSeries want = BiSeries::one(Box{4, 0});
    want.add_term(2, 0, Scalar(1));
    CHECK(p.to_series(Box{4, 0}) == want);
}
