#include "lz/lfactor.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lz;

namespace {

std::vector<Rational> values(const DualRep& r, const std::vector<SatakePoint>& pts)
{
    std::vector<Rational> v;
    for (const auto& w : rep_weights(r)) v.push_back(w(pts));
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Rational> sorted(std::vector<Rational> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("standard representations")
{
    const SatakePoint g3{GroupType::gl(3), {2, 3, 5}};
    CHECK(values(rep::standard(0, GroupType::gl(3), 1), {g3}) == sorted({2, 3, 5}));

    const Rational s = 2, b1 = 3, b2 = 7;
    const SatakePoint g4{GroupType::gsp(2), {s, b1, b2}};
    CHECK(values(rep::standard(0, GroupType::gsp(2), 1), {g4}) == sorted({s * b1, s * b2, s / b2, s / b1}));

    CHECK(rep::spin(0, GroupType::spin_d(4), 1).dim() == 8);
}

TEST_CASE("GL(1) factors")
{
    const SatakePoint a{GroupType::gl(1), {Rational(2, 3)}};
    BiSeries want = BiSeries::one(Box{4, 0});
    want.add_term(2, 0, Scalar(Rational(2, 3)));
    want.add_term(4, 0, Scalar(Rational(4, 9)));
    CHECK(l_factor(rep::standard(0, GroupType::gl(1), 1), {a}, Var::x, Box{4, 0}) == want);

    const SatakePoint b{GroupType::gl(1), {Rational(5)}};
    const auto t = rep::tensor(rep::standard(0, GroupType::gl(1), 2), rep::standard(1, GroupType::gl(1), 2));
    CHECK(l_factor(t, {a, b}, Var::x, Box{6, 0}) == geom_inverse(Scalar(Rational(10, 3)), 2, 0, Box{6, 0}));
}

TEST_CASE("GSp(4) x GL(2) linear coefficient is the sum of weight products")
{
    const SatakePoint t{GroupType::gsp(2), {2, 3, Rational(1, 7)}};
    const SatakePoint p{GroupType::gl(2), {Rational(-1, 2), 5}};
    const auto r = rep::tensor(rep::standard(0, GroupType::gsp(2), 2), rep::standard(1, GroupType::gl(2), 2));
    CHECK(r.dim() == 8);
    const BiSeries L = l_factor(r, {t, p}, Var::x, Box{2, 0});
    Rational trace_t = 0, trace_p = Rational(-1, 2) + 5;
    for (auto v : values(rep::standard(0, GroupType::gsp(2), 1), {t})) trace_t += v;
    CHECK(L.at(2, 0) == Scalar(trace_t * trace_p));
}

TEST_CASE("zeta(2s) is a series in x^4")
{
    const BiSeries z = zeta2(Var::x, Box{8, 0});
    CHECK(z == geom_inverse(Scalar(1), 4, 0, Box{8, 0}));
}

TEST_CASE("Cauchy expansions at low degree")
{
    const auto groups = cauchy_groups(CauchyCase::a, 2);
    const auto pts = random_satake_joint(groups, cauchy_constraints(CauchyCase::a), 11);
    const BiSeries rhs = cauchy_rhs(CauchyCase::a, pts, Box{2, 0});
    CHECK(rhs.at(0, 0) == Scalar(1));
    CHECK(rhs == cauchy_lhs(CauchyCase::a, pts, Box{2, 0}));

    for (auto c : {CauchyCase::a, CauchyCase::b, CauchyCase::c, CauchyCase::d, CauchyCase::e})
        CHECK(parse_cauchy_case(to_string(c)) == c);
    CHECK_THROWS(parse_cauchy_case("f"));
}
