// Frozen values. Character values were computed once with an independent
// sympy bialternant / signed-permutation Weyl sum; orbit sizes sum to 3^12.

#include "lz/matgroups.hpp"
#include "lz/lfactor.hpp"
#include "lz/whittaker.hpp"
#include "lz/zeta.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lz;

TEST_CASE("golden GL characters")
{
    const auto g3 = GroupType::gl(3), g2 = GroupType::gl(2), g4 = GroupType::gl(4);
    CHECK(weyl_character_ratio({g3, {2, 1, 0}}, {g3, {2, 3, 5}}) == 280);
    CHECK(weyl_character_ratio({g2, {3, 1}}, {g2, {Rational(1, 2), -3}}) == Rational(-93, 8));
    CHECK(weyl_character_ratio({g4, {2, 2, 0, 0}}, {g4, {2, 3, 5, 7}}) == 6002);
}

TEST_CASE("golden Sp characters")
{
    const auto s2 = GroupType::sp(2), s3 = GroupType::sp(3);
    CHECK(weyl_character_ratio({s2, {2, 1}}, {s2, {2, 3}}) == Rational(875, 18));
    CHECK(weyl_character_weights({s3, {3, 1, 1}}, {s3, {2, Rational(-1, 3), 5}}) == Rational(-28856009, 27000));
}

TEST_CASE("golden Whittaker value")
{
    const SatakePoint p{GroupType::gl(3), {2, 3, 5}};
    CHECK(cs_value({PadicGroup::GL, 3, {2, 1, 0}}, p) == Scalar::monomial(280, -4));
}

TEST_CASE("golden L-factor coefficient")
{
    // x^4 coefficient of L(s, std) on GL(2) is h_2(2, 3)
    const SatakePoint p{GroupType::gl(2), {2, 3}};
    CHECK(l_factor(rep::standard(0, GroupType::gl(2), 1), {p}, Var::x, Box{4, 0}).at(4, 0) == Scalar(19));
}

TEST_CASE("golden GSp4 x GL3 orbit sizes over F_3")
{
    const OrbitResult r = enumerate_orbits(OrbitAction::GSp4GL3_on_Mat1x12, 3);
    std::vector<long> sizes;
    for (const auto& o : r.orbits) sizes.push_back(o.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long>{1, 1040, 24960, 56160, 449280});
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0L) == 531441);
    CHECK(r.invariant_constant);
}
