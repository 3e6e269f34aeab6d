#include "lz/rootchar.hpp"

#include <doctest.h>

#include <set>

using namespace lz;

namespace {

SatakePoint pt(GroupType g, std::vector<Rational> v) { return {g, std::move(v)}; }

std::set<IVec> coords_of(const std::vector<HighestWeight>& ws)
{
    std::set<IVec> s;
    for (const auto& w : ws) s.insert(w.coords);
    return s;
}

}  // namespace

TEST_CASE("dominant weight enumeration")
{
    CHECK(coords_of(dominant_weights_up_to(GroupType::gl(2), 1)) == std::set<IVec>{{0, 0}, {1, 0}});
    CHECK(coords_of(dominant_weights_up_to(GroupType::sp(2), 0)) == std::set<IVec>{{0, 0}});
    CHECK(coords_of(dominant_weights_up_to(GroupType::gl(3), 2)) ==
          std::set<IVec>{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {1, 1, 0}});
}

TEST_CASE("small characters")
{
    const auto gl2 = GroupType::gl(2);
    CHECK(weyl_character(HighestWeight{gl2, {1, 0}}, pt(gl2, {2, 3})) == Scalar(5));
    CHECK(weyl_character(HighestWeight{gl2, {1, 1}}, pt(gl2, {2, 3})) == Scalar(6));
    const auto gl3 = GroupType::gl(3);
    CHECK(weyl_character(HighestWeight{gl3, {0, 0, 0}}, pt(gl3, {2, 3, 5})) == Scalar(1));
}

TEST_CASE("Sp(4) (1,1) agrees with the weight sum")
{
    const auto sp4 = GroupType::sp(2);
    const HighestWeight w{sp4, {1, 1}};
    const SatakePoint p = pt(sp4, {2, 3});
    // 5-dim module: a^{+-1} b^{+-1} and 1
    const Rational a = 2, b = 3;
    const Rational want = a * b + a / b + b / a + 1 / (a * b) + 1;
    CHECK(weyl_character_ratio(w, p) == want);
    CHECK(weyl_character_weights(w, p) == want);
    CHECK(weyl_dimension(w) == 5);
}

TEST_CASE("dimensions")
{
    CHECK(weyl_dimension(HighestWeight{GroupType::sp(2), {1, 0}}) == 4);
    CHECK(weyl_dimension(HighestWeight{GroupType::spin_d(4), {0, 0, 0, 1}}) == 8);
    CHECK(weyl_dimension(HighestWeight{GroupType::spin_d(4), {1, 0, 0, 0}}) == 8);
    CHECK(weyl_dimension(HighestWeight{GroupType::gl(3), {2, 1, 0}}) == 8);
    CHECK(weyl_dimension(HighestWeight{GroupType::gspin_d(5), {0, 0, 0, 0, 1}}) == 16);
}

TEST_CASE("singular points fall back to the weight sum")
{
    const auto gl3 = GroupType::gl(3);
    const SatakePoint one = unit_point(gl3);
    CHECK_FALSE(is_regular(one));
    const HighestWeight w{gl3, {2, 1, 0}};
    CHECK_THROWS_AS(weyl_character_ratio(w, one), SingularPoint);
    CHECK(weyl_character(w, one) == Scalar(8));
}

TEST_CASE("random points")
{
    const auto p = random_satake(GroupType::gl(2), {}, 1);
    REQUIRE(p.values.size() == 2);
    CHECK(p.values[0] != 0);
    CHECK(p.values[1] != 0);
    CHECK(p.values[0] != p.values[1]);
    CHECK(random_satake(GroupType::gl(2), {}, 1).values == p.values);

    // GSp(4) with similitude 1
    MonomialConstraint sim{{{0, 0, 2}}, 1};
    const auto g = random_satake(GroupType::gsp(2), {sim}, 3);
    CHECK(central_value(g) == 1);

    // joint GSp(4) x GL(3), omega_tau omega_pi = 1
    MonomialConstraint c{{{0, 0, 2}, {1, 0, 1}, {1, 1, 1}, {1, 2, 1}}, 1};
    const auto pts = random_satake_joint({GroupType::gsp(2), GroupType::gl(3)}, {c}, 5);
    CHECK(central_value(pts[0]) * central_value(pts[1]) == 1);
}

TEST_CASE("Weyl group orders")
{
    CHECK(RootDatum::of(GroupType::gl(3)).weyl_order() == 6);
    CHECK(RootDatum::of(GroupType::sp(2)).weyl_order() == 8);
    CHECK(RootDatum::of(GroupType::spin_d(4)).weyl_order() == 192);
}
