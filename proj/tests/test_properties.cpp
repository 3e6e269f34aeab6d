// Seeded property checks: each case loops over many random inputs.

#include "lz/lfactor.hpp"
#include "lz/matgroups.hpp"
#include "lz/rootchar.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace lz;

namespace {

Scalar random_scalar(std::mt19937_64& g)
{
    std::uniform_int_distribution<int> c(-9, 9), e(-3, 3), k(0, 3);
    Scalar s;
    for (int i = k(g); i > 0; --i) {
        Rational r(c(g), 1 + long(g() % 5));
        r.canonicalize();
        s.add_term(e(g), r);
    }
    return s;
}

BiSeries random_series(std::mt19937_64& g, Box b)
{
    BiSeries s(b);
    for (int x = 0; x <= b.x; ++x)
        for (int y = 0; y <= b.y; ++y)
            if (g() % 3 == 0) s.add_term(x, y, random_scalar(g));
    return s;
}

}  // namespace

TEST_CASE("scalar ring axioms")
{
    std::mt19937_64 g(1);
    for (int t = 0; t < 200; ++t) {
        const Scalar a = random_scalar(g), b = random_scalar(g), c = random_scalar(g);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("series ring axioms in a box")
{
    std::mt19937_64 g(2);
    const Box b{4, 4};
    for (int t = 0; t < 40; ++t) {
        const BiSeries a = random_series(g, b), c = random_series(g, b), d = random_series(g, b);
        CHECK(a * c == c * a);
        CHECK((a * c) * d == a * (c * d));
        CHECK(a * (c + d) == a * c + a * d);
        CHECK((a * c).truncated(Box{2, 2}) == a.truncated(Box{2, 2}) * c.truncated(Box{2, 2}));
    }
}

TEST_CASE("geometric inverse inverts 1 - c m")
{
    std::mt19937_64 g(3);
    for (int t = 0; t < 50; ++t) {
        const Scalar c = random_scalar(g);
        const Box b{6, 6};
        BiSeries one_minus = BiSeries::one(b);
        one_minus.add_term(2, 2, -c);
        CHECK(one_minus * geom_inverse(c, 2, 2, b) == BiSeries::one(b));
    }
}

TEST_CASE("characters are Weyl invariant and dimension is the value at 1")
{
    std::mt19937_64 g(4);
    const auto gl4 = GroupType::gl(4);
    for (const auto& w : dominant_weights_up_to(gl4, 4)) {
        const SatakePoint p = random_satake(gl4, {}, g());
        SatakePoint q = p;
        std::reverse(q.values.begin(), q.values.end());
        CHECK(weyl_character_ratio(w, p) == weyl_character_ratio(w, q));
        CHECK(weyl_character_ratio(w, p) == weyl_character_weights(w, p));
        CHECK(weyl_character(w, unit_point(gl4)) == Scalar(weyl_dimension(w)));
    }
    const auto sp3 = GroupType::sp(3);
    for (const auto& w : dominant_weights_up_to(sp3, 3)) {
        SatakePoint p = random_satake(sp3, {}, g());
        SatakePoint q = p;
        q.values[0] = 1 / q.values[0];
        std::swap(q.values[1], q.values[2]);
        CHECK(weyl_character_ratio(w, p) == weyl_character_ratio(w, q));
    }
}

TEST_CASE("L-factor of a direct sum is the product")
{
    const auto gsp = GroupType::gsp(2), gl = GroupType::gl(3);
    for (std::uint64_t s = 1; s <= 10; ++s) {
        const auto pts = random_satake_joint({gsp, gl}, {}, s);
        const DualRep a = rep::standard(0, gsp, 2), b = rep::standard(1, gl, 2);
        DualRep sum{"a+b", a.weights};
        sum.weights.insert(sum.weights.end(), b.weights.begin(), b.weights.end());
        const Box box{8, 0};
        CHECK(l_factor(sum, pts, Var::x, box) == l_factor(a, pts, Var::x, box) * l_factor(b, pts, Var::x, box));
        CHECK(l_factor(sum, pts, Var::x, box).even_support());
    }
}

TEST_CASE("star is a multiplicative involution")
{
    for (long p : {0L, 101L}) {
        Sampler s(p, 7);
        for (int t = 0; t < 30; ++t) {
            const int n = 2 + t % 4;
            const Mat g = s.gl(n), h = s.gl(n);
            CHECK(upper_star(upper_star(g)) == g);
            CHECK(upper_star(g * h) == upper_star(g) * upper_star(h));
            CHECK(lower_star(g * h) == lower_star(g) * lower_star(h));
        }
    }
}

TEST_CASE("similitude is a character on sampled GSp and GSO elements")
{
    Sampler s(101, 8);
    for (int t = 0; t < 30; ++t) {
        const Mat a = s.gsp(6), b = s.gsp(6);
        const auto la = similitude(a, j_mat(6, 101)), lb = similitude(b, j_mat(6, 101));
        const auto lab = similitude(a * b, j_mat(6, 101));
        REQUIRE(la);
        REQUIRE(lb);
        REQUIRE(lab);
        CHECK(*lab == field_reduce(*la * *lb, 101));
        const Mat c = s.gso(8), d = s.gso(8);
        CHECK(group_membership(c * d, GroupSpec{GroupKind::GSO, 8}));
    }
}

TEST_CASE("every map is multiplicative and lands in its codomain")
{
    for (auto m : all_maps()) {
        const auto r = check_map_properties(m, 101, 15, 9);
        CHECK_MESSAGE(r.pass, to_string(m));
    }
}
