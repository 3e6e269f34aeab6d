#include "lz/zeta.hpp"

#include <doctest.h>

using namespace lz;

TEST_CASE("case ids")
{
    CHECK(make_zeta_case(ZetaKind::multi_gl, 0, 3).id() == "multi-gl(3)");
    CHECK(make_zeta_case(ZetaKind::glue_gl_gl, 2, 3).id() == "glue-gl-gl(2,3)");
    CHECK(make_zeta_case(ZetaKind::d5).id() == "d5");
    for (auto k : all_zeta_kinds()) CHECK(parse_zeta_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_zeta_kind("e8"), std::invalid_argument);
    CHECK_THROWS_AS(make_zeta_case(ZetaKind::gspin_gl_2n, 0, 3), std::invalid_argument);
}

TEST_CASE("the zero point is always a lattice point")
{
    for (auto k : all_zeta_kinds()) {
        const ZetaCase c = make_zeta_case(k);
        const auto pts = lattice_points(lattice_spec(c), Box{2, 2});
        REQUIRE_FALSE(pts.empty());
        CHECK(pts.front() == IVec(lattice_spec(c).nvars(), 0));
    }
}

TEST_CASE("constant terms")
{
    for (auto k : all_zeta_kinds()) {
        const ZetaCase c = make_zeta_case(k);
        const auto pts = random_satake_joint(zeta_groups(c), zeta_constraints(c), 2);
        const BiSeries z = evaluate_zeta(lattice_spec(c), pts, Box{0, 0});
        CHECK(z.at(0, 0) == Scalar(1));
    }
}

TEST_CASE("MultiGL(2) linear x coefficient matches the L-product")
{
    const ZetaCase c = make_zeta_case(ZetaKind::multi_gl, 0, 2);
    const auto pts = random_satake_joint(zeta_groups(c), zeta_constraints(c), 4);
    const Box b{2, 2};
    CHECK(evaluate_zeta(lattice_spec(c), pts, b) == expected_l_product(c, pts, b));
}

TEST_CASE("GSpinGL(3,3) to x-degree 4")
{
    const ZetaCase c = make_zeta_case(ZetaKind::gspin_gl_m3, 3, 0);
    const auto pts = random_satake_joint(zeta_groups(c), zeta_constraints(c), 9);
    CHECK(evaluate_zeta(lattice_spec(c), pts, Box{4, 0}) == expected_l_product(c, pts, Box{4, 0}));
}

TEST_CASE("verify_zeta cells")
{
    CHECK(verify_zeta(make_zeta_case(ZetaKind::multi_gl, 0, 3), Box{10, 10}, 3, 1).pass);
    CHECK(verify_zeta(make_zeta_case(ZetaKind::gspin_gl_2n, 0, 4), Box{8, 0}, 3, 1).pass);
    CHECK(verify_zeta(make_zeta_case(ZetaKind::glue_gl_gl, 2, 2), Box{8, 8}, 3, 1).pass);
}

TEST_CASE("verbatim displays that need corrections do not verify")
{
    const ZetaCase c = make_zeta_case(ZetaKind::glue_gl_gl, 2, 3);
    REQUIRE(has_verbatim(c));
    const auto pts = random_satake_joint(zeta_groups(c), zeta_constraints(c), 1);
    const Box b{8, 8};
    CHECK(evaluate_zeta(lattice_spec(c, false), pts, b) != expected_l_product(c, pts, b));
    CHECK(evaluate_zeta(lattice_spec(c, true), pts, b) == expected_l_product(c, pts, b));
}

TEST_CASE("lattice counts are stable")
{
    LatticeStats st;
    const ZetaCase c = make_zeta_case(ZetaKind::multi_gl, 0, 2);
    const auto pts = random_satake_joint(zeta_groups(c), zeta_constraints(c), 1);
    evaluate_zeta(lattice_spec(c), pts, Box{4, 4}, &st);
    CHECK(st.points == long(lattice_points(lattice_spec(c), Box{4, 4}).size()));
    CHECK(st.odd_terms == 0);
}
