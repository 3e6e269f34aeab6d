#include "lz/matgroups.hpp"

#include <doctest.h>

using namespace lz;

TEST_CASE("identity is in every single-matrix group with lambda 1")
{
    for (auto k : {GroupKind::GL, GroupKind::Sp, GroupKind::GSp, GroupKind::SO, GroupKind::GSO, GroupKind::GO}) {
        const auto lam = group_membership(Mat::identity(4), GroupSpec{k, 4});
        REQUIRE(lam);
        CHECK(*lam == 1);
    }
}

TEST_CASE("diag(2,1,1,1/2) is symplectic")
{
    const Mat g = Mat::diag({2, 1, 1, Rational(1, 2)});
    const auto lam = similitude(g, j_mat(4));
    REQUIRE(lam);
    CHECK(*lam == 1);
    CHECK(group_membership(g, GroupSpec{GroupKind::Sp, 4}));
}

TEST_CASE("explicit non-member of GSO(4) over F_7")
{
    const Mat g = Mat::from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 7);
    CHECK_FALSE(group_membership(g, GroupSpec{GroupKind::GSO, 4}));
    CHECK(group_membership(g, GroupSpec{GroupKind::GL, 4}));
}

TEST_CASE("basic matrix algebra")
{
    CHECK(kron(Mat::identity(2), Mat::identity(2)) == Mat::identity(4));
    const Mat a = Mat::from_rows({{1, 2}, {3, 4}});
    CHECK(a.det() == -2);
    CHECK(*a.inverse() * a == Mat::identity(2));
    CHECK(Mat::from_rows({{1, 2}, {2, 4}}).rank() == 1);
    CHECK_FALSE(Mat::from_rows({{1, 2}, {2, 4}}).inverse());
    // over F_5 the entries reduce
    CHECK(Mat::from_rows({{6, 7}}, 5) == Mat::from_rows({{1, 2}}, 5));
    CHECK(field_is_square(4, 7));
    CHECK_FALSE(field_is_square(3, 7));
    CHECK(field_is_square(Rational(9, 4), 0));
}

TEST_CASE("star involutions")
{
    Sampler s(0, 5);
    const Mat g = s.gl(3), h = s.gl(3);
    CHECK(upper_star(upper_star(g)) == g);
    CHECK(upper_star(g * h) == upper_star(g) * upper_star(h));
    CHECK(lower_star(g).det() * g.det() * g.det() == 1);
}

TEST_CASE("map values at the identity")
{
    const Mat i2 = Mat::identity(2);
    CHECK(apply_map(MapName::J_D5, {i2}) == Mat::identity(10));
    CHECK(apply_map(MapName::ext2, {Mat::identity(4), Mat::identity(4)}) == Mat::identity(24));
}

TEST_CASE("M2 matches the minor-by-minor oracle")
{
    Sampler s(0, 17);
    for (int t = 0; t < 3; ++t) {
        const Mat g = s.gl(4);
        CHECK(apply_map(MapName::M2, {g}) == minor_oracle_M2(g));
    }
}

TEST_CASE("rho lands in GSp(8) over F_7")
{
    Sampler s(7, 3);
    for (int t = 0; t < 100; ++t) {
        const Mat m = apply_map(MapName::rho, s.source(MapName::rho));
        CHECK(similitude(m, j_mat(8, 7)));
    }
}

TEST_CASE("J_D4 is multiplicative over Q")
{
    Sampler s(0, 23);
    for (int t = 0; t < 50; ++t) {
        const auto a = s.source(MapName::J_D4), b = s.source(MapName::J_D4);
        std::vector<Mat> ab;
        for (std::size_t i = 0; i < a.size(); ++i) ab.push_back(a[i] * b[i]);
        CHECK(apply_map(MapName::J_D4, ab) == apply_map(MapName::J_D4, a) * apply_map(MapName::J_D4, b));
    }
}

TEST_CASE("the printed J_D5 block leaves GSO(10)")
{
    Sampler s(101, 4);
    int outside = 0;
    for (int t = 0; t < 5; ++t) {
        const auto in = s.source(MapName::J_D5);
        if (!group_membership(apply_map(MapName::J_D5, in, 0, true), map_codomain(MapName::J_D5))) ++outside;
        CHECK(group_membership(apply_map(MapName::J_D5, in), map_codomain(MapName::J_D5)));
    }
    CHECK(outside > 0);
    CHECK_THROWS(apply_map(MapName::rho, s.source(MapName::rho), 0, true));
}

TEST_CASE("source shape is checked")
{
    CHECK_THROWS_AS(apply_map(MapName::kron, {Mat::identity(2)}), MapSourceError);
    for (auto m : all_maps()) CHECK(parse_map_name(to_string(m)) == m);
}

TEST_CASE("pinnings")
{
    CHECK(check_pinning(PinGroup::GSpin4, 101, 20, 1).pass);
    CHECK(check_pinning(PinGroup::GSpin6, 0, 5, 1).pass);
}

TEST_CASE("GL2 x GL2 orbits over F_3")
{
    const OrbitResult r = enumerate_orbits(OrbitAction::GL2GL2_on_Mat1x4, 3);
    REQUIRE(r.orbits.size() == 3);
    std::vector<long> sizes;
    for (const auto& o : r.orbits) sizes.push_back(o.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<long>{1, 32, 48});
    CHECK(r.invariant_constant);
    // the zero vector is alone
    for (const auto& o : r.orbits)
        if (std::all_of(o.rep.begin(), o.rep.end(), [](int x) { return x == 0; })) CHECK(o.size == 1);
}

TEST_CASE("xi invariant reads through the sign twist")
{
    std::vector<int> v(12, 0);
    CHECK(xi_invariant(v, 3) == std::vector<int>{0, 0});
    v[0] = 1;
    CHECK(xi_invariant(v, 3)[1] == 1);
}

TEST_CASE("double coset stabilizers at p = 5")
{
    CHECK(coset_rep(StabFamily::gsp4, 1, 5).rows() == 12);
    for (int r = 1; r <= stab_rep_count(StabFamily::gl4prime); ++r)
        CHECK(check_stabilizers(StabFamily::gl4prime, r, 5, 40, 1).pass);
    CHECK(parse_stab_family("gsp4") == StabFamily::gsp4);
}
