#include "lz/identities.hpp"

#include <doctest.h>

using namespace lz;

namespace {

Rational chi(const GroupType& g, IVec c, const SatakePoint& p)
{
    return weyl_character_weights(HighestWeight{g, std::move(c)}, p);
}

}  // namespace

TEST_CASE("GL(2): (a1 + a2)^2 = chi(2,0) + chi(1,1)")
{
    const auto g = GroupType::gl(2);
    const SatakePoint p{g, {Rational(3, 2), -4}};
    const Rational s = Rational(3, 2) - 4;
    CHECK(s * s == chi(g, {2, 0}, p) + chi(g, {1, 1}, p));
    CHECK(check_schur_gl(2, 1, 1, p).pass);
}

TEST_CASE("GL identity cells")
{
    const auto g3 = GroupType::gl(3);
    CHECK(check_schur_gl(3, 2, 1, SatakePoint{g3, {2, 3, 5}}).pass);
    CHECK(check_schur_gl(3, 0, 4, SatakePoint{g3, {2, 3, 5}}).pass);
}

TEST_CASE("Sp(4): chi(1,0)^2 = 1 + chi(2,0) + chi(1,1)")
{
    const auto g = GroupType::sp(2);
    const SatakePoint p{g, {2, Rational(-1, 3)}};
    const Rational c = chi(g, {1, 0}, p);
    CHECK(c * c == 1 + chi(g, {2, 0}, p) + chi(g, {1, 1}, p));
    CHECK(check_schur_sp(2, 1, 1, p).pass);
    CHECK(check_schur_sp(2, 1, 2, p).pass);
}

TEST_CASE("Sp identity accepts GSp points")
{
    const SatakePoint p{GroupType::gsp(3), {5, 2, 3, Rational(1, 7)}};
    CHECK(check_schur_sp(3, 2, 2, p).pass);
    CHECK(normalize_gsp(p).group == GroupType::sp(3));
}

TEST_CASE("G-function")
{
    CHECK(g_function(0, 3) == Laurent3::constant(1));
    CHECK(g_function(-1, 3).is_zero());
    for (int N = 0; N <= 10; ++N) {
        const Rational c(7, 3);
        CHECK(g_function(N, c) == g_intermediate(N, c));
        CHECK(g_function(N, c).term_count() == std::size_t(N + 1));
    }
    CHECK(check_g_equivalence(10, std::vector<Rational>{1, Rational(7, 3), -2}).pass);
}

TEST_CASE("Cauchy cells")
{
    CHECK(check_cauchy(CauchyCase::a, 2, Box{12, 0}, 1, 3).pass);
    CHECK(check_cauchy(CauchyCase::d, 4, Box{4, 4}, 1, 3).pass);
    const auto r = check_cauchy(CauchyCase::c, 2, Box{6, 0}, 1, 3);
    CHECK(r.pass);
    CHECK(std::find(r.flags.begin(), r.flags.end(), "n6=0") != r.flags.end());
}
