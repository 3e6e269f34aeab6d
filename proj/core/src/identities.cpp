#include "lz/identities.hpp"

#include <algorithm>
#include <random>

namespace lz {

namespace {

json point_json(const SatakePoint& p)
{
    json v = json::array();
    for (const auto& x : p.values)
        v.push_back(to_string(x));
    return {{"group", p.group.name()}, {"values", v}};
}

IVec part(int n, std::initializer_list<int> head)
{
    IVec v(head);
    v.resize(n, 0);
    return v;
}

Rational random_nonzero(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(1, 13), s(0, 1);
    Rational r(d(rng), d(rng));
    r.canonicalize();
    return s(rng) ? Rational(-r) : r;
}

void absorb(IdentityReport& agg, const IdentityReport& cell, const json& where)
{
    if (!cell.pass && agg.pass) {
        agg.details["first_failure"] = where;
        agg.details["first_failure"]["cell"] = cell.params;
    }
    if (cell.mismatch)
        agg.fail(*cell.mismatch);
}

}  // namespace

IdentityReport check_schur_gl(int n, int k, int j, const SatakePoint& p)
{
    Stopwatch sw;
    IdentityReport r;
    r.id = "schur:gl";
    r.params = {{"n", n}, {"k", k}, {"j", j}, {"point", point_json(p)}};
    const GroupType g = GroupType::gl(n);
    if (!(p.group == g))
        throw std::invalid_argument("check_schur_gl: point is not on " + g.name());
    auto hw = [&](int a, int b) { return HighestWeight{g, part(n, {a, b}), 0}; };
    const int mx = std::max(k, j), mn = std::min(k, j);

    Rational lhs = weyl_character_ratio(hw(k, 0), p) * weyl_character_ratio(hw(j, 0), p);
    Rational rhs = 0, lhs_o = weyl_character_weights(hw(k, 0), p) * weyl_character_weights(hw(j, 0), p),
             rhs_o = 0;
    for (int t = 0; t <= mn; ++t) {
        rhs += weyl_character_ratio(hw(mx + t, mn - t), p);
        rhs_o += weyl_character_weights(hw(mx + t, mn - t), p);
    }
    if (auto m = scalar_mismatch("ratio", lhs, rhs))
        r.fail(*m);
    if (auto m = scalar_mismatch("oracle lhs", lhs, lhs_o))
        r.fail(*m);
    if (auto m = scalar_mismatch("oracle rhs", rhs, rhs_o))
        r.fail(*m);
    r.elapsed_ms = sw.ms();
    return r;
}

SatakePoint normalize_gsp(const SatakePoint& p)
{
    if (p.group.family == Family::Sp)
        return p;
    if (p.group.family != Family::GSp)
        throw std::invalid_argument("normalize_gsp: not a GSp point");
    return {GroupType::sp(p.group.n), std::vector<Rational>(p.values.begin() + 1, p.values.end())};
}

IdentityReport check_schur_sp(int n, int k, int j, const SatakePoint& p0)
{
    Stopwatch sw;
    IdentityReport r;
    r.id = "schur:sp";
    SatakePoint p = normalize_gsp(p0);
    r.params = {{"n", n}, {"k", k}, {"j", j}, {"point", point_json(p)}};
    const GroupType g = GroupType::sp(n);
    if (!(p.group == g))
        throw std::invalid_argument("check_schur_sp: point is not on " + g.name());
    if (k < 1 || j < 1)
        throw std::invalid_argument("check_schur_sp: need k, j >= 1");
    auto hw = [&](int a, int b) { return HighestWeight{g, part(n, {a, b}), 0}; };
    auto both = [&](int a, int b, Rational& ratio, Rational& oracle) {
        ratio += weyl_character_ratio(hw(a, b), p);
        oracle += weyl_character_weights(hw(a, b), p);
    };
    Rational lhs = weyl_character_ratio(hw(k, 0), p) * weyl_character_ratio(hw(j, 0), p);
    Rational lhs_o = weyl_character_weights(hw(k, 0), p) * weyl_character_weights(hw(j, 0), p);
    Rational rhs = weyl_character_ratio(hw(k - 1, 0), p) * weyl_character_ratio(hw(j - 1, 0), p);
    Rational rhs_o = weyl_character_weights(hw(k - 1, 0), p) * weyl_character_weights(hw(j - 1, 0), p);
    for (int q = 0; q <= std::min(k, j); ++q)
        both(k + j - q, q, rhs, rhs_o);
    if (auto m = scalar_mismatch("ratio", lhs, rhs))
        r.fail(*m);
    if (auto m = scalar_mismatch("oracle lhs", lhs, lhs_o))
        r.fail(*m);
    if (auto m = scalar_mismatch("oracle rhs", rhs, rhs_o))
        r.fail(*m);
    r.elapsed_ms = sw.ms();
    return r;
}

static IdentityReport sweep(bool sp, int n_lo, int n_hi, int k_lo, int k_hi, int seeds, std::uint64_t seed)
{
    Stopwatch sw;
    IdentityReport agg;
    agg.id = sp ? "schur:sp" : "schur:gl";
    agg.params = {{"n", {n_lo, n_hi}}, {"k", {k_lo, k_hi}}, {"j", {k_lo, k_hi}}, {"seeds", seeds}, {"seed", seed}};
    long cells = 0;
    for (int n = n_lo; n <= n_hi; ++n)
        for (int s = 0; s < seeds; ++s) {
            GroupType g = sp ? GroupType::gsp(n) : GroupType::gl(n);
            SatakePoint p = random_satake(g, {}, seed + 1000 * n + s);
            for (int k = k_lo; k <= k_hi; ++k)
                for (int j = k_lo; j <= k_hi; ++j) {
                    IdentityReport c = sp ? check_schur_sp(n, k, j, p) : check_schur_gl(n, k, j, p);
                    absorb(agg, c, {{"seed_index", s}});
                    ++cells;
                }
        }
    agg.details["cells"] = cells;
    agg.elapsed_ms = sw.ms();
    return agg;
}

IdentityReport sweep_schur_gl(int n_lo, int n_hi, int k_lo, int k_hi, int seeds, std::uint64_t seed)
{
    return sweep(false, n_lo, n_hi, k_lo, k_hi, seeds, seed);
}

IdentityReport sweep_schur_sp(int n_lo, int n_hi, int k_lo, int k_hi, int seeds, std::uint64_t seed)
{
    return sweep(true, n_lo, n_hi, k_lo, k_hi, seeds, seed);
}

// |a|^{1-s} chi^{-1}(a) (chi q^{1-2s})^r with |a| = q^{-N}, q = u^2, q^{-s} = M
Laurent3 g_term(int N, int r, const Rational& chi, const Exp3& m)
{
    const int e = 2 * r - N;  // power of M
    return Laurent3::monomial(qpow(chi, r - N), e * m[0], e * m[1], e * m[2] + 2 * r - 2 * N);
}

Laurent3 g_function(int N, const Rational& chi, const Exp3& m)
{
    if (sgn(chi) == 0)
        throw std::invalid_argument("g_function: chi must be nonzero");
    Laurent3 out;
    for (int r = 0; r <= N; ++r)
        out += g_term(N, r, chi, m);
    return out;
}

Laurent3 g_intermediate(int N, const Rational& chi, const Exp3& m)
{
    if (N < 0)
        return {};
    Laurent3 head = Laurent3::monomial(1, N * m[0], N * m[1], N * m[2]);
    Laurent3 step = Laurent3::monomial(qpow(chi, -1), -2 * m[0], -2 * m[1], -2 * m[2] - 2);
    Laurent3 sum;
    for (int k = 0; k <= N; ++k)
        sum += step.pow(k);
    return head * sum;
}

IdentityReport check_g_equivalence(int ord_max, const std::vector<Rational>& chis)
{
    Stopwatch sw;
    IdentityReport r;
    r.id = "gfunction";
    json cv = json::array();
    for (const auto& c : chis)
        cv.push_back(to_string(c));
    r.params = {{"ord_max", ord_max}, {"chi", cv}};
    long checked = 0;
    for (const auto& chi : chis) {
        if (!g_function(-1, chi).is_zero())
            r.fail(Mismatch{"ord=-1", g_function(-1, chi).str(), "0"});
        for (int N = 0; N <= ord_max; ++N) {
            Laurent3 a = g_function(N, chi), b = g_intermediate(N, chi);
            const std::string at = "ord=" + std::to_string(N) + " chi=" + to_string(chi);
            if (!(a == b))
                r.fail(Mismatch{at, a.str(), b.str()});
            if (a.term_count() != static_cast<std::size_t>(N + 1))
                r.fail(Mismatch{at + " term count", std::to_string(a.term_count()), std::to_string(N + 1)});
            ++checked;
        }
    }
    r.details["cells"] = checked;
    r.elapsed_ms = sw.ms();
    return r;
}

IdentityReport check_g_equivalence(int ord_max, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Rational> chis;
    while (chis.size() < 3) {
        Rational c = random_nonzero(rng);
        if (c != 1 && std::find(chis.begin(), chis.end(), c) == chis.end())
            chis.push_back(c);
    }
    IdentityReport r = check_g_equivalence(ord_max, chis);
    r.params["seed"] = seed;
    return r;
}

IdentityReport check_cauchy(CauchyCase c, int rank, Box box, int trials, std::uint64_t seed)
{
    Stopwatch sw;
    IdentityReport r;
    r.id = "cauchy:" + to_string(c);
    r.params = {{"rank", rank}, {"box", {box.x, box.y}}, {"trials", trials}, {"seed", seed}};
    if (c == CauchyCase::c && rank == 2)
        r.flag("n6=0");
    auto groups = cauchy_groups(c, rank);
    auto cons = cauchy_constraints(c);
    json pts_j = json::array();
    for (int t = 0; t < trials; ++t) {
        auto pts = random_satake_joint(groups, cons, seed + t);
        json pj = json::array();
        for (const auto& p : pts)
            pj.push_back(point_json(p));
        pts_j.push_back(pj);
        BiSeries lhs = cauchy_lhs(c, pts, box), rhs = cauchy_rhs(c, pts, box);
        if (!lhs.even_support() || !rhs.even_support())
            r.fail("odd-exponent support in trial " + std::to_string(t));
        if (auto m = series_mismatch(lhs, rhs)) {
            m->monomial += " (trial " + std::to_string(t) + ")";
            r.fail(*m);
        }
    }
    r.details["points"] = pts_j;
    r.details["even_support"] = r.pass;
    r.elapsed_ms = sw.ms();
    return r;
}

}  // namespace lz
