#include "lz/zeta.hpp"

#include "lz/identities.hpp"
#include "lz/lfactor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace lz {

// ---- case names

namespace {

struct KindInfo {
    ZetaKind kind;
    const char* name;
    bool has_m, has_n;
    int min_m, min_n;
};

constexpr KindInfo kKinds[] = {
    {ZetaKind::gspin_gl_m2, "gspin-gl2", true, false, 3, 0},
    {ZetaKind::gspin_gl_2n, "gspin5-gl", false, true, 0, 4},
    {ZetaKind::gspin_gl_m3, "gspin-gl3", true, false, 2, 0},
    {ZetaKind::multi_gl, "multi-gl", false, true, 0, 2},
    {ZetaKind::multi_gspin, "multi-gspin", false, true, 0, 2},
    {ZetaKind::d4, "d4", false, false, 0, 0},
    {ZetaKind::d5, "d5", false, false, 0, 0},
    {ZetaKind::glue_gl_gl, "glue-gl-gl", true, true, 2, 2},
    {ZetaKind::glue_gl_gspin, "glue-gl-gspin", true, true, 2, 2},
    {ZetaKind::glue_gspin_gspin, "glue-gspin-gspin", true, true, 2, 2},
};

const KindInfo& info(ZetaKind k)
{
    for (const auto& i : kKinds)
        if (i.kind == k)
            return i;
    throw std::logic_error("unknown zeta kind");
}

}  // namespace

std::string to_string(ZetaKind k) { return info(k).name; }

ZetaKind parse_zeta_kind(const std::string& s)
{
    for (const auto& i : kKinds)
        if (s == i.name)
            return i.kind;
    std::string all;
    for (const auto& i : kKinds)
        all += std::string(all.empty() ? "" : ", ") + i.name;
    throw std::invalid_argument("unknown zeta case '" + s + "' (one of " + all + ")");
}

std::vector<ZetaKind> all_zeta_kinds()
{
    std::vector<ZetaKind> v;
    for (const auto& i : kKinds)
        v.push_back(i.kind);
    return v;
}

ZetaCase make_zeta_case(ZetaKind k, int m, int n)
{
    const KindInfo& i = info(k);
    ZetaCase c{k, i.has_m ? (m ? m : i.min_m) : 0, i.has_n ? (n ? n : i.min_n) : 0};
    if (i.has_m && c.m < i.min_m)
        throw std::invalid_argument(std::string(i.name) + ": m must be >= " + std::to_string(i.min_m));
    if (i.has_n && c.n < i.min_n)
        throw std::invalid_argument(std::string(i.name) + ": n must be >= " + std::to_string(i.min_n));
    return c;
}

std::string ZetaCase::id() const
{
    const KindInfo& i = info(kind);
    std::string s = i.name;
    if (i.has_m && i.has_n)
        s += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    else if (i.has_m)
        s += "(" + std::to_string(m) + ")";
    else if (i.has_n)
        s += "(" + std::to_string(n) + ")";
    return s;
}

// ---- linear forms

int LinForm::operator()(const IVec& v) const
{
    long s = c;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long>(a[i]) * v[i];
    return static_cast<int>(s);
}

LinForm LinForm::operator+(const LinForm& o) const
{
    LinForm r = *this;
    r.a.resize(std::max(a.size(), o.a.size()), 0);
    for (std::size_t i = 0; i < o.a.size(); ++i)
        r.a[i] += o.a[i];
    r.c += o.c;
    return r;
}

LinForm LinForm::operator-(const LinForm& o) const { return *this + o * -1; }

LinForm LinForm::operator*(int s) const
{
    LinForm r = *this;
    for (int& x : r.a)
        x *= s;
    r.c *= s;
    return r;
}

namespace {

LinForm zero_form(std::size_t k) { return {IVec(k, 0), 0}; }

LinForm var_form(std::size_t k, std::size_t i)
{
    LinForm f = zero_form(k);
    f.a[i] = 1;
    return f;
}

// dominance of a cocharacter as inequalities
std::vector<LinForm> dominance(const WFactor& w)
{
    std::vector<LinForm> out;
    for (int i = 0; i + 1 < w.n; ++i)
        out.push_back(w.k[i] - w.k[i + 1]);
    if (w.group == PadicGroup::GSpinOdd)
        out.push_back(w.k[w.n - 1]);
    if (w.group == PadicGroup::GSO && w.n >= 2)
        out.push_back(w.k[w.n - 2] + w.k[w.n - 1] - w.k0);
    return out;
}

}  // namespace

std::vector<LinForm> LatticeSpec::constraints() const
{
    std::vector<LinForm> out = region;
    for (const auto& f : w)
        for (auto& d : dominance(f))
            out.push_back(d);
    if (g) {
        out.push_back(g->ord);
        out.push_back(var_form(nvars(), g->r_var));
        out.push_back(g->ord - var_form(nvars(), g->r_var));
    }
    for (auto& f : out)
        f.a.resize(nvars(), 0);
    return out;
}

std::array<LinForm, 3> LatticeSpec::degree_forms() const
{
    const std::size_t k = nvars();
    std::array<LinForm, 3> d{zero_form(k), zero_form(k), zero_form(k)};
    for (std::size_t i = 0; i < k; ++i)
        for (int t = 0; t < 3; ++t)
            d[t].a[i] += weight[i][t];
    if (g) {
        // g_term(N, r): M^{2r-N} u^{2r-2N}
        LinForm r = var_form(k, g->r_var), N = g->ord;
        N.a.resize(k, 0);
        LinForm e = r * 2 - N;
        for (int t = 0; t < 3; ++t)
            d[t] = d[t] + e * g->m[t];
        d[2] = d[2] + r * 2 - N * 2;
    }
    return d;
}

// ---- case table

namespace {

// forms over k variables, written as coefficient lists
struct Forms {
    std::size_t k;
    LinForm operator()(std::initializer_list<int> a) const
    {
        LinForm f{IVec(a), 0};
        f.a.resize(k, 0);
        return f;
    }
    LinForm zero() const { return zero_form(k); }
};

std::vector<LinForm> padded(std::vector<LinForm> v, int n, const Forms& F)
{
    v.resize(n, F.zero());
    return v;
}

// GSp4(F) diagonal (t1, t2, lambda/t2, lambda/t1) with valuations (f1, f2, f0)
// read as a GSpin5 cocharacter; linear mirror of gspin5_from_gsp4
WFactor gspin5_from_gsp4_forms(int point, const LinForm& f1, const LinForm& f2, const LinForm& f0)
{
    return {PadicGroup::GSpinOdd, 2, point, {f1 + f2 - f0, f1 - f2}, f0 - f1};
}

LatticeSpec spec_gspin_gl_2n(int n, bool corrected)
{
    Forms F{6};
    LatticeSpec s;
    s.vars = {"v1", "v2", "v3", "v4", "v5", "v6"};
    s.weight = {{0, 0, 4}, {0, 0, 2}, {2, 0, -(4 - n)}, {4, 0, -2 * (5 - n)}, {6, 0, -(18 - 3 * n)},
                {8, 0, corrected ? -(16 - 4 * n) : (16 - 4 * n)}};
    if (corrected)
        s.corrections.push_back("a6 exponent: |a6|^{4s-(8-2n)} (displayed sign of the n-term flipped; "
                                "identical at n = 4)");
    s.w.push_back(gspin5_from_gsp4_forms(0, F({1, 0, 0, 0, 0, 2}), F({0, 1, 0, 0, 0, 2}), F({0, 0, 1, 2, 3, 4})));
    s.w.push_back({PadicGroup::GL, n, 1,
                   padded({F({0, 0, 1, 1, 1, 1}), F({0, 0, 0, 1, 1, 1}), F({0, 0, 0, 0, 1, 1}), F({0, 0, 0, 0, 0, 1})},
                          n, F),
                   F.zero()});
    s.region = {F({0, 0, 0, 0, 0, 1}),  F({-1, 0, 1, 2, 2, 0}), F({0, -1, 1, 1, 2, 0}), F({1, 0, -1, -1, -2, 0}),
                F({0, 1, -1, -1, -1, 0}), F({0, 1, 0, -1, -2, 0}), F({1, 0, 0, -1, -2, 0})};
    s.notes.push_back("GSp4 torus read on GSpin5 through e1-e2 <-> t2^2/lambda, e2 <-> t1/t2");
    return s;
}

LatticeSpec spec_gspin_gl_m3(int m, bool corrected)
{
    Forms F{6};
    LatticeSpec s;
    s.vars = {"v1", "v2", "v3", "v4", "v5", "v6"};
    s.weight = {{-4, 0, 2}, {-8, 0, 2}, {6, 0, 2 * m - 1}, {12, 0, 4 * m - 4},
                {corrected ? 18 : 12, 0, 6 * m - 9}, {12, 0, 0}};
    std::vector<LinForm> k = {F({0, 0, 1, 1, 1, 0}), F({0, 0, 0, 1, 1, 0}), F({0, 0, 0, 0, 1, 0})};
    if (m == 2) {
        k.pop_back();
        s.region.push_back(F({0, 0, 0, 0, 1, 0}));
        s.region.push_back(F({0, 0, 0, 0, -1, 0}));
        s.notes.push_back("m = 2: a5 is absent (v5 = 0)");
    }
    s.w.push_back({PadicGroup::GSpinOdd, m, 0, padded(k, m, F), F({0, 0, 0, 0, 0, 1})});
    s.w.push_back({PadicGroup::GL, 3, 1, {F({1, 1, 0, 0, 0, 0}), F({0, 1, 0, 0, 0, 0}), F.zero()}, F.zero()});
    s.region.push_back(F({-1, -1, 1, 1, 1, 1}));
    s.region.push_back(F({0, -1, 0, 1, 1, 1}));
    s.region.push_back(F({0, 0, 0, 0, 1, 1}));
    s.region.push_back(corrected ? F({1, 1, 0, -1, -1, -1}) : F({1, 1, 0, -1, -1, 1}));
    s.region.push_back(F({0, 1, 0, 0, -1, -1}));
    s.region.push_back(F({1, 1, 0, 0, -1, -1}));
    if (corrected) {
        s.corrections.push_back("a5 exponent: |a5|^{9s+...} in place of the displayed 6s");
        s.corrections.push_back("fourth region inequality: |a1a2a4^-1a5^-1a6^-1| <= 1 (displayed a6 exponent +1)");
    }
    s.notes.push_back("central characters tied by omega_tau omega_pi = 1");
    return s;
}

LatticeSpec spec_gspin_gl_m2(int m)
{
    Forms F{3};
    LatticeSpec s;
    s.derived = true;
    s.vars = {"v1", "v2", "v3"};
    s.weight = {{2, 0, 2 * m}, {4, 0, 4 * m - 4}, {4, 0, 0}};
    s.w.push_back({PadicGroup::GSpinOdd, m, 0, padded({F({1, 1, 0}), F({0, 1, 0})}, m, F), F({0, 0, 1})});
    s.w.push_back({PadicGroup::GL, 2, 1, {F({1, 1, 1}), F({0, 1, 1})}, F.zero()});
    s.region = {F({0, 0, 1})};
    s.notes.push_back("reduction derived by the Iwasawa recipe; no displayed lattice sum");
    return s;
}

LatticeSpec spec_multi_gl(int n, bool corrected)
{
    Forms F{3};
    LatticeSpec s;
    s.vars = {"v1", "v2", "r"};
    s.weight = {{1, 1, n}, {2, 2, 2 * n - 4}, {0, 0, 0}};
    s.w.push_back({PadicGroup::GL, n, 0, padded({F({1, 1, 0}), F({0, 1, 0})}, n, F), F.zero()});
    s.twists = {{1, 0, F({1, 1, 0})}, {2, 0, F({0, 1, 0})}};
    s.g = GFactor{F({1, 0, 0}), 2, 1, 0, 2, 0, {-1, 1, -1}};
    if (n == 2 && corrected) {
        s.region.push_back(F({0, 1, 0}));
        s.corrections.push_back("n = 2: v2 = ord(a2) >= 0 imposed (dominance leaves it two-sided)");
    }
    s.notes.push_back("G(a1, (w-s+1)/2, chi mu^-1) summed over r");
    return s;
}

LatticeSpec spec_multi_gspin(int n)
{
    Forms F{4};
    LatticeSpec s;
    s.derived = true;
    s.vars = {"v0", "v1", "v2", "r"};
    s.weight = {{2, 2, 0}, {1, 1, 2 * n}, {2, 2, 4 * n - 4}, {0, 0, 0}};
    s.w.push_back({PadicGroup::GSpinOdd, n, 0, padded({F({0, 1, 1, 0}), F({0, 0, 1, 0})}, n, F), F({1, 0, 0, 0})});
    s.twists = {{1, 0, F({1, 1, 1, 0})}, {2, 0, F({1, 0, 1, 0})}};
    s.g = GFactor{F({0, 1, 0, 0}), 3, 1, 0, 2, 0, {-1, 1, -1}};
    s.region = {F({1, 0, 0, 0})};
    s.notes.push_back("reduction derived by the Iwasawa recipe; no displayed lattice sum");
    return s;
}

LatticeSpec spec_d5(bool corrected)
{
    Forms F{2};
    LatticeSpec s;
    s.vars = {"v1", "v2"};
    s.weight = {{2, 0, corrected ? 10 : 9}, {4, 0, corrected ? 8 : 6}};
    if (corrected)
        s.corrections.push_back("exponents |a1|^{s-5}|a2|^{2s-4} in place of the displayed |a1|^{s-9/2}|a2|^{2s-3}");
    s.w.push_back({PadicGroup::GSO, 5, 0, {F({1, 2}), F({1, 1}), F({1, 1}), F({1, 1}), F({1, 1})}, F({1, 2})});
    s.notes.push_back("W at t_(v1,v2);GSO10: weight (v2,0,0,0,v1) twisted by omega^v2");
    return s;
}

LatticeSpec spec_d4()
{
    Forms F{3};
    LatticeSpec s;
    s.vars = {"v1", "v2", "v3"};
    s.weight = {{2, -2, 0}, {0, 2, 6}, {0, 2, 0}};
    s.zeta_s = s.zeta_w = true;
    s.w.push_back({PadicGroup::GSO, 4, 0, {F({0, 1, 0}), F({1, 0, 0}), F({1, 0, 0}), F({1, 0, -1})}, F({1, 0, 0})});
    s.corrections.push_back("torus argument diag(a2, a1, a1, a1/a3, a3, 1, 1, a1/a2) (the displayed diagonal "
                            "has seven entries)");
    s.notes.push_back("dictionary re-derived by matching low-degree coefficients; L(s, Spin) L(w, std)");
    return s;
}

struct GlueBlock {
    // GL(2) weight (l1, l2) seen by the middle factor
    LinForm l1, l2;
};

LatticeSpec spec_glue_gl_gl(int m, int n, bool corrected)
{
    Forms F{5};
    LatticeSpec s;
    s.vars = {"v1", "v2", "v3", "v4", "v5"};
    s.weight = {{0, 2, m}, {0, 4, corrected ? 2 * (m - 1) : 2 * m}, {0, 0, 2}, {2, 0, n},
                {4, 0, corrected ? 2 * (n - 1) : 2 * n}};
    if (corrected) {
        s.corrections.push_back("a2 exponent |a2|^{2w-(m-1)} in place of 2w-m");
        s.corrections.push_back("a5 exponent |a5|^{2s-(n-1)} in place of 2s-n");
    }
    s.w.push_back({PadicGroup::GL, m, 0, padded({F({1, 1, 0, 0, 0}), F({0, 1, 0, 0, 0})}, m, F), F.zero()});
    s.w.push_back({PadicGroup::GL, 2, 1, {F({1, 2, 1, 1, 2}), F({0, 0, -1, 0, 0})}, F.zero()});
    s.w.push_back({PadicGroup::GL, n, 2, padded({F({0, 0, 0, 1, 1}), F({0, 0, 0, 0, 1})}, n, F), F.zero()});
    s.region = {F({0, 1, 0, 0, 0}), F({0, 0, 0, 0, 1}), F({0, -1, -1, 0, -1}), F({0, 1, 1, 1, 1}),
                F({1, 1, 1, 0, 1})};
    return s;
}

// Glued cases with at least one GSpin side. Variable layout:
//   w-side block, middle v3, s-side block.
// GL block (v1, v2): lambda = (v1+v2, v2), |a|-exponents w - m/2, 2w - (m-1).
// GSpin block (b1, b2, b3): GL2 weight (b1+b2+b3, b2+b3), GSpin (b3; b1+b2, b2),
//   exponents s - n, 2s - (2n-1), 2s - 1 on the relevant side.
LatticeSpec spec_glue_gspin(bool gspin_w, int m, int n)
{
    const std::size_t kw = gspin_w ? 3 : 2, k = kw + 1 + 3;
    Forms F{k};
    LatticeSpec s;
    s.derived = true;
    auto v = [&](std::size_t i) { return var_form(k, i); };
    LinForm l1, l2;
    if (gspin_w) {
        s.vars = {"a1", "a2", "a3"};
        s.weight = {{0, 2, 2 * m}, {0, 4, 2 * (2 * m - 1)}, {0, 4, 2}};
        l1 = v(0) + v(1) + v(2);
        l2 = v(1) + v(2);
        s.w.push_back({PadicGroup::GSpinOdd, m, 0, padded({v(0) + v(1), v(1)}, m, F), v(2)});
        s.region.push_back(v(2));
    } else {
        s.vars = {"v1", "v2"};
        s.weight = {{0, 2, m}, {0, 4, 2 * (m - 1)}};
        l1 = v(0) + v(1);
        l2 = v(1);
        s.w.push_back({PadicGroup::GL, m, 0, padded({v(0) + v(1), v(1)}, m, F), F.zero()});
        s.region.push_back(v(1));
    }
    const std::size_t mid = kw, b = kw + 1;
    s.vars.push_back("v3");
    s.weight.push_back({0, 0, 2});
    for (const char* nm : {"b1", "b2", "b3"})
        s.vars.push_back(nm);
    s.weight.push_back({2, 0, 2 * n});
    s.weight.push_back({4, 0, 2 * (2 * n - 1)});
    s.weight.push_back({4, 0, 2});
    LinForm m1 = v(b) + v(b + 1) + v(b + 2), m2 = v(b + 1) + v(b + 2);
    s.w.push_back({PadicGroup::GL, 2, 1, {l1 + l2 + m1 + m2 + v(mid), v(mid) * -1}, F.zero()});
    s.w.push_back({PadicGroup::GSpinOdd, n, 2, padded({v(b) + v(b + 1), v(b + 1)}, n, F), v(b + 2)});
    s.region.push_back(v(b + 2));
    LinForm t = (l2 + m2 + v(mid)) * -1;
    s.region.push_back(t);
    s.region.push_back(l1 - l2 - t);
    s.region.push_back(m1 - m2 - t);
    s.notes.push_back("reduction derived by the Iwasawa recipe; no displayed lattice sum");
    return s;
}

}  // namespace

LatticeSpec lattice_spec(const ZetaCase& c, bool corrected)
{
    LatticeSpec s;
    switch (c.kind) {
    case ZetaKind::gspin_gl_m2:
        s = spec_gspin_gl_m2(c.m);
        break;
    case ZetaKind::gspin_gl_2n:
        s = spec_gspin_gl_2n(c.n, corrected);
        break;
    case ZetaKind::gspin_gl_m3:
        s = spec_gspin_gl_m3(c.m, corrected);
        break;
    case ZetaKind::multi_gl:
        s = spec_multi_gl(c.n, corrected);
        break;
    case ZetaKind::multi_gspin:
        s = spec_multi_gspin(c.n);
        break;
    case ZetaKind::d4:
        s = spec_d4();
        break;
    case ZetaKind::d5:
        s = spec_d5(corrected);
        break;
    case ZetaKind::glue_gl_gl:
        s = spec_glue_gl_gl(c.m, c.n, corrected);
        break;
    case ZetaKind::glue_gl_gspin:
        s = spec_glue_gspin(false, c.m, c.n);
        break;
    case ZetaKind::glue_gspin_gspin:
        s = spec_glue_gspin(true, c.m, c.n);
        break;
    }
    s.id = c.id();
    for (auto& f : s.region)
        f.a.resize(s.nvars(), 0);
    return s;
}

bool has_verbatim(const ZetaCase& c)
{
    switch (c.kind) {
    case ZetaKind::gspin_gl_2n:
    case ZetaKind::gspin_gl_m3:
    case ZetaKind::multi_gl:
    case ZetaKind::d5:
    case ZetaKind::glue_gl_gl:
        return true;
    default:
        return false;
    }
}

std::vector<GroupType> zeta_groups(const ZetaCase& c)
{
    switch (c.kind) {
    case ZetaKind::gspin_gl_m2:
        return {GroupType::gsp(c.m), GroupType::gl(2)};
    case ZetaKind::gspin_gl_2n:
        return {GroupType::gsp(2), GroupType::gl(c.n)};
    case ZetaKind::gspin_gl_m3:
        return {GroupType::gsp(c.m), GroupType::gl(3)};
    case ZetaKind::multi_gl:
        return {GroupType::gl(c.n), GroupType::gl(1), GroupType::gl(1)};
    case ZetaKind::multi_gspin:
        return {GroupType::gsp(c.n), GroupType::gl(1), GroupType::gl(1)};
    case ZetaKind::d4:
        return {GroupType::spin_d(4)};
    case ZetaKind::d5:
        return {GroupType::gspin_d(5)};
    case ZetaKind::glue_gl_gl:
        return {GroupType::gl(c.m), GroupType::gl(2), GroupType::gl(c.n)};
    case ZetaKind::glue_gl_gspin:
        return {GroupType::gl(c.m), GroupType::gl(2), GroupType::gsp(c.n)};
    case ZetaKind::glue_gspin_gspin:
        return {GroupType::gsp(c.m), GroupType::gl(2), GroupType::gsp(c.n)};
    }
    return {};
}

std::vector<MonomialConstraint> zeta_constraints(const ZetaCase& c)
{
    if (c.kind == ZetaKind::gspin_gl_m3) {
        // omega_tau omega_pi = 1: sigma^2 alpha1 alpha2 alpha3 = 1
        MonomialConstraint k;
        k.terms = {{0, 0, 2}, {1, 0, 1}, {1, 1, 1}, {1, 2, 1}};
        return {k};
    }
    if (c.kind == ZetaKind::d4) {
        MonomialConstraint k;
        k.terms = {{0, 0, 2}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}};
        return {k};
    }
    return {};
}

// ---- enumeration

namespace {

using Row = std::vector<long>;  // coefficients then constant: a.v + c >= 0

void normalize(Row& r)
{
    long g = 0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        g = std::gcd(g, std::abs(r[i]));
    if (g > 1) {
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            r[i] /= g;
        // integer points only: tighten the constant
        long c = r.back();
        r.back() = c >= 0 ? c / g : -((-c + g - 1) / g);
    }
}

std::vector<Row> eliminate(const std::vector<Row>& rows, std::size_t var)
{
    std::set<Row> out;
    std::vector<const Row*> pos, neg;
    for (const auto& r : rows) {
        if (r[var] > 0)
            pos.push_back(&r);
        else if (r[var] < 0)
            neg.push_back(&r);
        else
            out.insert(r);
    }
    for (const Row* p : pos)
        for (const Row* q : neg) {
            Row r(p->size());
            const long a = (*p)[var], b = -(*q)[var];
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] = b * (*p)[i] + a * (*q)[i];
            normalize(r);
            out.insert(r);
        }
    return {out.begin(), out.end()};
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

std::vector<IVec> lattice_points(const LatticeSpec& s, Box box)
{
    const std::size_t k = s.nvars();
    std::vector<LinForm> cons = s.constraints();
    auto deg = s.degree_forms();
    cons.push_back(LinForm{IVec(k, 0), box.x} - deg[0]);
    cons.push_back(LinForm{IVec(k, 0), box.y} - deg[1]);

    std::vector<std::vector<Row>> level(k);
    for (const auto& f : cons) {
        Row r(k + 1);
        for (std::size_t i = 0; i < k; ++i)
            r[i] = f.a[i];
        r[k] = f.c;
        normalize(r);
        level[k - 1].push_back(r);
    }
    for (std::size_t i = k - 1; i > 0; --i)
        level[i - 1] = eliminate(level[i], i);
    for (const auto& r : level[0])
        if (r[0] == 0 && r[k] < 0)
            return {};

    std::vector<IVec> out;
    IVec v(k, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == k) {
            for (const auto& f : cons)
                if (f(v) < 0)
                    throw std::logic_error(s.id + ": enumeration produced a point outside the cone");
            out.push_back(v);
            return;
        }
        std::optional<long> lo, hi;
        for (const auto& r : level[i]) {
            long rest = r[k];
            for (std::size_t j = 0; j < i; ++j)
                rest += r[j] * v[j];
            if (r[i] > 0) {
                long b = -floor_div(rest, r[i]);
                lo = lo ? std::max(*lo, b) : b;
            } else if (r[i] < 0) {
                long b = floor_div(rest, -r[i]);
                hi = hi ? std::min(*hi, b) : b;
            } else if (rest < 0) {
                return;
            }
        }
        if (!lo || !hi)
            throw UnboundedCone(s.id + ": variable " + s.vars[i] + " has no " + (lo ? "upper" : "lower") +
                                " bound inside the degree box (zero-degree direction in the cone)");
        for (long x = *lo; x <= *hi; ++x) {
            v[i] = static_cast<int>(x);
            walk(i + 1);
        }
        v[i] = 0;
    };
    walk(0);
    return out;
}

// ---- evaluation

namespace {

struct Evaluator {
    const LatticeSpec& s;
    const std::vector<SatakePoint>& pts;
    std::vector<CharTable> tables;
    std::array<LinForm, 3> deg;

    Evaluator(const LatticeSpec& spec, const std::vector<SatakePoint>& p) : s(spec), pts(p), deg(spec.degree_forms())
    {
        for (const auto& w : s.w) {
            if (!point_matches(pts.at(w.point).group, w.group, w.n))
                throw std::invalid_argument(s.id + ": point " + std::to_string(w.point) + " is " +
                                            pts[w.point].group.name() + ", expected dual of the W factor");
            tables.emplace_back(pts[w.point]);
        }
    }

    // coefficient and (x, y, u) exponents of one lattice point; nullopt when a W vanishes
    std::optional<std::pair<Rational, Exp3>> term(const IVec& v)
    {
        Rational c = 1;
        Exp3 e{0, 0, 0};
        for (std::size_t i = 0; i < s.nvars(); ++i)
            for (int t = 0; t < 3; ++t)
                e[t] += v[i] * s.weight[i][t];
        for (std::size_t i = 0; i < s.w.size(); ++i) {
            const WFactor& w = s.w[i];
            Cocharacter ch{w.group, w.n, IVec(w.n), w.k0(v)};
            for (int j = 0; j < w.n; ++j)
                ch.k[j] = w.k[j](v);
            CsParts p = cs_parts(ch, tables[i]);
            if (p.zero)
                return std::nullopt;
            c *= p.value;
            e[2] += p.uexp;
        }
        for (const auto& t : s.twists)
            c *= qpow(pts.at(t.point).values.at(t.gen), t.e(v));
        if (s.g) {
            const GFactor& g = *s.g;
            Rational chi = pts.at(g.chi_point).values.at(g.chi_gen) / pts.at(g.mu_point).values.at(g.mu_gen);
            Laurent3 gt = g_term(g.ord(v), v[g.r_var], chi, g.m);
            const auto& [ge, gc] = *gt.terms().begin();
            c *= gc;
            for (int t = 0; t < 3; ++t)
                e[t] += ge[t];
        }
        // the W factors only add u-powers, so x and y match the degree forms
        if (e[0] != deg[0](v) || e[1] != deg[1](v))
            throw std::logic_error(s.id + ": degree forms disagree with the assembled term");
        if (e[0] < 0 || e[1] < 0)
            throw std::runtime_error(s.id + ": negative x/y exponent at a lattice point");
        return std::make_pair(c, e);
    }
};

BiSeries zeta_prefactors(const LatticeSpec& s, Box box)
{
    BiSeries z = BiSeries::one(box);
    if (s.zeta_s)
        z = z * zeta2(Var::x, box);
    if (s.zeta_w)
        z = z * zeta2(Var::y, box);
    return z;
}

std::string vec_text(const IVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

BiSeries evaluate_zeta(const LatticeSpec& s, const std::vector<SatakePoint>& pts, Box box, LatticeStats* stats)
{
    Evaluator ev(s, pts);
    BiSeries out(box);
    LatticeStats st;
    for (const IVec& v : lattice_points(s, box)) {
        ++st.points;
        auto t = ev.term(v);
        if (!t)
            continue;
        const auto& [c, e] = *t;
        if ((e[0] | e[1]) & 1)
            ++st.odd_terms;
        out.add_term(e[0], e[1], e[2], c);
    }
    if (stats)
        *stats = st;
    if (s.zeta_s || s.zeta_w)
        out = out * zeta_prefactors(s, box);
    return out;
}

std::string dump_contributions(const LatticeSpec& s, const std::vector<SatakePoint>& pts, Box box)
{
    Evaluator ev(s, pts);
    std::ostringstream os;
    for (const IVec& v : lattice_points(s, box)) {
        auto t = ev.term(v);
        os << vec_text(v) << "  ";
        if (!t)
            os << "0\n";
        else
            os << monomial_text(t->first, t->second[0], t->second[1], t->second[2]) << "\n";
    }
    return os.str();
}

BiSeries expected_l_product(const ZetaCase& c, const std::vector<SatakePoint>& pts, Box box)
{
    const int ns = static_cast<int>(pts.size());
    auto std_at = [&](int i) { return rep::standard(i, pts.at(i).group, ns); };
    switch (c.kind) {
    case ZetaKind::gspin_gl_m2:
    case ZetaKind::gspin_gl_2n:
    case ZetaKind::gspin_gl_m3:
        return l_factor(rep::tensor(std_at(0), std_at(1)), pts, Var::x, box);
    case ZetaKind::multi_gl:
    case ZetaKind::multi_gspin:
        return l_factor(rep::twist(std_at(0), 2), pts, Var::x, box) *
               l_factor(rep::twist(std_at(0), 1), pts, Var::y, box);
    case ZetaKind::d4:
        return l_factor(rep::spin(0, pts[0].group, ns), pts, Var::x, box) * l_factor(std_at(0), pts, Var::y, box);
    case ZetaKind::d5:
        return l_factor(rep::spin(0, pts[0].group, ns), pts, Var::x, box);
    case ZetaKind::glue_gl_gl:
    case ZetaKind::glue_gl_gspin:
    case ZetaKind::glue_gspin_gspin:
        return l_factor(rep::tensor(std_at(0), std_at(1)), pts, Var::y, box) *
               l_factor(rep::tensor(std_at(1), std_at(2)), pts, Var::x, box);
    }
    return BiSeries(box);
}

std::string expected_label(const ZetaCase& c)
{
    switch (c.kind) {
    case ZetaKind::gspin_gl_m2:
    case ZetaKind::gspin_gl_2n:
    case ZetaKind::gspin_gl_m3:
        return "L(s, tau x pi)";
    case ZetaKind::multi_gl:
    case ZetaKind::multi_gspin:
        return "L(s, pi x mu) L(w, pi x chi)";
    case ZetaKind::d4:
        return "L(s, sigma, Spin) L(w, sigma, std)";
    case ZetaKind::d5:
        return "L(s, sigma, Spin)";
    case ZetaKind::glue_gl_gl:
    case ZetaKind::glue_gl_gspin:
    case ZetaKind::glue_gspin_gspin:
        return "L(w, pi_m x pi_2) L(s, pi_2 x pi_n)";
    }
    return "";
}

IdentityReport verify_zeta(const ZetaCase& c, Box box, int trials, std::uint64_t seed)
{
    Stopwatch sw;
    IdentityReport r;
    r.id = "zeta:" + c.id();
    r.params = {{"case", to_string(c.kind)}, {"box", {box.x, box.y}}, {"trials", trials}, {"seed", seed}};
    if (c.m)
        r.params["m"] = c.m;
    if (c.n)
        r.params["n"] = c.n;

    LatticeSpec spec = lattice_spec(c, true);
    if (spec.derived)
        r.flag("derived-reduction");
    if (!spec.corrections.empty())
        r.flag("corrected");
    r.flag("even-support-asserted");
    r.details["expected"] = expected_label(c);
    r.details["corrections"] = spec.corrections;
    r.details["notes"] = spec.notes;
    r.details["omega_knob"] = "off";

    auto groups = zeta_groups(c);
    auto cons = zeta_constraints(c);
    LatticeStats st;
    long odd = 0;
    json verbatim = json::object();
    bool run_verbatim = has_verbatim(c) && !spec.corrections.empty();
    LatticeSpec vspec = run_verbatim ? lattice_spec(c, false) : spec;
    bool verbatim_pass = true;

    for (int t = 0; t < trials; ++t) {
        auto pts = random_satake_joint(groups, cons, seed + t);
        BiSeries lhs = evaluate_zeta(spec, pts, box, &st);
        BiSeries rhs = expected_l_product(c, pts, box);
        odd += st.odd_terms;
        const std::string tag = " (trial " + std::to_string(t) + ")";
        if (lhs.at(0, 0) != rhs.at(0, 0))
            r.fail(Mismatch{"1" + tag, lhs.at(0, 0).str(), rhs.at(0, 0).str()});
        if (!lhs.even_support())
            r.fail("lattice sum has odd-exponent support" + tag);
        if (!rhs.even_support())
            r.fail("L-product has odd-exponent support" + tag);
        if (auto m = series_mismatch(lhs, rhs)) {
            m->monomial += tag;
            r.fail(*m);
        }
        if (run_verbatim && verbatim_pass) {
            try {
                BiSeries v = evaluate_zeta(vspec, pts, box);
                if (auto m = series_mismatch(v, rhs)) {
                    verbatim_pass = false;
                    verbatim["mismatch"] = {{"monomial", m->monomial + tag}, {"lhs", m->lhs}, {"rhs", m->rhs}};
                }
            } catch (const std::exception& e) {
                verbatim_pass = false;
                verbatim["error"] = e.what();
            }
        }
    }
    r.details["lattice_points"] = st.points;
    r.details["odd_terms_cancelled"] = odd;
    if (run_verbatim) {
        verbatim["pass"] = verbatim_pass;
        r.details["verbatim"] = verbatim;
    } else {
        r.details["verbatim"] = has_verbatim(c) ? json{{"pass", true}, {"same_as_corrected", true}}
                                                : json{{"transcribable", false}};
    }
    r.elapsed_ms = sw.ms();
    return r;
}

}  // namespace lz
