#include "lz/lfactor.hpp"

#include <functional>
#include <stdexcept>

namespace lz {

Rational WeightEval::operator()(const std::vector<SatakePoint>& pts) const
{
    Rational r = 1;
    for (std::size_t s = 0; s < exps.size(); ++s)
        if (!exps[s].empty())
            r *= eval_monomial(exps[s], pts.at(s).values);
    return r;
}

namespace rep {

static WeightEval at_slot(int point, IVec e, int nslots)
{
    WeightEval w;
    w.exps.resize(nslots);
    w.exps.at(point) = std::move(e);
    return w;
}

DualRep irreducible(int point, const HighestWeight& hw, int nslots)
{
    DualRep r{hw.str(), {}};
    for (const auto& [mu, m] : RootDatum::of(hw.group).weight_multiplicities(hw.lattice()))
        for (long i = 0; i < m; ++i)
            r.weights.push_back(at_slot(point, mu, nslots));
    return r;
}

DualRep standard(int point, const GroupType& g, int nslots)
{
    const int n = g.n;
    const int len = g.lattice_rank();
    DualRep r{"std " + g.name(), {}};
    auto unit = [&](int i, int sgn, int sigma) {
        IVec e(len, 0);
        e[i] = sgn;
        if (sigma)
            e[0] = 1;
        return e;
    };
    switch (g.family) {
    case Family::GL:
        for (int i = 0; i < n; ++i)
            r.weights.push_back(at_slot(point, unit(i, 1, 0), nslots));
        return r;
    case Family::Sp:
        for (int i = 0; i < n; ++i)
            for (int s : {1, -1})
                r.weights.push_back(at_slot(point, unit(i, s, 0), nslots));
        return r;
    case Family::GSp:
        for (int i = 1; i <= n; ++i)
            for (int s : {1, -1})
                r.weights.push_back(at_slot(point, unit(i, s, 1), nslots));
        return r;
    case Family::GSpinD:
    case Family::SpinD: {
        IVec c(n, 0);
        c[0] = 1;
        DualRep d = irreducible(point, HighestWeight{g, c, 0}, nslots);
        d.label = r.label;
        return d;
    }
    }
    return r;
}

DualRep spin(int point, const GroupType& g, int nslots)
{
    if (!g.d_type())
        throw std::invalid_argument("spin: not a D type");
    IVec c(g.n, 0);
    c[g.n - 1] = 1;
    DualRep d = irreducible(point, HighestWeight{g, c, 0}, nslots);
    d.label = "Spin " + g.name();
    return d;
}

DualRep tensor(const DualRep& a, const DualRep& b)
{
    DualRep r{a.label + " (x) " + b.label, {}};
    for (const auto& wa : a.weights)
        for (const auto& wb : b.weights) {
            WeightEval w;
            w.exps.resize(std::max(wa.exps.size(), wb.exps.size()));
            for (std::size_t s = 0; s < w.exps.size(); ++s) {
                const IVec* ea = s < wa.exps.size() && !wa.exps[s].empty() ? &wa.exps[s] : nullptr;
                const IVec* eb = s < wb.exps.size() && !wb.exps[s].empty() ? &wb.exps[s] : nullptr;
                if (ea && eb) {
                    IVec e = *ea;
                    for (std::size_t i = 0; i < e.size(); ++i)
                        e[i] += (*eb)[i];
                    w.exps[s] = e;
                } else if (ea) {
                    w.exps[s] = *ea;
                } else if (eb) {
                    w.exps[s] = *eb;
                }
            }
            r.weights.push_back(std::move(w));
        }
    return r;
}

DualRep twist(const DualRep& a, int point)
{
    DualRep r{a.label + " * chi[" + std::to_string(point) + "]", {}};
    for (auto w : a.weights) {
        if (static_cast<int>(w.exps.size()) <= point)
            w.exps.resize(point + 1);
        if (w.exps[point].empty())
            w.exps[point] = IVec{1};
        else
            w.exps[point][0] += 1;
        r.weights.push_back(std::move(w));
    }
    return r;
}

}  // namespace rep

const std::vector<WeightEval>& rep_weights(const DualRep& r) { return r.weights; }

// S <- S / (1 - c m), in place
static void divide_geometric(BiSeries& s, const Rational& c, int ex, int ey)
{
    Box b = s.box();
    for (int i = ex; i <= b.x; ++i)
        for (int j = ey; j <= b.y; ++j) {
            const Scalar& prev = s.at(i - ex, j - ey);
            if (!prev.is_zero())
                s.add_term(i, j, prev.scaled(c));
        }
}

BiSeries l_factor(const DualRep& r, const std::vector<SatakePoint>& pts, Var v, Box box)
{
    BiSeries s = BiSeries::one(box);
    const int ex = v == Var::x ? 2 : 0, ey = v == Var::y ? 2 : 0;
    for (const auto& w : r.weights)
        divide_geometric(s, w(pts), ex, ey);
    return s;
}

BiSeries zeta2(Var v, Box box)
{
    return v == Var::x ? geom_inverse(Scalar(1), 4, 0, box) : geom_inverse(Scalar(1), 0, 4, box);
}

CauchyCase parse_cauchy_case(const std::string& s)
{
    if (s == "a")
        return CauchyCase::a;
    if (s == "b")
        return CauchyCase::b;
    if (s == "c")
        return CauchyCase::c;
    if (s == "d")
        return CauchyCase::d;
    if (s == "e")
        return CauchyCase::e;
    throw std::invalid_argument("unknown Cauchy case '" + s + "' (expected a..e)");
}

std::string to_string(CauchyCase c)
{
    const char* names = "abcde";
    return std::string(1, names[static_cast<int>(c)]);
}

std::vector<GroupType> cauchy_groups(CauchyCase c, int rank)
{
    switch (c) {
    case CauchyCase::a:
        return {GroupType::gsp(rank), GroupType::gl(2)};
    case CauchyCase::b:
        if (rank < 4)
            throw std::invalid_argument("case b needs m >= 4");
        return {GroupType::gsp(2), GroupType::gl(rank)};
    case CauchyCase::c:
        if (rank != 2 && rank != 3)
            throw std::invalid_argument("case c is stated for n in {2, 3}");
        return {GroupType::gsp(rank), GroupType::gl(3)};
    case CauchyCase::d:
        return {GroupType::spin_d(4)};
    case CauchyCase::e:
        return {GroupType::gspin_d(5)};
    }
    return {};
}

std::vector<MonomialConstraint> cauchy_constraints(CauchyCase c)
{
    if (c != CauchyCase::d)
        return {};
    MonomialConstraint m;
    m.terms = {{0, 0, 2}, {0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}};
    return {m};
}

namespace {

// Visit every index vector with nonnegative entries whose X and Y degrees
// (positive linear forms) fit the bounds.
void for_indices(const IVec& xdeg, const IVec& ydeg, int maxX, int maxY,
                 const std::function<void(const IVec&, int, int)>& f)
{
    const std::size_t n = xdeg.size();
    IVec idx(n, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int dx, int dy) {
        if (i == n) {
            f(idx, dx, dy);
            return;
        }
        for (int v = 0;; ++v) {
            int nx = dx + v * xdeg[i], ny = dy + v * ydeg[i];
            if (nx > maxX || ny > maxY)
                break;
            idx[i] = v;
            rec(i + 1, nx, ny);
            if (xdeg[i] == 0 && ydeg[i] == 0)
                throw std::logic_error("index with zero degree");
        }
        idx[i] = 0;
    };
    rec(0, 0, 0);
}

IVec padded(IVec v, int n)
{
    v.resize(n, 0);
    return v;
}

}  // namespace

BiSeries cauchy_rhs(CauchyCase c, const std::vector<SatakePoint>& pts, Box box)
{
    BiSeries s(box);
    const int X = box.x / 2, Y = box.y / 2;
    switch (c) {
    case CauchyCase::a: {
        CharTable tau(pts.at(0)), pi(pts.at(1));
        const int n = pts[0].group.n;
        Rational om = central_value(pts[0]) * central_value(pts[1]);
        for_indices({1, 2, 2}, {0, 0, 0}, X, 0, [&](const IVec& m, int dx, int) {
            Rational v = qpow(om, m[2]) * pi.chi({GroupType::gl(2), {m[0] + m[1], m[1]}, 0}) *
                         tau.chi({GroupType::gsp(n), padded({m[0] + m[1], m[1]}, n), m[0] + 2 * m[1]});
            s.add_term(2 * dx, 0, 0, v);
        });
        return s;
    }
    case CauchyCase::b: {
        CharTable tau(pts.at(0)), pi(pts.at(1));
        const int m = pts[1].group.n;
        for_indices({1, 2, 3, 2, 4, 4}, {0, 0, 0, 0, 0, 0}, X, 0, [&](const IVec& k, int dx, int) {
            IVec sp = {k[0] + k[1] + k[2] + k[4], k[1] + k[4]};
            IVec gl = {k[0] + k[1] + k[2] + k[3] + 2 * k[4] + k[5], k[1] + k[2] + k[3] + k[4] + k[5],
                       k[2] + k[4] + k[5], k[5]};
            Rational v = tau.chi({GroupType::gsp(2), sp, dx}) * pi.chi({GroupType::gl(m), padded(gl, m), 0});
            s.add_term(2 * dx, 0, 0, v);
        });
        return s;
    }
    case CauchyCase::c: {
        CharTable tau(pts.at(0)), pi(pts.at(1));
        const int n = pts[0].group.n;
        Rational wpi = central_value(pts[1]), wtau = central_value(pts[0]);
        IVec xd = {1, 2, 2, 3, 4, 3};
        if (n == 2)
            xd.pop_back();  // n6 = 0
        for_indices(xd, IVec(xd.size(), 0), X, 0, [&](const IVec& kk, int dx, int) {
            IVec k = padded(kk, 6);
            IVec gl = {k[0] + k[1] + k[2] + k[4], k[1] + k[2], 0};
            IVec sp = {k[0] + k[1] + k[3] + k[4] + k[5], k[1] + k[4] + k[5], k[5]};
            int k0 = k[0] + 2 * k[1] + k[3] + 2 * k[4] + 3 * k[5];
            Rational v = qpow(wpi, k[3] + k[4] + k[5]) * qpow(wtau, k[2] + k[3] + k[4]) *
                         pi.chi({GroupType::gl(3), gl, 0}) *
                         tau.chi({GroupType::gsp(n), padded(sp, n), k0});
            s.add_term(2 * dx, 0, 0, v);
        });
        return s;
    }
    case CauchyCase::d: {
        CharTable sig(pts.at(0));
        for_indices({1, 0, 1}, {0, 1, 1}, X, Y, [&](const IVec& k, int dx, int dy) {
            s.add_term(2 * dx, 2 * dy, 0, sig.chi({GroupType::spin_d(4), {k[0], 0, k[2], k[1]}, 0}));
        });
        return s * zeta2(Var::x, box) * zeta2(Var::y, box);
    }
    case CauchyCase::e: {
        CharTable sig(pts.at(0));
        for_indices({1, 2}, {0, 0}, X, 0, [&](const IVec& k, int dx, int) {
            s.add_term(2 * dx, 0, 0, sig.chi({GroupType::gspin_d(5), {k[1], 0, 0, 0, k[0]}, k[1]}));
        });
        return s;
    }
    }
    return s;
}

BiSeries cauchy_lhs(CauchyCase c, const std::vector<SatakePoint>& pts, Box box)
{
    const int ns = static_cast<int>(pts.size());
    switch (c) {
    case CauchyCase::a:
    case CauchyCase::b:
    case CauchyCase::c: {
        DualRep r = rep::tensor(rep::standard(0, pts.at(0).group, ns), rep::standard(1, pts.at(1).group, ns));
        return l_factor(r, pts, Var::x, box);
    }
    case CauchyCase::d:
        return l_factor(rep::standard(0, pts.at(0).group, ns), pts, Var::x, box) *
               l_factor(rep::spin(0, pts.at(0).group, ns), pts, Var::y, box);
    case CauchyCase::e:
        return l_factor(rep::spin(0, pts.at(0).group, ns), pts, Var::x, box);
    }
    return BiSeries(box);
}

}  // namespace lz
