#include "lz/rootchar.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace lz {

int GroupType::lattice_rank() const
{
    switch (family) {
    case Family::GL:
    case Family::Sp:
        return n;
    case Family::GSp:
    case Family::GSpinD:
    case Family::SpinD:
        return n + 1;
    }
    return n;
}

std::string GroupType::name() const
{
    switch (family) {
    case Family::GL:
        return "GL(" + std::to_string(n) + ")";
    case Family::Sp:
        return "Sp(" + std::to_string(2 * n) + ")";
    case Family::GSp:
        return "GSp(" + std::to_string(2 * n) + ")";
    case Family::GSpinD:
        return "GSpinD(" + std::to_string(2 * n) + ")";
    case Family::SpinD:
        return "SpinD(" + std::to_string(2 * n) + ")";
    }
    return "?";
}

void GroupType::validate() const
{
    if (n < 1)
        throw std::invalid_argument(name() + ": rank must be >= 1");
    if (d_type() && n < 3)
        throw std::invalid_argument(name() + ": D types need n >= 3");
}

static IVec d_fundamental(int n, int k)
{
    IVec v(n + 1, 0);
    if (k <= n - 2) {
        for (int i = 1; i <= k; ++i)
            v[i] = 1;
    } else {
        v[0] = 1;
        for (int i = 1; i <= n; ++i)
            v[i] = 1;
        if (k == n - 1)
            v[n] = 0;
    }
    return v;
}

IVec HighestWeight::lattice() const
{
    const int n = group.n;
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("weight " + str() + " has wrong length for " + group.name());
    switch (group.family) {
    case Family::GL:
    case Family::Sp:
        return coords;
    case Family::GSp: {
        IVec v(n + 1);
        v[0] = k0;
        std::copy(coords.begin(), coords.end(), v.begin() + 1);
        return v;
    }
    case Family::GSpinD:
    case Family::SpinD: {
        IVec v(n + 1, 0);
        for (int k = 1; k <= n; ++k) {
            IVec f = d_fundamental(n, k);
            for (int i = 0; i <= n; ++i)
                v[i] += coords[k - 1] * f[i];
        }
        v[0] += 2 * k0;
        for (int i = 1; i <= n; ++i)
            v[i] += k0;
        return v;
    }
    }
    return coords;
}

bool HighestWeight::dominant() const
{
    if (static_cast<int>(coords.size()) != group.n)
        return false;
    if (group.d_type())
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
        if (coords[i] < coords[i + 1])
            return false;
    if (group.family != Family::GL && !coords.empty() && coords.back() < 0)
        return false;
    return true;
}

std::string HighestWeight::str() const
{
    std::ostringstream os;
    os << group.name() << "(";
    for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
    if (group.family == Family::GSp || group.d_type())
        os << ";" << k0;
    os << ")";
    return os.str();
}

std::string SatakePoint::str() const
{
    std::string s = group.name() + "[";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + values[i].get_str();
    return s + "]";
}

// ---- RootDatum

RootDatum::RootDatum(int rank, std::vector<IVec> simple, std::vector<IVec> cosimple)
    : rank_(rank), simple_(std::move(simple)), cosimple_(std::move(cosimple))
{
    const int r = rank_;
    IVec id(r * r, 0);
    for (int i = 0; i < r; ++i)
        id[i * r + i] = 1;
    std::vector<IVec> refl;
    for (std::size_t k = 0; k < simple_.size(); ++k) {
        IVec m = id;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                m[i * r + j] -= simple_[k][i] * cosimple_[k][j];
        refl.push_back(m);
    }
    auto mul = [r](const IVec& a, const IVec& b) {
        IVec c(r * r, 0);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                if (a[i * r + k])
                    for (int j = 0; j < r; ++j)
                        c[i * r + j] += a[i * r + k] * b[k * r + j];
        return c;
    };
    std::set<IVec> seen{id};
    std::deque<std::pair<IVec, int>> q{{id, 1}};
    while (!q.empty()) {
        auto [m, s] = q.front();
        q.pop_front();
        weyl_.push_back(m);
        sign_.push_back(s);
        for (const auto& t : refl) {
            IVec nm = mul(t, m);
            if (seen.insert(nm).second)
                q.emplace_back(std::move(nm), -s);
        }
    }
    form_.assign(r * r, 0);
    for (const auto& w : weyl_)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    form_[i * r + j] += static_cast<long>(w[k * r + i]) * w[k * r + j];

    // s_i permutes the positive roots other than alpha_i
    std::set<IVec> pos(simple_.begin(), simple_.end());
    std::deque<IVec> work(simple_.begin(), simple_.end());
    while (!work.empty()) {
        IVec b = work.front();
        work.pop_front();
        for (std::size_t k = 0; k < simple_.size(); ++k) {
            if (b == simple_[k])
                continue;
            int p = 0;
            for (int i = 0; i < r; ++i)
                p += b[i] * cosimple_[k][i];
            IVec c = b;
            for (int i = 0; i < r; ++i)
                c[i] -= p * simple_[k][i];
            if (pos.insert(c).second)
                work.push_back(c);
        }
    }
    positive_.assign(pos.begin(), pos.end());
    two_rho_.assign(r, 0);
    for (const auto& a : positive_)
        for (int i = 0; i < r; ++i)
            two_rho_[i] += a[i];
}

const RootDatum& RootDatum::of(const GroupType& g)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<RootDatum>> cache;
    g.validate();
    Family fam = g.family == Family::SpinD ? Family::GSpinD : g.family;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(fam), g.n);
    auto it = cache.find(key);
    if (it != cache.end())
        return *it->second;

    const int n = g.n;
    const int r = g.lattice_rank();
    const int off = (fam == Family::GL || fam == Family::Sp) ? 0 : 1;
    std::vector<IVec> s, c;
    auto e = [&](int i) {
        IVec v(r, 0);
        v[off + i] = 1;
        return v;
    };
    auto add = [&](IVec a, IVec b) {
        s.push_back(std::move(a));
        c.push_back(std::move(b));
    };
    for (int i = 0; i + 1 < n; ++i) {
        IVec v = e(i);
        v[off + i + 1] = -1;
        add(v, v);
    }
    if (fam == Family::Sp || fam == Family::GSp) {
        IVec a = e(n - 1), b = e(n - 1);
        a[off + n - 1] = 2;
        add(a, b);
    } else if (fam == Family::GSpinD) {
        IVec a = e(n - 2);
        a[off + n - 1] = 1;
        IVec b = a;
        b[0] = -1;
        add(a, b);
    }
    auto* rd = new RootDatum(r, s, c);
    cache.emplace(key, std::unique_ptr<RootDatum>(rd));
    return *rd;
}

IVec RootDatum::act(std::size_t w, const IVec& v) const
{
    const int r = rank_;
    const IVec& m = weyl_[w];
    IVec out(r, 0);
    for (int i = 0; i < r; ++i) {
        int s = 0;
        for (int j = 0; j < r; ++j)
            s += m[i * r + j] * v[j];
        out[i] = s;
    }
    return out;
}

long RootDatum::form(const IVec& a, const IVec& b) const
{
    long s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += a[i] * form_[i * rank_ + j] * b[j];
    return s;
}

int RootDatum::coroot_pairing(const IVec& v, std::size_t i) const
{
    int s = 0;
    for (int k = 0; k < rank_; ++k)
        s += v[k] * cosimple_[i][k];
    return s;
}

bool RootDatum::dominant(const IVec& v) const
{
    for (std::size_t i = 0; i < simple_.size(); ++i)
        if (coroot_pairing(v, i) < 0)
            return false;
    return true;
}

std::map<IVec, long> RootDatum::weight_multiplicities(const IVec& lambda) const
{
    if (!dominant(lambda))
        throw std::invalid_argument("weight_multiplicities: weight is not dominant");
    const int r = rank_;
    std::map<IVec, long> mult{{lambda, 1}};
    std::vector<IVec> level{lambda};
    while (!level.empty()) {
        std::set<IVec> cand;
        for (const auto& mu : level)
            for (const auto& a : simple_) {
                IVec nu = mu;
                for (int i = 0; i < r; ++i)
                    nu[i] -= a[i];
                cand.insert(nu);
            }
        std::vector<IVec> next;
        for (const auto& nu : cand) {
            // (lambda+rho)^2 - (nu+rho)^2 = (lambda-nu, lambda+nu+2rho)
            IVec d(r), s(r);
            for (int i = 0; i < r; ++i) {
                d[i] = lambda[i] - nu[i];
                s[i] = lambda[i] + nu[i] + two_rho_[i];
            }
            long den = form(d, s);
            if (den <= 0)
                continue;
            long num = 0;
            for (const auto& a : positive_) {
                IVec x = nu;
                for (;;) {
                    for (int i = 0; i < r; ++i)
                        x[i] += a[i];
                    auto it = mult.find(x);
                    if (it == mult.end())
                        break;
                    num += it->second * form(x, a);
                }
            }
            num *= 2;
            if (num % den != 0)
                throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
            long m = num / den;
            if (m > 0) {
                mult.emplace(nu, m);
                next.push_back(nu);
            }
        }
        level = std::move(next);
    }
    return mult;
}

Rational RootDatum::dimension(const IVec& lambda) const
{
    Rational d = 1;
    IVec lp(rank_);
    for (int i = 0; i < rank_; ++i)
        lp[i] = 2 * lambda[i] + two_rho_[i];
    for (const auto& a : positive_)
        d *= Rational(form(lp, a), form(two_rho_, a));
    d.canonicalize();
    return d;
}

// ---- characters

Rational eval_monomial(const IVec& mu, const std::vector<Rational>& values)
{
    Rational r = 1;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i])
            r *= qpow(values[i], mu[i]);
    return r;
}

CharTable::CharTable(SatakePoint p) : pt_(std::move(p)), rd_(&RootDatum::of(pt_.group))
{
    if (static_cast<int>(pt_.values.size()) != rd_->rank())
        throw std::invalid_argument("Satake point " + pt_.str() + " has wrong length");
    for (const auto& v : pt_.values)
        if (sgn(v) == 0)
            throw std::invalid_argument("Satake point has a zero coordinate");
    pow_.resize(pt_.values.size());
    den_ = alternant(rd_->two_rho());
}

const Rational& CharTable::power(std::size_t coord, int e)
{
    auto& m = pow_[coord];
    auto it = m.find(e);
    if (it == m.end())
        it = m.emplace(e, qpow(pt_.values[coord], e)).first;
    return it->second;
}

Rational CharTable::alternant(const IVec& two_shifted)
{
    const IVec& tr = rd_->two_rho();
    Rational sum = 0, term;
    for (std::size_t w = 0; w < rd_->weyl_order(); ++w) {
        IVec v = rd_->act(w, two_shifted);
        term = rd_->sign(w);
        for (std::size_t i = 0; i < v.size(); ++i) {
            int e = (v[i] - tr[i]) / 2;
            if (e)
                term *= power(i, e);
        }
        sum += term;
    }
    return sum;
}

const Rational& CharTable::chi_lattice(const IVec& lambda)
{
    auto it = memo_.find(lambda);
    if (it != memo_.end())
        return it->second;
    Rational val;
    if (regular()) {
        IVec s(lambda.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            s[i] = 2 * lambda[i] + rd_->two_rho()[i];
        val = alternant(s) / den_;
    } else {
        val = 0;
        for (const auto& [mu, m] : rd_->weight_multiplicities(lambda)) {
            Rational t = m;
            for (std::size_t i = 0; i < mu.size(); ++i)
                if (mu[i])
                    t *= power(i, mu[i]);
            val += t;
        }
    }
    return memo_.emplace(lambda, val).first->second;
}

const Rational& CharTable::chi(const HighestWeight& w)
{
    if (!(w.group == pt_.group))
        throw std::invalid_argument("weight " + w.str() + " does not match point " + pt_.str());
    return chi_lattice(w.lattice());
}

std::vector<HighestWeight> dominant_weights_up_to(const GroupType& g, int bound)
{
    g.validate();
    std::vector<HighestWeight> out;
    const int n = g.n;
    IVec cur(n, 0);
    // coordinate sum == total, visited in lexicographically decreasing order
    std::function<void(int, int, int)> rec = [&](int i, int left, int cap) {
        if (i == n) {
            if (left == 0) {
                HighestWeight h{g, cur, 0};
                if (g.family == Family::GSp)
                    for (int c : cur)
                        h.k0 += c;
                out.push_back(h);
            }
            return;
        }
        for (int v = std::min(left, cap); v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v, g.d_type() ? bound : v);
        }
        cur[i] = 0;
    };
    for (int total = 0; total <= bound; ++total)
        rec(0, total, total);
    return out;
}

Scalar weyl_character(const HighestWeight& w, const SatakePoint& p)
{
    CharTable t(p);
    return Scalar(t.chi(w));
}

Rational weyl_character_ratio(const HighestWeight& w, const SatakePoint& p)
{
    CharTable t(p);
    if (!t.regular())
        throw SingularPoint("Weyl denominator vanishes at " + p.str() + "; regenerate the point");
    return t.chi(w);
}

Rational weyl_character_weights(const HighestWeight& w, const SatakePoint& p)
{
    if (!(w.group == p.group))
        throw std::invalid_argument("weight/point group mismatch");
    const RootDatum& rd = RootDatum::of(p.group);
    Rational val = 0;
    for (const auto& [mu, m] : rd.weight_multiplicities(w.lattice()))
        val += m * eval_monomial(mu, p.values);
    return val;
}

long weyl_dimension(const HighestWeight& w)
{
    if (!w.dominant())
        throw std::invalid_argument("weyl_dimension: " + w.str() + " is not dominant");
    Rational d = RootDatum::of(w.group).dimension(w.lattice());
    return d.get_num().get_si();
}

bool is_regular(const SatakePoint& p)
{
    const RootDatum& rd = RootDatum::of(p.group);
    for (const auto& a : rd.positive_roots())
        if (eval_monomial(a, p.values) == 1)
            return false;
    return true;
}

SatakePoint unit_point(const GroupType& g)
{
    return SatakePoint{g, std::vector<Rational>(g.lattice_rank(), Rational(1))};
}

Rational central_value(const SatakePoint& p)
{
    const auto& v = p.values;
    switch (p.group.family) {
    case Family::GL: {
        Rational r = 1;
        for (const auto& x : v)
            r *= x;
        return r;
    }
    case Family::Sp:
        return 1;
    case Family::GSp:
        return v[0] * v[0];
    case Family::GSpinD:
    case Family::SpinD: {
        Rational r = v[0] * v[0];
        for (std::size_t i = 1; i < v.size(); ++i)
            r *= v[i];
        return r;
    }
    }
    return 1;
}

// ---- random points

namespace {

bool perfect_square(const Rational& q, Rational& root)
{
    if (sgn(q) < 0)
        return false;
    mpz_class a = sqrt(q.get_num()), b = sqrt(q.get_den());
    if (a * a != q.get_num() || b * b != q.get_den())
        return false;
    root = Rational(a, b);
    root.canonicalize();
    return true;
}

}  // namespace

std::vector<SatakePoint> random_satake_joint(const std::vector<GroupType>& groups,
                                             const std::vector<MonomialConstraint>& constraints,
                                             std::uint64_t seed)
{
    std::vector<SatakePoint> pts;
    for (const auto& g : groups) {
        g.validate();
        pts.push_back(unit_point(g));
    }
    // each constraint is solved for one variable with exponent +-1 (else +-2)
    std::vector<std::size_t> solved;
    std::set<std::pair<int, int>> taken;
    for (const auto& c : constraints) {
        std::optional<std::size_t> pick;
        for (int want : {1, 2})
            for (std::size_t t = c.terms.size(); t-- > 0 && !pick;) {
                const auto& tm = c.terms[t];
                if (std::abs(tm.exp) == want && !taken.count({tm.point, tm.gen}))
                    pick = t;
            }
        if (!pick)
            throw std::invalid_argument("random_satake: constraint cannot be solved for a variable");
        taken.insert({c.terms[*pick].point, c.terms[*pick].gen});
        solved.push_back(*pick);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> mag(1, 13), coin(0, 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (auto& p : pts)
            for (auto& v : p.values) {
                v = Rational(mag(rng), mag(rng));
                v.canonicalize();
                if (coin(rng))
                    v = -v;
            }
        bool ok = true;
        for (std::size_t k = 0; k < constraints.size() && ok; ++k) {
            const auto& c = constraints[k];
            const auto& s = c.terms[solved[k]];
            Rational rest = 1;
            for (std::size_t t = 0; t < c.terms.size(); ++t)
                if (t != solved[k])
                    rest *= qpow(pts[c.terms[t].point].values[c.terms[t].gen], c.terms[t].exp);
            Rational target = c.rhs / rest;  // value^exp == target
            Rational& var = pts[s.point].values[s.gen];
            if (std::abs(s.exp) == 1) {
                var = s.exp == 1 ? target : 1 / target;
            } else {
                Rational root;
                if (!perfect_square(s.exp > 0 ? target : 1 / target, root)) {
                    ok = false;
                    break;
                }
                var = root;
            }
            var.canonicalize();
        }
        if (!ok)
            continue;
        for (const auto& p : pts) {
            if (p.group.family == Family::GL && p.group.n == 1 && p.values[0] == 1)
                ok = false;
            else if (!is_regular(p))
                ok = false;
        }
        if (ok)
            return pts;
    }
    throw std::runtime_error("random_satake: could not satisfy the constraints");
}

SatakePoint random_satake(const GroupType& g, const std::vector<MonomialConstraint>& constraints,
                          std::uint64_t seed)
{
    return random_satake_joint({g}, constraints, seed).front();
}

}  // namespace lz
