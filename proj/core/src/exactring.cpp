#include "lz/exactring.hpp"

#include <sstream>
#include <stdexcept>

namespace lz {

Rational qpow(const Rational& b, long e)
{
    if (e == 0)
        return 1;
    if (sgn(b) == 0) {
        if (e < 0)
            throw std::domain_error("qpow: zero to a negative power");
        return 0;
    }
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), k);
    Rational r = e < 0 ? Rational(d, n) : Rational(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0)
        throw std::invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

// ---- Scalar

Scalar::Scalar(long v)
{
    if (v != 0)
        c_.emplace(0, Rational(v));
}

Scalar::Scalar(const Rational& v)
{
    if (sgn(v) != 0)
        c_.emplace(0, v).first->second.canonicalize();
}

Scalar Scalar::monomial(const Rational& c, int uexp)
{
    Scalar s;
    s.add_term(uexp, c);
    return s;
}

Rational Scalar::coeff(int e) const
{
    auto it = c_.find(e);
    return it == c_.end() ? Rational(0) : it->second;
}

void Scalar::add_term(int e, const Rational& v)
{
    if (sgn(v) == 0)
        return;
    // callers may hand in mpq values built from (num, den) without reducing
    Rational w = v;
    w.canonicalize();
    auto [it, fresh] = c_.try_emplace(e, w);
    if (!fresh) {
        it->second += w;
        if (sgn(it->second) == 0)
            c_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    for (const auto& [e, v] : o.c_)
        add_term(e, v);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    for (const auto& [e, v] : o.c_)
        add_term(e, -v);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_)
            r.add_term(ea + eb, va * vb);
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::operator-() const { return scaled(-1); }

Scalar Scalar::scaled(const Rational& c, int ushift) const
{
    Scalar r;
    if (sgn(c) == 0)
        return r;
    for (const auto& [e, v] : c_)
        r.c_.emplace_hint(r.c_.end(), e + ushift, v * c);
    return r;
}

Scalar Scalar::pow(unsigned e) const
{
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1u)
            r *= b;
        e >>= 1u;
        if (e)
            b *= b;
    }
    return r;
}

std::string Scalar::str() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (const auto& [e, v] : c_) {
        if (!out.empty())
            out += " + ";
        out += monomial_text(v, 0, 0, e);
    }
    return out;
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, Op op)
{
    switch (op) {
    case Op::add:
        return a + b;
    case Op::mul:
        return a * b;
    case Op::pow: {
        if (b.terms().size() > 1 || (!b.is_zero() && b.terms().begin()->first != 0))
            throw std::invalid_argument("pow exponent must be a constant");
        Rational e = b.coeff(0);
        if (e.get_den() != 1 || sgn(e) < 0 || !e.get_num().fits_uint_p())
            throw std::invalid_argument("pow exponent must be a nonnegative integer");
        return a.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
    }
    throw std::logic_error("unreachable");
}

// ---- BiSeries

BiSeries::BiSeries(Box b) : box_(b)
{
    if (b.x < 0 || b.y < 0)
        throw std::invalid_argument("negative truncation box");
    c_.resize(static_cast<std::size_t>(b.x + 1) * (b.y + 1));
}

BiSeries BiSeries::one(Box b)
{
    BiSeries s(b);
    s.c_[0] = Scalar(1);
    return s;
}

BiSeries BiSeries::monomial(Box b, int ex, int ey, const Scalar& c)
{
    BiSeries s(b);
    s.add_term(ex, ey, c);
    return s;
}

const Scalar& BiSeries::at(int ex, int ey) const
{
    static const Scalar zero;
    if (!box_.contains(ex, ey))
        return zero;
    return c_[idx(ex, ey)];
}

bool BiSeries::is_zero() const
{
    for (const auto& s : c_)
        if (!s.is_zero())
            return false;
    return true;
}

void BiSeries::add_term(int ex, int ey, const Scalar& c)
{
    if (ex < 0 || ey < 0)
        throw std::domain_error("negative exponent in BiSeries");
    if (ex > box_.x || ey > box_.y)
        return;
    c_[idx(ex, ey)] += c;
}

void BiSeries::add_term(int ex, int ey, int eu, const Rational& c)
{
    if (ex < 0 || ey < 0)
        throw std::domain_error("negative exponent in BiSeries");
    if (ex > box_.x || ey > box_.y)
        return;
    c_[idx(ex, ey)].add_term(eu, c);
}

static void same_box(const BiSeries& a, const BiSeries& b)
{
    if (!(a.box() == b.box()))
        throw std::invalid_argument("BiSeries truncation boxes differ");
}

BiSeries& BiSeries::operator+=(const BiSeries& o)
{
    same_box(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o)
{
    same_box(*this, o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
    same_box(a, b);
    BiSeries r(a.box_);
    const Box bx = a.box_;
    for (int ax = 0; ax <= bx.x; ++ax)
        for (int ay = 0; ay <= bx.y; ++ay) {
            const Scalar& ca = a.c_[a.idx(ax, ay)];
            if (ca.is_zero())
                continue;
            for (int bxe = 0; ax + bxe <= bx.x; ++bxe)
                for (int bye = 0; ay + bye <= bx.y; ++bye) {
                    const Scalar& cb = b.c_[b.idx(bxe, bye)];
                    if (!cb.is_zero())
                        r.c_[r.idx(ax + bxe, ay + bye)] += ca * cb;
                }
        }
    return r;
}

bool operator==(const BiSeries& a, const BiSeries& b)
{
    return a.box_ == b.box_ && a.c_ == b.c_;
}

BiSeries BiSeries::scaled(const Scalar& c) const
{
    BiSeries r(box_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            r.c_[i] = c_[i] * c;
    return r;
}

BiSeries BiSeries::truncated(Box smaller) const
{
    if (smaller.x > box_.x || smaller.y > box_.y)
        throw std::invalid_argument("truncated: box must shrink");
    BiSeries r(smaller);
    for (int ex = 0; ex <= smaller.x; ++ex)
        for (int ey = 0; ey <= smaller.y; ++ey)
            r.c_[r.idx(ex, ey)] = c_[idx(ex, ey)];
    return r;
}

std::optional<std::array<int, 2>> BiSeries::first_difference(const BiSeries& o) const
{
    same_box(*this, o);
    for (int ex = 0; ex <= box_.x; ++ex)
        for (int ey = 0; ey <= box_.y; ++ey)
            if (c_[idx(ex, ey)] != o.c_[idx(ex, ey)])
                return std::array<int, 2>{ex, ey};
    return std::nullopt;
}

bool BiSeries::even_support() const
{
    for (int ex = 0; ex <= box_.x; ++ex)
        for (int ey = 0; ey <= box_.y; ++ey)
            if (((ex | ey) & 1) && !c_[idx(ex, ey)].is_zero())
                return false;
    return true;
}

std::size_t BiSeries::term_count() const
{
    std::size_t n = 0;
    for (const auto& s : c_)
        n += s.terms().size();
    return n;
}

std::string BiSeries::str() const
{
    std::string out;
    for (int ex = 0; ex <= box_.x; ++ex)
        for (int ey = 0; ey <= box_.y; ++ey)
            for (const auto& [eu, v] : c_[idx(ex, ey)].terms()) {
                if (!out.empty())
                    out += " + ";
                out += monomial_text(v, ex, ey, eu);
            }
    return out.empty() ? "0" : out;
}

BiSeries series_arith(const BiSeries& a, const BiSeries& b, Op op)
{
    switch (op) {
    case Op::add:
        return a + b;
    case Op::mul:
        return a * b;
    case Op::pow:
        break;
    }
    throw std::invalid_argument("series_arith supports add and mul");
}

BiSeries geom_inverse(const Scalar& c, int ex, int ey, Box box)
{
    if (ex < 0 || ey < 0 || (ex == 0 && ey == 0))
        throw std::invalid_argument("geom_inverse: monomial must have a positive exponent");
    BiSeries r(box);
    Scalar p(1);
    for (int k = 0; k * ex <= box.x && k * ey <= box.y; ++k) {
        if (p.is_zero())
            break;
        r.add_term(k * ex, k * ey, p);
        p *= c;
    }
    return r;
}

// ---- Laurent3

Laurent3 Laurent3::monomial(const Rational& c, int ex, int ey, int eu)
{
    Laurent3 l;
    l.add_term({ex, ey, eu}, c);
    return l;
}

void Laurent3::add_term(const Exp3& e, const Rational& v)
{
    if (sgn(v) == 0)
        return;
    // callers may hand in mpq values built from (num, den) without reducing
    Rational w = v;
    w.canonicalize();
    auto [it, fresh] = c_.try_emplace(e, w);
    if (!fresh) {
        it->second += w;
        if (sgn(it->second) == 0)
            c_.erase(it);
    }
}

Laurent3& Laurent3::operator+=(const Laurent3& o)
{
    for (const auto& [e, v] : o.c_)
        add_term(e, v);
    return *this;
}

Laurent3 operator*(const Laurent3& a, const Laurent3& b)
{
    Laurent3 r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, va * vb);
    return r;
}

Laurent3 Laurent3::pow(int e) const
{
    if (e < 0) {
        if (c_.size() != 1)
            throw std::domain_error("Laurent3: negative power of a non-monomial");
        const auto& [ex, v] = *c_.begin();
        return monomial(qpow(v, e), ex[0] * e, ex[1] * e, ex[2] * e);
    }
    Laurent3 r = constant(1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

BiSeries Laurent3::to_series(Box b) const
{
    BiSeries s(b);
    for (const auto& [e, v] : c_) {
        if (e[0] < 0 || e[1] < 0)
            throw std::domain_error("Laurent3 term " + monomial_text(v, e[0], e[1], e[2]) +
                                    " has a negative x/y exponent");
        s.add_term(e[0], e[1], e[2], v);
    }
    return s;
}

std::string Laurent3::str() const
{
    // canonical order is (x, y, u), which is the map order
    std::string out;
    for (const auto& [e, v] : c_) {
        if (!out.empty())
            out += " + ";
        out += monomial_text(v, e[0], e[1], e[2]);
    }
    return out.empty() ? "0" : out;
}

std::string monomial_text(const Rational& c, int ex, int ey, int eu)
{
    std::ostringstream os;
    bool bare = ex == 0 && ey == 0 && eu == 0;
    if (bare || c != 1) {
        if (c == -1 && !bare)
            os << "-";
        else
            os << c.get_str() << (bare ? "" : "*");
    }
    bool first = true;
    auto var = [&](const char* name, int e) {
        if (e == 0)
            return;
        if (!first)
            os << "*";
        first = false;
        os << name;
        if (e != 1)
            os << "^" << e;
    };
    var("x", ex);
    var("y", ey);
    var("u", eu);
    return os.str();
}

}  // namespace lz
