#pragma once

// Exact coefficient arithmetic.
//   Scalar   - Laurent polynomial in u = q^{1/2} with rational coefficients
//   BiSeries - truncated series in x = q^{-s/2}, y = q^{-w/2} over Scalar
//   Laurent3 - finite Laurent polynomial in (x, y, u), negative exponents allowed

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lz {

using Rational = mpq_class;

// b^e for any integer e; throws on 0^negative.
Rational qpow(const Rational& b, long e);
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

class Scalar {
public:
    Scalar() = default;
    Scalar(long v);
    Scalar(const Rational& v);

    static Scalar monomial(const Rational& c, int uexp);
    static Scalar u(int e = 1) { return monomial(1, e); }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, Rational>& terms() const { return c_; }
    Rational coeff(int e) const;
    // min/max u-exponent; undefined on zero
    int low() const { return c_.begin()->first; }
    int high() const { return c_.rbegin()->first; }

    void add_term(int e, const Rational& v);
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar operator-() const;
    Scalar scaled(const Rational& c, int ushift = 0) const;
    Scalar pow(unsigned e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<int, Rational> c_;
};

enum class Op { add, mul, pow };

// pow reads b as a constant nonnegative integer exponent.
Scalar scalar_arith(const Scalar& a, const Scalar& b, Op op);

struct Box {
    int x = 0;
    int y = 0;
    friend bool operator==(const Box& a, const Box& b) { return a.x == b.x && a.y == b.y; }
    bool contains(int ex, int ey) const { return ex >= 0 && ey >= 0 && ex <= x && ey <= y; }
};

class BiSeries {
public:
    BiSeries() : BiSeries(Box{}) {}
    explicit BiSeries(Box b);

    static BiSeries one(Box b);
    static BiSeries monomial(Box b, int ex, int ey, const Scalar& c);

    Box box() const { return box_; }
    const Scalar& at(int ex, int ey) const;
    bool is_zero() const;

    // silently dropped outside the box; negative exponents throw
    void add_term(int ex, int ey, const Scalar& c);
    void add_term(int ex, int ey, int eu, const Rational& c);

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    friend bool operator==(const BiSeries& a, const BiSeries& b);
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    BiSeries scaled(const Scalar& c) const;
    BiSeries truncated(Box smaller) const;

    // first (x, y) in canonical order where the two differ
    std::optional<std::array<int, 2>> first_difference(const BiSeries& o) const;
    bool even_support() const;
    std::size_t term_count() const;

    std::string str() const;

private:
    Box box_;
    std::vector<Scalar> c_;
    std::size_t idx(int ex, int ey) const { return static_cast<std::size_t>(ex) * (box_.y + 1) + ey; }
};

BiSeries series_arith(const BiSeries& a, const BiSeries& b, Op op);

// sum_{r>=0} c^r (x^ex y^ey)^r truncated to the box
BiSeries geom_inverse(const Scalar& c, int ex, int ey, Box box);

using Exp3 = std::array<int, 3>;  // (x, y, u)

class Laurent3 {
public:
    Laurent3() = default;
    static Laurent3 monomial(const Rational& c, int ex, int ey, int eu);
    static Laurent3 constant(const Rational& c) { return monomial(c, 0, 0, 0); }

    const std::map<Exp3, Rational>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const { return c_.size(); }
    void add_term(const Exp3& e, const Rational& v);

    Laurent3& operator+=(const Laurent3& o);
    friend Laurent3 operator+(Laurent3 a, const Laurent3& b) { return a += b; }
    friend Laurent3 operator*(const Laurent3& a, const Laurent3& b);
    friend bool operator==(const Laurent3& a, const Laurent3& b) { return a.c_ == b.c_; }
    Laurent3 pow(int e) const;  // e < 0 only for monomials

    // throws if any exponent in x or y is negative
    BiSeries to_series(Box b) const;
    std::string str() const;

private:
    std::map<Exp3, Rational> c_;
};

std::string monomial_text(const Rational& c, int ex, int ey, int eu);

}  // namespace lz
