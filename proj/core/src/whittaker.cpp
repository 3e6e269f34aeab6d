#include "lz/whittaker.hpp"

#include <sstream>
#include <stdexcept>

namespace lz {

std::string Cocharacter::str() const
{
    std::ostringstream os;
    switch (group) {
    case PadicGroup::GL:
        os << "GL" << n;
        break;
    case PadicGroup::GSpinOdd:
        os << "GSpin" << 2 * n + 1;
        break;
    case PadicGroup::GSO:
        os << "GSO" << 2 * n;
        break;
    }
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i)
        os << (i ? "," : "") << k[i];
    if (group != PadicGroup::GL)
        os << ";" << k0;
    os << ")";
    return os.str();
}

GroupType dual_group(PadicGroup g, int n)
{
    switch (g) {
    case PadicGroup::GL:
        return GroupType::gl(n);
    case PadicGroup::GSpinOdd:
        return GroupType::gsp(n);
    case PadicGroup::GSO:
        return GroupType::gspin_d(n);
    }
    return GroupType::gl(n);
}

bool point_matches(const GroupType& point, PadicGroup g, int n)
{
    if (point == dual_group(g, n))
        return true;
    return g == PadicGroup::GSO && point == GroupType::spin_d(n);
}

static void check_shape(const Cocharacter& c)
{
    if (static_cast<int>(c.k.size()) != c.n)
        throw std::invalid_argument("cocharacter " + c.str() + " has wrong length");
}

bool is_dominant(const Cocharacter& c)
{
    check_shape(c);
    const auto& k = c.k;
    for (int i = 0; i + 1 < c.n; ++i)
        if (k[i] < k[i + 1])
            return false;
    switch (c.group) {
    case PadicGroup::GL:
        return true;
    case PadicGroup::GSpinOdd:
        return k[c.n - 1] >= 0;
    case PadicGroup::GSO:
        return c.n < 2 || k[c.n - 2] + k[c.n - 1] >= c.k0;
    }
    return false;
}

int two_rho_pairing(const Cocharacter& c)
{
    check_shape(c);
    const auto& k = c.k;
    const int n = c.n;
    int s = 0;
    switch (c.group) {
    case PadicGroup::GL:
        for (int i = 0; i < n; ++i)
            s += (n - 1 - 2 * i) * k[i];
        return s;
    case PadicGroup::GSpinOdd:
        for (int i = 0; i < n; ++i)
            s += (2 * n - 2 * i - 1) * k[i];
        return s;
    case PadicGroup::GSO:
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += (k[i] - k[j]) + (k[i] + k[j] - c.k0);
        return s;
    }
    return s;
}

Scalar delta_half(const Cocharacter& c) { return Scalar::u(-two_rho_pairing(c)); }

HighestWeight dual_weight(const Cocharacter& c)
{
    check_shape(c);
    GroupType g = dual_group(c.group, c.n);
    switch (c.group) {
    case PadicGroup::GL:
        return {g, c.k, 0};
    case PadicGroup::GSpinOdd: {
        int sum = 0;
        for (int v : c.k)
            sum += v;
        return {g, c.k, sum + 2 * c.k0};
    }
    case PadicGroup::GSO: {
        // lattice vector (c0; c) in fundamental coordinates plus central twist
        IVec v(c.n + 1);
        v[0] = c.k0;
        for (int i = 0; i < c.n; ++i)
            v[i + 1] = c.k[i];
        const RootDatum& rd = RootDatum::of(g);
        HighestWeight h{g, IVec(c.n, 0), 0};
        for (int i = 0; i < c.n; ++i)
            h.coords[i] = rd.coroot_pairing(v, i);
        IVec rest = h.lattice();
        for (std::size_t i = 0; i < v.size(); ++i)
            rest[i] = v[i] - rest[i];
        h.k0 = rest[0] / 2;
        for (int i = 1; i <= c.n; ++i)
            if (rest[i] != h.k0 || rest[0] != 2 * h.k0)
                throw std::logic_error("GSO cocharacter outside the fundamental lattice");
        return h;
    }
    }
    return {g, c.k, 0};
}

CsParts cs_parts(const Cocharacter& c, CharTable& table)
{
    CsParts out;
    if (!is_dominant(c)) {
        out.zero = true;
        out.value = 0;
        return out;
    }
    if (!point_matches(table.point().group, c.group, c.n))
        throw std::invalid_argument("cs_value: " + c.str() + " does not match point " +
                                    table.point().str());
    out.uexp = -two_rho_pairing(c);
    HighestWeight hw = dual_weight(c);
    hw.group = table.point().group;  // SpinD shares the GSpinD lattice
    out.value = table.chi(hw);
    return out;
}

Scalar cs_value(const Cocharacter& c, const SatakePoint& p)
{
    if (!point_matches(p.group, c.group, c.n))
        throw std::invalid_argument("cs_value: " + c.str() + " does not match point " + p.str());
    CharTable t(p);
    CsParts r = cs_parts(c, t);
    if (r.zero)
        return Scalar();
    return Scalar::monomial(r.value, r.uexp);
}

Cocharacter gso_from_diagonal(const IVec& val)
{
    if (val.size() < 4 || val.size() % 2)
        throw std::invalid_argument("gso_from_diagonal: need an even number >= 4 of entries");
    const int n = static_cast<int>(val.size()) / 2;
    Cocharacter c{PadicGroup::GSO, n, IVec(val.begin(), val.begin() + n), val[0] + val[2 * n - 1]};
    for (int i = 0; i < n; ++i)
        if (val[i] + val[2 * n - 1 - i] != c.k0)
            throw std::invalid_argument("gso_from_diagonal: diagonal is not in the GSO torus");
    return c;
}

Cocharacter gso8_fundamental(const IVec& k)
{
    if (k.size() != 4)
        throw std::invalid_argument("gso8_fundamental: need 4 coefficients");
    HighestWeight h{GroupType::gspin_d(4), k, 0};
    IVec v = h.lattice();
    return {PadicGroup::GSO, 4, IVec(v.begin() + 1, v.end()), v[0]};
}

Cocharacter gso10_two_param(int k1, int k2)
{
    HighestWeight h{GroupType::gspin_d(5), {k2, 0, 0, 0, k1}, k2};
    IVec v = h.lattice();
    return {PadicGroup::GSO, 5, IVec(v.begin() + 1, v.end()), v[0]};
}

Cocharacter gspin5_from_gsp4(int f1, int f2, int f0)
{
    return {PadicGroup::GSpinOdd, 2, {-f0 + f1 + f2, f1 - f2}, f0 - f1};
}

}  // namespace lz
