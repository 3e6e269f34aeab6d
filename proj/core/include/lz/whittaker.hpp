#pragma once

// Casselman-Shalika / Shintani values of normalized unramified Whittaker
// functions at dominant torus elements.
//
//   GL(n)          k = (k_1..k_n)                  dual GL(n) point
//   GSpin(2n+1)    k = (k_1..k_n), k0 = e_0^* exp  dual GSp(2n) point
//   GSO(2n)        k = (c_1..c_n), k0 = c_0        dual GSpinD(2n) point
// A GSO(2n) cocharacter (c_0; c) is diag(a^c_1..a^c_n, a^{c_0-c_n}..a^{c_0-c_1}).

#include "lz/exactring.hpp"
#include "lz/rootchar.hpp"

namespace lz {

enum class PadicGroup { GL, GSpinOdd, GSO };

struct Cocharacter {
    PadicGroup group = PadicGroup::GL;
    int n = 1;
    IVec k;
    int k0 = 0;

    std::string str() const;
};

GroupType dual_group(PadicGroup g, int n);
// SpinD points are accepted for GSO (trivial central character)
bool point_matches(const GroupType& point, PadicGroup g, int n);

bool is_dominant(const Cocharacter& c);
int two_rho_pairing(const Cocharacter& c);
Scalar delta_half(const Cocharacter& c);

// the dual highest weight whose character appears in the formula
HighestWeight dual_weight(const Cocharacter& c);

struct CsParts {
    bool zero = false;
    int uexp = 0;  // delta_half = u^uexp
    Rational value;
};

CsParts cs_parts(const Cocharacter& c, CharTable& table);
Scalar cs_value(const Cocharacter& c, const SatakePoint& p);

// GSO(2n) cocharacter from the valuations of a diagonal element; throws when
// the diagonal is not of GSO torus shape.
Cocharacter gso_from_diagonal(const IVec& valuations);
// t_{(k1..k4);GSO8} = sum k_i varpi_i
Cocharacter gso8_fundamental(const IVec& k);
// t_{(k1,k2);GSO10}: weight k2 varpi_1 + k1 varpi_5 twisted by omega^{k2}
Cocharacter gso10_two_param(int k1, int k2);

// diag(t1, t2, lambda/t2, lambda/t1) in GSp4(F) with valuations (f1, f2, f0),
// read as a GSpin5 cocharacter through the root matching
// e1 - e2 <-> t2^2/lambda, e2 <-> t1/t2.
Cocharacter gspin5_from_gsp4(int f1, int f2, int f0);

}  // namespace lz
