#pragma once

// Local L-factors as truncated series, directly from representation weights
// and through the Cauchy-type character expansions.

#include "lz/exactring.hpp"
#include "lz/rootchar.hpp"

#include <string>
#include <vector>

namespace lz {

// A weight of a representation of a product of dual groups: one exponent
// vector per Satake point (empty = that factor does not enter).
struct WeightEval {
    std::vector<IVec> exps;
    Rational operator()(const std::vector<SatakePoint>& pts) const;
};

struct DualRep {
    std::string label;
    std::vector<WeightEval> weights;

    std::size_t dim() const { return weights.size(); }
};

namespace rep {

// std of the group at slot `point` (D types: varpi_1)
DualRep standard(int point, const GroupType& g, int nslots);
// irreducible of highest weight w at slot `point` (multiset via Freudenthal)
DualRep irreducible(int point, const HighestWeight& w, int nslots);
// half-spin varpi_n of a D type
DualRep spin(int point, const GroupType& g, int nslots);
DualRep tensor(const DualRep& a, const DualRep& b);
// multiply every weight by the GL(1) coordinate at slot `point`
DualRep twist(const DualRep& a, int point);

}  // namespace rep

const std::vector<WeightEval>& rep_weights(const DualRep& r);

enum class Var { x, y };

BiSeries l_factor(const DualRep& r, const std::vector<SatakePoint>& pts, Var v, Box box);
// zeta_F(2s) or zeta_F(2w): geometric series in x^4 (resp. y^4)
BiSeries zeta2(Var v, Box box);

// Cauchy-type expansions.
//   a: points (GSp(2n) tau, GL(2) pi)       L(s, tau x pi)
//   b: points (GSp(4) tau, GL(m) pi), m>=4  L(s, tau x pi)
//   c: points (GSp(2n) tau, GL(3) pi)       L(s, tau x pi); n = 2 forces n6 = 0
//   d: points (SpinD(8) sigma)              L(s, sigma, std) L(w, sigma, Spin)
//   e: points (GSpinD(10) sigma)            L(s, sigma, Spin)
enum class CauchyCase { a, b, c, d, e };

CauchyCase parse_cauchy_case(const std::string& s);
std::string to_string(CauchyCase c);

BiSeries cauchy_rhs(CauchyCase c, const std::vector<SatakePoint>& pts, Box box);
BiSeries cauchy_lhs(CauchyCase c, const std::vector<SatakePoint>& pts, Box box);
std::vector<GroupType> cauchy_groups(CauchyCase c, int rank);
std::vector<MonomialConstraint> cauchy_constraints(CauchyCase c);

}  // namespace lz
