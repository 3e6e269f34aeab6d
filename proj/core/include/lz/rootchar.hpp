#pragma once

// Root data of the complex dual groups and exact Weyl characters.
//
// Torus coordinates (generator values of a SatakePoint):
//   GL(n)       alpha_1..alpha_n
//   Sp(2n)      b_1..b_n                         (eigenvalues b_i, 1/b_i)
//   GSp(2n)     sigma; b_1..b_n                  (eigenvalues sigma*b_i, sigma/b_i, similitude sigma^2)
//   GSpinD(2n)  z_0; z_1..z_n                    (lattice = cocharacters of GSO(2n))
//   SpinD(2n)   as GSpinD with z_0^2 z_1...z_n = 1

#include "lz/exactring.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lz {

using IVec = std::vector<int>;

enum class Family { GL, Sp, GSp, GSpinD, SpinD };

struct GroupType {
    Family family = Family::GL;
    int n = 1;  // rank parameter: GL(n), Sp(2n), GSp(2n), GSpinD(2n)

    static GroupType gl(int n) { return {Family::GL, n}; }
    static GroupType sp(int n) { return {Family::Sp, n}; }
    static GroupType gsp(int n) { return {Family::GSp, n}; }
    static GroupType gspin_d(int n) { return {Family::GSpinD, n}; }
    static GroupType spin_d(int n) { return {Family::SpinD, n}; }

    int lattice_rank() const;
    bool d_type() const { return family == Family::GSpinD || family == Family::SpinD; }
    std::string name() const;
    void validate() const;
    friend bool operator==(const GroupType& a, const GroupType& b)
    {
        return a.family == b.family && a.n == b.n;
    }
};

// coords: partition for GL/Sp/GSp (GL entries may be negative), fundamental
// coefficients for D types. k0: similitude exponent for GSp, central twist
// along (2; 1,...,1) for D types.
struct HighestWeight {
    GroupType group;
    IVec coords;
    int k0 = 0;

    IVec lattice() const;
    bool dominant() const;
    std::string str() const;
};

struct SatakePoint {
    GroupType group;
    std::vector<Rational> values;

    std::string str() const;
};

struct SingularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RootDatum {
public:
    static const RootDatum& of(const GroupType& g);

    int rank() const { return rank_; }
    const std::vector<IVec>& simple_roots() const { return simple_; }
    const std::vector<IVec>& simple_coroots() const { return cosimple_; }
    const std::vector<IVec>& positive_roots() const { return positive_; }
    std::size_t weyl_order() const { return weyl_.size(); }
    IVec act(std::size_t w, const IVec& v) const;
    int sign(std::size_t w) const { return sign_[w]; }
    const IVec& two_rho() const { return two_rho_; }

    long form(const IVec& a, const IVec& b) const;
    int coroot_pairing(const IVec& v, std::size_t i) const;
    bool dominant(const IVec& v) const;

    // exact weight multiplicities of the irreducible module (Freudenthal)
    std::map<IVec, long> weight_multiplicities(const IVec& lambda) const;
    Rational dimension(const IVec& lambda) const;

private:
    RootDatum(int rank, std::vector<IVec> simple, std::vector<IVec> cosimple);
    int rank_;
    std::vector<IVec> simple_, cosimple_, positive_;
    std::vector<IVec> weyl_;  // flattened rank x rank integer matrices
    std::vector<int> sign_;
    std::vector<long> form_;
    IVec two_rho_;
};

// t^mu for a lattice vector mu
Rational eval_monomial(const IVec& mu, const std::vector<Rational>& values);

// Character values bound to one Satake point, memoized per weight.
// Not thread-safe; use one table per thread.
class CharTable {
public:
    explicit CharTable(SatakePoint p);
    const SatakePoint& point() const { return pt_; }
    bool regular() const { return sgn(den_) != 0; }
    const Rational& chi(const HighestWeight& w);
    const Rational& chi_lattice(const IVec& lambda);
    const Rational& power(std::size_t coord, int e);
    std::size_t cache_size() const { return memo_.size(); }

private:
    SatakePoint pt_;
    const RootDatum* rd_;
    Rational den_;
    std::map<IVec, Rational> memo_;
    std::vector<std::map<int, Rational>> pow_;
    Rational alternant(const IVec& two_shifted);
};

std::vector<HighestWeight> dominant_weights_up_to(const GroupType& g, int bound);

// Ratio form at regular points, Freudenthal weight sum at singular ones.
Scalar weyl_character(const HighestWeight& w, const SatakePoint& p);
// Ratio form only; throws SingularPoint when the Weyl denominator vanishes.
Rational weyl_character_ratio(const HighestWeight& w, const SatakePoint& p);
// Freudenthal weight sum.
Rational weyl_character_weights(const HighestWeight& w, const SatakePoint& p);
long weyl_dimension(const HighestWeight& w);

bool is_regular(const SatakePoint& p);

// prod over terms of value(point, gen)^exp == rhs
struct MonomialConstraint {
    struct Term {
        int point;
        int gen;
        int exp;
    };
    std::vector<Term> terms;
    Rational rhs = 1;
};

std::vector<SatakePoint> random_satake_joint(const std::vector<GroupType>& groups,
                                             const std::vector<MonomialConstraint>& constraints,
                                             std::uint64_t seed);
SatakePoint random_satake(const GroupType& g, const std::vector<MonomialConstraint>& constraints,
                          std::uint64_t seed);

// all-ones point (singular for every non-torus group)
SatakePoint unit_point(const GroupType& g);

// central character value: sigma^2 for GSp, z_0^2 z_1...z_n for D types, det for GL
Rational central_value(const SatakePoint& p);

}  // namespace lz
