#pragma once

// Unramified local zeta integrals as lattice sums over torus valuations,
// compared exactly against the expected L-function products.
//
// Each case is described by a LatticeSpec: integer variables (valuations and
// auxiliary summation indices), an |a|-exponent per variable on the (x, y, u)
// half grid, a cone of linear inequalities, Whittaker factors evaluated by
// Casselman-Shalika at linear cocharacters, unramified character twists, an
// optional G-function factor and optional zeta(2s), zeta(2w) prefactors.

#include "lz/exactring.hpp"
#include "lz/report.hpp"
#include "lz/rootchar.hpp"
#include "lz/whittaker.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lz {

enum class ZetaKind {
    gspin_gl_m2,   // GSpin(2m+1) x GL(2), m >= 3
    gspin_gl_2n,   // GSpin(5) x GL(n), n >= 4
    gspin_gl_m3,   // GSpin(2m+1) x GL(3), m >= 2
    multi_gl,      // GL(n) with two GL(1) twists, n >= 2
    multi_gspin,   // GSpin(2n+1) with two GL(1) twists, n >= 2
    d4,            // GSO(8)
    d5,            // GSO(10)
    glue_gl_gl,    // GL(m) x GL(2) x GL(n)
    glue_gl_gspin, // GL(m) x GL(2) x GSpin(2n+1)
    glue_gspin_gspin,
};

struct ZetaCase {
    ZetaKind kind = ZetaKind::d5;
    int m = 0;
    int n = 0;

    std::string id() const;
};

std::string to_string(ZetaKind k);
ZetaKind parse_zeta_kind(const std::string& s);
std::vector<ZetaKind> all_zeta_kinds();
// fills unset ranks with the smallest valid ones; throws on invalid ranks
ZetaCase make_zeta_case(ZetaKind k, int m = 0, int n = 0);

struct LinForm {
    IVec a;
    int c = 0;

    int operator()(const IVec& v) const;
    LinForm operator+(const LinForm& o) const;
    LinForm operator-(const LinForm& o) const;
    LinForm operator*(int s) const;
};

struct WFactor {
    PadicGroup group;
    int n;
    int point;
    std::vector<LinForm> k;
    LinForm k0;
};

// value(point, gen)^e
struct Twist {
    int point;
    int gen;
    LinForm e;
};

// G(a, s', chi/mu) with ord(a) = ord(v), summed through the variable r_var;
// m is the (x, y, u) exponent of q^{-s'}
struct GFactor {
    LinForm ord;
    int r_var;
    int chi_point, chi_gen;
    int mu_point, mu_gen;
    Exp3 m;
};

struct LatticeSpec {
    std::string id;
    std::vector<std::string> vars;
    std::vector<Exp3> weight;     // |a_i|-exponent per unit of variable i
    std::vector<LinForm> region;  // each >= 0
    std::vector<WFactor> w;
    std::vector<Twist> twists;
    std::optional<GFactor> g;
    bool zeta_s = false;
    bool zeta_w = false;
    std::vector<std::string> corrections;
    bool derived = false;
    std::vector<std::string> notes;

    std::size_t nvars() const { return vars.size(); }
    // region plus dominance of every W factor plus the G-function support
    std::vector<LinForm> constraints() const;
    // (x, y, u) exponent of a lattice point including the G term, as linear forms
    std::array<LinForm, 3> degree_forms() const;
};

// corrected = false gives the displayed formulas with no corrections applied
LatticeSpec lattice_spec(const ZetaCase& c, bool corrected = true);
// false when there is no displayed lattice sum to transcribe
bool has_verbatim(const ZetaCase& c);

std::vector<GroupType> zeta_groups(const ZetaCase& c);
std::vector<MonomialConstraint> zeta_constraints(const ZetaCase& c);

struct UnboundedCone : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every lattice point of the cone whose x/y-degree fits the box, in
// lexicographic order. Exact Fourier-Motzkin projection gives per-variable
// integer bounds; throws UnboundedCone when some variable has no bound.
std::vector<IVec> lattice_points(const LatticeSpec& s, Box box);

struct LatticeStats {
    long points = 0;
    long odd_terms = 0;  // contributions on odd (x, y) exponents
};

BiSeries evaluate_zeta(const LatticeSpec& s, const std::vector<SatakePoint>& pts, Box box,
                       LatticeStats* stats = nullptr);
// canonical-order text dump of every lattice point's contribution
std::string dump_contributions(const LatticeSpec& s, const std::vector<SatakePoint>& pts, Box box);

BiSeries expected_l_product(const ZetaCase& c, const std::vector<SatakePoint>& pts, Box box);
std::string expected_label(const ZetaCase& c);

IdentityReport verify_zeta(const ZetaCase& c, Box box, int trials, std::uint64_t seed);

}  // namespace lz
