#pragma once

// Exact matrices over Q (p = 0) or F_p, the classical similitude groups,
// the embeddings and maps between them, low-rank GSpin pinnings, and the
// finite-field orbit / stabilizer checks.

#include "lz/exactring.hpp"
#include "lz/report.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lz {

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, long p = 0);

    static Mat identity(int n, long p = 0);
    static Mat diag(const std::vector<Rational>& d, long p = 0);
    static Mat from_rows(const std::vector<std::vector<long>>& rows, long p = 0);
    static Mat unit(int rows, int cols, int i, int j, long p = 0);  // E_ij, 0-based

    int rows() const { return r_; }
    int cols() const { return c_; }
    long field() const { return p_; }

    const Rational& operator()(int i, int j) const { return a_[i * c_ + j]; }
    void set(int i, int j, const Rational& v);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rational& s) const;
    Mat transpose() const;
    Rational det() const;
    int rank() const;
    std::optional<Mat> inverse() const;
    Mat block(int r0, int c0, int nr, int nc) const;
    void put(int r0, int c0, const Mat& b);
    bool is_zero() const;
    bool is_square_matrix() const { return r_ == c_; }
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    // representative of v in the field (canonical residue mod p)
    Rational reduce(const Rational& v) const;
    std::string str() const;

private:
    int r_ = 0, c_ = 0;
    long p_ = 0;
    std::vector<Rational> a_;
};

Rational field_reduce(const Rational& v, long p);
bool field_is_square(const Rational& v, long p);

Mat kron(const Mat& a, const Mat& b);
Mat w_mat(int n, long p = 0);
Mat j_mat(int two_n, long p = 0);
// g^* = w ^t g^{-1} w and g_* = g / det g
Mat upper_star(const Mat& g);
Mat lower_star(const Mat& g);
Mat block_diag(const std::vector<Mat>& blocks);

// lambda with ^t g F g = lambda F, lambda != 0
std::optional<Rational> similitude(const Mat& g, const Mat& form);

enum class GroupKind {
    GL,
    GL4prime,          // det a square
    Sp,
    GSp,
    SO,
    GSO,
    GO,                // same equation as GSO (no determinant condition)
    S_GL2_3,           // det(g1 g2 g3) = 1
    S_GL2_GSO4,        // det g lambda(h) = 1
    Sprime_GSp4_GL4,   // lambda(g) det h = 1
    Sprime_GSp4_GL3,   // lambda(g1) det g2' = 1
    S2_GL2_4,          // det g1 = det g2, det g3 = det g4
    Sstar_GL2_5,       // det g1 = det g2, det(g2 g3 g4) = 1, det g4 = det g5
    P12,               // parabolic of type (11, 1) in GL12
};

struct GroupSpec {
    GroupKind kind;
    int n = 0;  // matrix size for single-matrix groups

    std::string name() const;
};

// Similitude (GSp/GSO/GO), 1 (Sp/SO), det (GL, GL4'), or 1 for the linked
// product groups when every equation holds; nullopt otherwise.
std::optional<Rational> group_membership(const std::vector<Mat>& elems, const GroupSpec& g);
inline std::optional<Rational> group_membership(const Mat& m, const GroupSpec& g)
{
    return group_membership(std::vector<Mat>{m}, g);
}

// ---- maps

enum class MapName { j_nk, iota_n, kron, J_D4, J_D5, iota_D4, M2, wedge2prime, ext2, rho };

std::string to_string(MapName m);
MapName parse_map_name(const std::string& s);
std::vector<MapName> all_maps();

struct MapSourceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// j_nk uses target size n (default k + 2). `verbatim` selects the printed
// constants where they differ from the working ones (J_D5 block C, gamma_rho).
Mat apply_map(MapName m, const std::vector<Mat>& in, int n = 0, bool verbatim = false);
Mat minor_oracle_M2(const Mat& g);  // 6x6 minors computed entry by entry

GroupSpec map_source(MapName m);
GroupSpec map_codomain(MapName m);

// one-parameter root elements I + r X of the group preserving `form`, with
// X = E_ij +- E_{j'i'} (or E_ij alone); form empty = GL(n)
struct RootElement {
    int i, j;
    int sign;    // coefficient of the partner entry, 0 if none
    Mat at(const Rational& r) const;
    int n;
    long p;
};
std::vector<RootElement> root_elements(int n, const std::optional<Mat>& form, long p);

// random group elements built from short words in root and torus elements
class Sampler {
public:
    Sampler(long p, std::uint64_t seed);
    long p() const { return p_; }
    Rational nonzero();
    Rational any();
    Mat gl(int n);
    Mat gl_with_det(int n, const Rational& det);
    Mat gsp(int n2);
    Mat gso(int n);
    std::vector<Mat> source(MapName m, int n = 0);
    std::mt19937_64& rng() { return rng_; }

private:
    long p_;
    std::mt19937_64 rng_;
    Mat word(int n, const Mat& form, bool symplectic);
};

IdentityReport check_map_properties(MapName m, long p, int samples, std::uint64_t seed);

// ---- pinnings

enum class PinGroup { GSpin4, GSpin6 };
std::string to_string(PinGroup g);
IdentityReport check_pinning(PinGroup g, long p, int samples, std::uint64_t seed);

// ---- orbits

enum class OrbitAction { GL2GL2_on_Mat1x4, GSp4GL3_on_Mat1x12 };
std::string to_string(OrbitAction a);

struct OrbitInfo {
    long size = 0;
    std::vector<int> rep;
    std::vector<int> invariant;
};

struct OrbitResult {
    OrbitAction action;
    long p;
    long states = 0;
    long visited = 0;
    int generators = 0;
    std::vector<OrbitInfo> orbits;
    bool invariant_constant = true;
    // orbit label of each named representative (eta_0.. or xi_0..)
    std::vector<int> rep_orbit;
    std::vector<std::vector<int>> rep_invariant;
    // reshape conventions Mat1x4 -> Mat2x2 under which rank is orbit-constant
    std::vector<std::string> rank_reshapes;
};

OrbitResult enumerate_orbits(OrbitAction a, long p);
IdentityReport check_orbits(OrbitAction a, long p);

// action matrices (right action on row vectors) of one generator set
std::vector<Mat> orbit_generators(OrbitAction a, long p);
// (rank(^tX j4 X), rank X) with X[i][a] = (v D)[4a + i], D = diag(I10, -I2)
std::vector<int> xi_invariant(const std::vector<int>& v, long p);

// ---- stabilizers

enum class StabFamily { gl4prime, gsp4, eta, xi };
std::string to_string(StabFamily l);
StabFamily parse_stab_family(const std::string& s);
int stab_rep_count(StabFamily l);

// two-sided sampling check for one representative (1-based index)
IdentityReport check_stabilizers(StabFamily l, int rep, long p, int samples, std::uint64_t seed);

// double coset representatives gamma_r / omega_t as 12x12 matrices (1-based)
Mat coset_rep(StabFamily l, int rep, long p);

}  // namespace lz
