#pragma once

// Verifiers for the G-function closed form, the GL/Sp character product
// identities and the Cauchy-type expansions.

#include "lz/exactring.hpp"
#include "lz/lfactor.hpp"
#include "lz/report.hpp"
#include "lz/rootchar.hpp"

#include <cstdint>

namespace lz {

// chi(k) chi(j) = sum_t chi(max+t, min-t, 0..) on GL(n); ratio form on both
// sides plus a weight-sum oracle.
IdentityReport check_schur_gl(int n, int k, int j, const SatakePoint& p);
// chi(k)chi(j) = chi(k-1)chi(j-1) + sum_p chi(k+j-p, p, 0..) on Sp(2n).
// Accepts an Sp point or a GSp point (sigma is divided out).
IdentityReport check_schur_sp(int n, int k, int j, const SatakePoint& p);
SatakePoint normalize_gsp(const SatakePoint& p);

// Rectangle sweeps: every (n, k, j) cell at `seeds` random points.
IdentityReport sweep_schur_gl(int n_lo, int n_hi, int k_lo, int k_hi, int seeds, std::uint64_t seed);
IdentityReport sweep_schur_sp(int n_lo, int n_hi, int k_lo, int k_hi, int seeds, std::uint64_t seed);

// G(a, s, chi) for ord(a) = N, as a Laurent polynomial in (x, y, u).
// `m` is the exponent of the monomial standing for q^{-s} (x^2 by default);
// callers substitute other arguments through it. Zero for N < 0.
Laurent3 g_function(int N, const Rational& chi, const Exp3& m = {2, 0, 0});
// the form |a|^s sum_k (q^{-1+2s} chi^{-1})^k before the change of variables
Laurent3 g_intermediate(int N, const Rational& chi, const Exp3& m = {2, 0, 0});
// r-th summand of the closed form
Laurent3 g_term(int N, int r, const Rational& chi, const Exp3& m = {2, 0, 0});

IdentityReport check_g_equivalence(int ord_max, const std::vector<Rational>& chis);
// three chi values drawn from the seed
IdentityReport check_g_equivalence(int ord_max, std::uint64_t seed);

IdentityReport check_cauchy(CauchyCase c, int rank, Box box, int trials, std::uint64_t seed);

}  // namespace lz
