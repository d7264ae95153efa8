#pragma once

#include <vector>

#include "fuzzytop/path.hpp"

namespace fuzzytop {

// Pointwise path identities, each checked exactly at u, eta, x = i/grid.

/// Reverse(H o gamma_t) == H o (Reverse gamma)_t, pointwise and as normal forms.
bool law_htransform_reverse(const PathExpr& gamma, const Rational& t, long grid);
/// H o (g1 * ... * gn)_t == (H o g1_t) * ... * (H o gn_t).
bool law_htransform_concat(const std::vector<PathExpr>& parts, const Rational& t, long grid);
/// chi(rho,s,t)(eta,x) == chi(rho,t,s)(eta,1-x).
bool law_chi_flip(const PathExpr& rho, const Rational& s, const Rational& t, long grid);
/// chi(eta,0) == (H o rho_s)(eta) and chi(eta,1) == (H o rho_t)(eta).
bool law_boundary_restrictions(const PathExpr& rho, const Rational& s, const Rational& t, long grid);
/// chi(gamma)(a + eta (b-a), x) == chi(gamma')(eta, x) for the restriction gamma'.
bool law_path_restriction(const PathExpr& gamma, const Rational& s, const Rational& t, const Rational& a,
                          const Rational& b, long grid);
/// chi of a constant path does not depend on eta.
bool law_constant(const CylPoint& p, const Rational& s, const Rational& t, long grid);
/// p^-1 * (H o rho_s) * q is well formed and shares both endpoints with H o rho_t.
bool law_relative_endpoints(const PathExpr& rho, const Rational& s, const Rational& t);
/// chi(gamma * delta) is the halving pasting of chi(gamma) and chi(delta).
bool law_functoriality_pasting(const PathExpr& gamma, const PathExpr& delta, const Rational& s, const Rational& t,
                               long grid);

}  // namespace fuzzytop
