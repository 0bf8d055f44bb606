// Milnor's Reidemeister-Franz torsion of a based complex and the
// change-of-basis law.

#pragma once

#include <random>
#include <vector>

#include "rft/chain_complex.hpp"

namespace rft {

/// Per-degree determinants of the combined basis in preferred coordinates,
/// kept so reports can show every factor of the alternating product.
struct TorsionBreakdown {
    std::vector<Rational> degree_factors;  // det of the combined basis, degree p
    Rational value = 1;                    // prod det^{(-1)^{p+1}}
};

/// Torsion with respect to the standard preferred bases and the homology
/// bases carried by h. Orientation is pinned by the acyclic two-term
/// complex 0 -> Q --[A]--> Q -> 0 having torsion det(A)^{-1}.
TorsionBreakdown reidemeister_torsion_breakdown(const BasedChainComplex& c,
                                                const HomologyData& h);
Rational reidemeister_torsion(const BasedChainComplex& c, const HomologyData& h);
/// Same with default homology representatives.
Rational reidemeister_torsion(const BasedChainComplex& c);

/// Same value, computed through randomized splitting choices; exists so
/// the independence of b_p, s_p, l_p can be tested rather than assumed.
Rational reidemeister_torsion(const BasedChainComplex& c, const HomologyData& h,
                              std::mt19937_64& rng);

/// Transition determinant between two homology bases given by cycle
/// representatives (columns), computed modulo boundaries in degree p.
Rational homology_transition(const BasedChainComplex& c, const HomologyData& h,
                             std::size_t p, const Matrix& old_reps,
                             const Matrix& new_reps);

/// Predicts the torsion after changing preferred and homology bases:
///   t' = t * prod_p ([h_p -> h'_p] / [c_p -> c'_p])^{(-1)^p}.
/// Bases are given per degree; empty vectors mean "unchanged".
Rational change_of_basis(const BasedChainComplex& c, const HomologyData& h,
                         const Rational& t,
                         const std::vector<OrderedBasis>& old_c,
                         const std::vector<OrderedBasis>& new_c,
                         const std::vector<Matrix>& old_h_reps,
                         const std::vector<Matrix>& new_h_reps);

}  // namespace rft
