// Symplectic chain complexes of length q = 2 mod 4: degree-paired
// nondegenerate pairings compatible with the boundary, their induced
// homology pairings, and the closed-form torsion they determine.

#pragma once

#include <random>
#include <vector>

#include "rft/chain_complex.hpp"

namespace rft {

struct NotOmegaCompatible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSquareDeterminant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// pairings[p] is the matrix W_p of w_{p,q-p} : C_p x C_{q-p} -> Q,
/// w(x, y) = x^T W_p y, stored for p = 0 .. q/2. The remaining pairings
/// are determined by antisymmetry: w_{q-p,p}(y,x) = (-1)^{p(q-p)} w(x,y).
struct SymplecticChainComplex {
    BasedChainComplex complex;  // length q, q = 2 mod 4
    std::vector<Matrix> pairings;
};

/// Structural checks: q = 2 mod 4; pairing shapes; boundary
/// compatibility d_{p+1}^T W_p = (-1)^{p+1} W_{p+1} d_{q-p};
/// antisymmetry of the middle pairing; nondegeneracy of every pairing.
ValidationReport validate_symplectic(const SymplecticChainComplex& s);

/// Result of certifying bases against the pairing normal forms:
/// identity off the middle, and in the middle the block form
/// [[0, I], [I, 0]] (variant 'S') or its antisymmetric counterpart
/// [[0, I], [-I, 0]] (variant 'A').
struct OmegaCompatibility {
    bool compatible = false;
    char middle_variant = 0;  // 'S', 'A', or 0 when incompatible
};

/// Checks the pairing matrices in the supplied bases (one per degree
/// 0..q) against the normal forms. Throws DimensionMismatch on shape
/// errors.
OmegaCompatibility check_omega_compatible(const SymplecticChainComplex& s,
                                          const std::vector<OrderedBasis>& bases);

/// Bases in which the pairings take normal form: standard bases in
/// degrees p < q/2, W_p^{-1}-columns opposite them, and a symplectic
/// basis (skew Gram-Schmidt) in the middle degree.
std::vector<OrderedBasis> omega_normalize(const SymplecticChainComplex& s);

/// Matrix of the pairing on homology classes: reps_p^T W_p reps_qmp.
/// Throws InconsistentHomologyData unless both sides are cycles
/// (boundary compatibility then makes the value class-independent).
Matrix induced_homology_pairing(const SymplecticChainComplex& s, std::size_t p,
                                const Matrix& reps_p, const Matrix& reps_qmp);

/// Pfaffian of an antisymmetric matrix (recursive expansion; intended
/// for the small middle blocks). Throws NonSquare on shape errors.
Rational pfaffian(const Matrix& m);

/// Closed-form torsion
///   | prod_{p<q/2} det[w_p]^{(-1)^{p+1}} * sqrt(det[w_mid])^{(-1)^{q/2+1}} |
/// evaluated on the homology pairings in the bases carried by h. The
/// middle root is |Pfaffian| for antisymmetric pairings, else the exact
/// rational square root (NonSquareDeterminant when none exists). Throws
/// NotOmegaCompatible when the chain bases fail the normal-form check or
/// a homology pairing is degenerate.
Rational symplectic_torsion(const SymplecticChainComplex& s, const HomologyData& h);
Rational symplectic_torsion(const SymplecticChainComplex& s);

/// Seeded random q = 2 instance that is valid and omega-compatible in
/// the standard bases by construction.
SymplecticChainComplex random_symplectic_q2(std::mt19937_64& rng);

}  // namespace rft
