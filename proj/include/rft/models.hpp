// Built-in manifold chain models, connected-sum assembly along a sphere
// seam, intersection-pairing torsion, and the verification reports for
// the disk, punctured-manifold, connected-sum and prime-decomposition
// identities.

#pragma once

#include <optional>
#include <string>

#include "rft/exact_sequences.hpp"
#include "rft/symplectic.hpp"

namespace rft {

struct UnknownModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingPairings : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentCorrespondence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateStep : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedDimension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A named cellular model together with preferred homology
/// representatives and, for even-dimensional models, the intersection
/// pairing matrices on homology (index p = 0..dim/2, shape
/// betti_p x betti_{dim-p}).
struct ManifoldModel {
    std::string name;
    std::size_t dim = 0;
    BasedChainComplex complex;
    HomologyData preferred_h;
    std::vector<Matrix> pairings;

    bool has_pairings() const { return !pairings.empty(); }
};

/// Inventory: point, disk(m >= 2), sphere_minimal(n >= 1),
/// sphere_simplicial(1 <= n <= 3, boundary of the cross-polytope),
/// s3xs3, connected_sum_s3xs3(k >= 1). Throws UnknownModel.
ManifoldModel model(const std::string& name,
                    std::optional<long> param = std::nullopt);

/// Boundary of the tetrahedron: a second simplicial S^2, used to test
/// cell-decomposition independence against the octahedron.
ManifoldModel tetrahedron_sphere_model();

Rational manifold_torsion(const ManifoldModel& m);
Rational manifold_torsion(const ManifoldModel& m, const HomologyData& h);

/// Closed-form torsion from the intersection pairings: 1 in odd
/// dimensions; in even dimension n
///   prod_{p<n/2} |det P_p|^{(-1)^{p+1}} * sqrt(|det P_mid|)^{(-1)^{n/2+1}}.
/// Throws MissingPairings / NonSquareDeterminant.
Rational intersection_torsion(const ManifoldModel& m);

/// True iff |torsion| is unchanged when m1's preferred homology classes
/// are transported to m2 via the supplied cycle representatives (one
/// matrix of columns per degree, written in m2's chain coordinates).
bool cell_independence_check(const ManifoldModel& m1, const ManifoldModel& m2,
                             const std::vector<Matrix>& transported_reps);

/// A connected sum W = L # R presented by the Mayer-Vietoris sequence
/// 0 -> C(seam) -> C(L - disk) (+) C(R - disk) -> C(W) -> 0.
struct DecomposedModel {
    ManifoldModel whole;
    BasedChainComplex left, right;  // punctured pieces
    BasedChainComplex seam;         // S^{dim-1}
    ChainSES ses;
};

/// dim 2: the octahedron split into closed hemispheres along the
/// equator square. dim 6: abstract wedge-model assembly; left may be a
/// previous connected sum (connected_sum_s3xs3(m)), right must be
/// s3xs3. Throws UnsupportedDimension otherwise.
DecomposedModel assemble_connected_sum(const ManifoldModel& left,
                                       const ManifoldModel& right);

/// Homology bases for the pieces and the seam, whole bases fixed:
/// seam top class via the connecting map image, natural summand classes
/// for the pieces, and one determinant normalization so that the
/// corrective term of the sequence is exactly 1. Throws DegenerateStep.
struct RecipeBases {
    HomologyData left, right, seam, whole;
};
RecipeBases proof_recipe_bases(const DecomposedModel& d);

struct ConnectedSumReport {
    Rational whole, left, right, seam, corrective;
    bool equal = false;      // whole == left * right / seam exactly
    bool abs_equal = false;
};
/// Checks T(W) = T(L - disk) T(R - disk) T(seam)^{-1} in recipe bases.
ConnectedSumReport verify_connected_sum_theorem(const DecomposedModel& d);

struct PuncturedReport {
    Rational punctured, disk, whole, seam, corrective;
    bool equal = false;      // punctured == whole * seam and disk == 1
    bool abs_equal = false;
};
/// Builds 0 -> C(S^{dim-1}) -> C(M - disk) (+) C(disk) -> C(M) -> 0 with
/// recipe bases and checks T(M - disk) = T(M) T(S^{dim-1}).
/// Supported: sphere_simplicial(2) (hemisphere split) and s3xs3.
PuncturedReport verify_punctured_theorem(const ManifoldModel& m);

struct PrimeDecompositionReport {
    std::vector<ConnectedSumReport> steps;  // one per assembly
    Rational total = 1;            // |T| of the final sum in recipe bases
    Rational summand_product = 1;  // product of |T| of the summands
    bool sphere_factors_trivial = false;
    bool equal = false;
};
/// Assembles k successive sums of s3xs3 summands, checking the
/// connected-sum identity at every step and the product formula
/// |T(W_k)| = prod_j |T(M_j)| at the end. 1 <= k <= 4.
PrimeDecompositionReport verify_prime_decomposition(std::size_t k);

/// The minimal even product/sum models as symplectic chain complexes
/// (used to cross-validate the entered pairings against the axioms).
SymplecticChainComplex as_symplectic(const ManifoldModel& m);

}  // namespace rft
