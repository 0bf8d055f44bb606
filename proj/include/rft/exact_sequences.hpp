// Short exact sequences of based complexes, the induced long exact
// homology sequence viewed as an acyclic based complex, and the
// multiplicativity law for torsion.

#pragma once

#include <random>
#include <vector>

#include "rft/torsion.hpp"

namespace rft {

struct LiftFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompatibleBases : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotExact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 0 -> A -> B -> D -> 0 with per-degree matrices for the inclusion i and
/// projection pi. All three complexes have the same length.
struct ChainSES {
    BasedChainComplex a, b, d;
    std::vector<Matrix> i;   // i[p]: dim B_p x dim A_p
    std::vector<Matrix> pi;  // pi[p]: dim D_p x dim B_p
};

/// Shape checks, chain-map identities, and per-degree exactness
/// (i injective, pi surjective, ker pi = im i).
ValidationReport validate_ses(const ChainSES& s);

/// For each degree, lift the standard basis of D_p through pi
/// (deterministic solve) and return the transition determinant
/// [c^A_p join lift(c^D_p) -> c^B_p]. Bases are compatible iff every
/// value is +-1.
std::vector<Rational> compatible_bases_check(const ChainSES& s);

/// Matrix of the connecting map H_p(D) -> H_{p-1}(A) in the homology
/// bases carried by ha, hd: column j holds the coordinates of
/// delta[d_j] = [i^{-1}(boundary of a lift of d_j)].
Matrix connecting_homomorphism(const ChainSES& s, const HomologyData& ha,
                               const HomologyData& hd, std::size_t p);
/// Same with randomized lift choices; must return the identical matrix.
Matrix connecting_homomorphism(const ChainSES& s, const HomologyData& ha,
                               const HomologyData& hd, std::size_t p,
                               std::mt19937_64& rng);

/// The long exact sequence as a based complex of length 3n+2:
/// C_{3p} = H_p(D), C_{3p+1} = H_p(B), C_{3p+2} = H_p(A), with boundary
/// maps pi_*, i_*, delta in the given homology bases.
struct LongExactSequence {
    BasedChainComplex complex;
    struct SlotTag {
        std::size_t degree;  // p of the homology group in this slot
        char which;          // 'A', 'B' or 'D'
    };
    std::vector<SlotTag> degree_tags;  // one per slot, ascending
};

LongExactSequence build_long_exact_sequence(const ChainSES& s, const HomologyData& ha,
                                            const HomologyData& hb,
                                            const HomologyData& hd);

/// Torsion of the long exact sequence (acyclic, empty homology bases).
/// Throws NotExact when the complex is not acyclic.
Rational corrective_term(const LongExactSequence& les);

struct MultiplicativityReport {
    Rational torsion_a, torsion_b, torsion_d, corrective;
    std::vector<Rational> compatibility;  // per-degree transition dets
    int sign = 1;        // predicted sign (-1)^e from the rank data
    bool signed_equal = false;            // T(B) = sign T(A) T(D) T(H) exactly
    bool abs_equal = false;               // equality of absolute values
    bool equal = false;  // abs_equal, and signed_equal when all dets are +1
};

/// Evaluates both sides of T(B) = (-1)^e T(A) T(D) T(H), where
/// e = sum_p [dim D_p * b_{p-1}(A) + z_p(A) z_{p+1}(D)] with z the cycle
/// dimensions and b the betti numbers. Requires every compatibility
/// determinant to be +-1 (throws IncompatibleBases).
MultiplicativityReport verify_multiplicativity(const ChainSES& s, const HomologyData& ha,
                                               const HomologyData& hb,
                                               const HomologyData& hd);
MultiplicativityReport verify_multiplicativity(const ChainSES& s);

/// Block direct sum, A-block first; shorter complex padded with zero
/// degrees at the top.
BasedChainComplex direct_sum(const BasedChainComplex& a, const BasedChainComplex& d);

/// The canonical split sequence 0 -> A -> A (+) D -> D -> 0.
ChainSES direct_sum_ses(const BasedChainComplex& a, const BasedChainComplex& d);

}  // namespace rft
