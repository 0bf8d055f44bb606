// Based chain complexes over the rationals, homology with explicit
// representatives, and the boundary/homology/section splitting of each
// chain space.

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rft/matrix.hpp"

namespace rft {

struct InvalidComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentHomologyData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite chain complex 0 -> C_n -> ... -> C_0 -> 0 whose preferred basis
/// in each degree is the standard coordinate basis (the geometric basis
/// when the complex comes from a cell decomposition).
class BasedChainComplex {
public:
    BasedChainComplex() : dims_{0} {}
    /// dims = (m_0, ..., m_n); boundaries[p-1] is the matrix of
    /// d_p : C_p -> C_{p-1}, shape m_{p-1} x m_p, for p = 1..n.
    BasedChainComplex(std::vector<std::size_t> dims, std::vector<Matrix> boundaries,
                      std::vector<std::vector<std::string>> cell_labels = {});

    std::size_t length() const { return dims_.size() - 1; }
    /// Chain dimension; degrees outside 0..n are the zero space.
    std::size_t dim(long p) const {
        return (p < 0 || p >= static_cast<long>(dims_.size())) ? 0
                                                               : dims_[static_cast<std::size_t>(p)];
    }
    const std::vector<std::size_t>& dims() const { return dims_; }

    /// Matrix of d_p, with the zero-space shapes at p <= 0 and p > n.
    Matrix boundary(long p) const;

    const std::vector<std::vector<std::string>>& cell_labels() const { return cell_labels_; }

    std::size_t total_dim() const;

    bool operator==(const BasedChainComplex& other) const = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<Matrix> boundaries_;  // index p-1 holds d_p
    std::vector<std::vector<std::string>> cell_labels_;
};

struct ValidationReport {
    bool ok = true;
    std::string message;
    std::optional<std::size_t> degree;
};

/// Shape checks plus d_p o d_{p+1} = 0 in every degree; reports the first
/// failing degree instead of throwing.
ValidationReport validate(const BasedChainComplex& c);

struct DegreeHomology {
    std::size_t betti = 0;
    OrderedBasis cycle_basis;       // Z_p
    OrderedBasis boundary_basis;    // b_p, columns of d_{p+1} at pivots
    std::vector<std::size_t> boundary_preimages;  // columns of d_{p+1}
    OrderedBasis homology_reps;     // cycle vectors representing h_p
};

struct HomologyData {
    std::vector<DegreeHomology> degrees;  // size n+1

    std::size_t betti(std::size_t p) const {
        return p < degrees.size() ? degrees[p].betti : 0;
    }
    std::vector<std::size_t> betti_vector() const;
    bool acyclic() const;
};

/// Homology with deterministic default representatives: b_p is completed
/// to a basis of Z_p by the first independent kernel vectors in index
/// order. Throws InvalidComplex when validate fails.
HomologyData homology(const BasedChainComplex& c);

/// Replace the degree-p representatives by user-supplied cycle vectors
/// (columns). Throws InconsistentHomologyData unless they are cycles and
/// independent modulo boundaries.
void set_homology_reps(const BasedChainComplex& c, HomologyData& h, std::size_t p,
                       Matrix reps);

/// Checks h against c: betti consistency, cycles, independence mod B_p.
void check_consistent(const BasedChainComplex& c, const HomologyData& h);

struct DegreeSplitting {
    OrderedBasis boundary_basis;    // b_p
    OrderedBasis lifted_homology;   // l_p(h_p)
    OrderedBasis section_vectors;   // s_p(b_{p-1}), d_p-preimages of b_{p-1}
    Matrix combined;                // [b_p | l_p(h_p) | s_p(b_{p-1})], m_p x m_p
};

struct HomologySplitting {
    std::vector<DegreeSplitting> degrees;
};

/// Deterministic splitting: sections through the recorded preimage
/// columns, homology lifts straight from h.
HomologySplitting split(const BasedChainComplex& c, const HomologyData& h);

/// Randomized but equally valid splitting choices: the boundary bases are
/// mixed by random invertible matrices, sections perturbed by kernel
/// vectors, and homology lifts by boundaries. Torsion must not see the
/// difference.
HomologySplitting split(const BasedChainComplex& c, const HomologyData& h,
                        std::mt19937_64& rng);

}  // namespace rft
