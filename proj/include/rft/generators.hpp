// Seeded random instances used by the verification suites: small based
// complexes, acyclic complexes, and short exact sequences that are exact
// and +1-compatible by construction.

#pragma once

#include <random>

#include "rft/exact_sequences.hpp"

namespace rft {

Matrix random_entries(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                      long lo = -3, long hi = 3);
Matrix random_invertible(std::mt19937_64& rng, std::size_t n);
/// Invertible with determinant +-1 (product of elementary row operations).
Matrix random_unimodular(std::mt19937_64& rng, std::size_t n);

/// Valid complex with length in 1..max_len and degree dimensions in
/// 1..max_dim.
BasedChainComplex random_complex(std::mt19937_64& rng, std::size_t max_len = 4,
                                 std::size_t max_dim = 6);

/// Acyclic complex: a direct sum of two-term invertible blocks, mixed by
/// unimodular basis changes in every degree.
BasedChainComplex random_acyclic_complex(std::mt19937_64& rng, std::size_t max_len = 4,
                                         std::size_t max_block = 2);

/// Random SES over random A and D of equal length: B = A (+) D as graded
/// spaces with boundary [[dA, K], [0, dD]], K_p = dA_p L_p - L_{p-1} dD_p
/// for random L. Exact and +1-compatible by construction.
ChainSES random_ses(std::mt19937_64& rng, bool acyclic = false);

}  // namespace rft
