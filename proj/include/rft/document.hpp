// Text document format for complexes and short exact sequences.
//
// Complex documents:
//
//   rft-complex 1
//   dims 6 12 8
//   boundary 1
//   <dims[0] rows of dims[1] rational entries, "p/q" or "p">
//   boundary 2
//   ...
//   homology 0          # optional: preferred representatives, dims[0] rows
//   1
//   pairing 0           # optional: intersection pairing matrices
//   1
//   labels 0 v0 v1 ...  # optional cell names
//
// SES documents hold three complexes and the chain maps:
//
//   rft-ses 1
//   complex a
//   dims ...
//   boundary 1
//   ...
//   complex b
//   ...
//   complex d
//   ...
//   map i 0             # dim B_0 rows of dim A_0 entries
//   ...
//   map pi 0            # dim D_0 rows of dim B_0 entries
//   ...
//
// Blank lines and "#" comments are ignored. Matrix blocks end at the next
// keyword line. Shape errors carry the degree; malformed lines carry the
// line number.

#pragma once

#include <optional>
#include <string>

#include "rft/exact_sequences.hpp"

namespace rft {

struct SyntaxError : std::runtime_error {
    std::size_t line;
    SyntaxError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

struct SemanticError : std::runtime_error {
    long degree;
    SemanticError(long p, const std::string& what)
        : std::runtime_error("degree " + std::to_string(p) + ": " + what), degree(p) {}
};

struct ComplexDocument {
    int version = 1;
    BasedChainComplex complex;
    std::vector<std::optional<Matrix>> homology_reps;  // one slot per degree
    std::vector<Matrix> pairings;
    std::vector<std::vector<std::string>> labels;      // one list per degree
};

ComplexDocument parse_complex_document(const std::string& text);
BasedChainComplex parse_complex(const std::string& text);
std::string serialize(const ComplexDocument& doc);

/// Homology of the document's complex with any supplied representative
/// blocks installed as the preferred bases.
HomologyData document_homology(const ComplexDocument& doc);

struct SESDocument {
    int version = 1;
    ChainSES ses;
};

SESDocument parse_ses_document(const std::string& text);
std::string serialize(const SESDocument& doc);

std::string serialize_matrix(const Matrix& m);

}  // namespace rft
