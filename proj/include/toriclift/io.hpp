#pragma once

#include <iosfwd>
#include <string>

#include "toriclift/lifting.hpp"
#include "toriclift/simplicial_complex.hpp"

namespace toriclift {

// Complex text format: '#' starts a comment, the first non-comment line is
// m, every following non-comment line is one facet as space-separated
// 1-based vertex indices. Files ending in .json (or starting with '{') use
// the JSON mirror {"m": int, "facets": [[int]], "labels": {"1": "name", ...}}.
SimplicialComplex read_complex_file(const std::string& path);
SimplicialComplex parse_complex_text(std::istream& in);
SimplicialComplex parse_complex_json(const std::string& text);
std::string complex_to_text(const SimplicialComplex& k);
std::string complex_to_json(const SimplicialComplex& k);

// Matrix files: text rows of space-separated integer entries, dimensions
// inferred; entries restricted to {-1,0,1}. Characteristic-map files may
// carry a "complex: <name>" header line, recorded but not resolved.
struct MatrixFile {
    IntMatrix entries;
    std::string complex_ref;
};
MatrixFile read_matrix_file(const std::string& path);
MatrixFile parse_matrix_text(std::istream& in);

// Entries must be 0/1.
BitMatrix to_gf2(const IntMatrix& m);

std::string matrix_to_text(const IntMatrix& m);
std::string matrix_to_text(const BitMatrix& m);

// Certificate JSON: {"matrix", "method", "minors-checked"} plus supporting
// fields (orientation, source matrix, translate flag).
std::string certificate_to_json(const LiftCertificate& cert);

} // namespace toriclift
