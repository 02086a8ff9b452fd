#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qgor/simplicial_complex.hpp"

namespace qgor {

/// Reads the facet file format: one facet per line as whitespace-separated
/// positive vertex ids, `#` starting a comment, and an optional `n=<int>`
/// header fixing the ambient vertex count (default: the largest id seen).
/// Throws ParseError carrying the 1-based line number.
SimplicialComplex parse_facet_file(std::string_view text);

/// Reads and parses a file. Throws Error(InvalidArgument) when it cannot be
/// opened, ParseError otherwise.
SimplicialComplex read_facet_file(const std::filesystem::path& path);

/// Writes the `n=` header and the facets in canonical order; parsing the
/// result reproduces the complex.
std::string format_facet_file(const SimplicialComplex& complex);

}  // namespace qgor
