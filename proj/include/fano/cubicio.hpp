#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano/geometry.hpp"
#include "fano/poly.hpp"

namespace fano {

/// Cubic file format: a JSON document
///   { "variables": 5, "field": "Q(w)",
///     "terms": [ { "exponents": [e1..e5], "coeff": "<coefficient text>" }, ... ] }
/// Every term must have exponent sum 3; duplicate monomials are an error.
Cubic parse_cubic_text(const std::string& text, const std::string& source_name = "<input>");
Cubic parse_cubic_file(const std::string& path);

/// Canonical serialization (terms in grlex order, canonical coefficient
/// strings, 2-space indent).  Parsing it back yields an equal Cubic.
std::string serialize_cubic(const Cubic& f);

/// FNV-1a 64-bit digest of the canonical serialization, rendered as
/// "fnv1a64:<16 hex digits>".  Semantic: whitespace variations of the same
/// cubic share a digest.
std::string cubic_digest(const Cubic& f);

std::uint64_t fnv1a64(const std::string& data);

/// Seeds file: one point per line, five coefficients separated by commas or
/// whitespace; '#' starts a comment.
std::vector<ProjectivePoint> parse_seeds_text(const std::string& text);
std::vector<ProjectivePoint> parse_seeds_file(const std::string& path);

std::string read_file(const std::string& path);  // throws ParseError if unreadable
void write_file(const std::string& path, const std::string& content);

}  // namespace fano
