#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stanley/complex.hpp"
#include "stanley/filtration.hpp"
#include "stanley/ideal.hpp"
#include "stanley/partitions.hpp"
#include "stanley/shelling.hpp"

// Text and JSON formats. All parsers throw ParseError with a 1-based line
// number where one is meaningful.
namespace stanley::io {

using json = nlohmann::json;

/// "x2" < "x10"; digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

std::string read_file(const std::string& path);

// --- complexes ----------------------------------------------------------------
//
// Text: one facet per line, whitespace-separated labels, '#' comments, "-" for
// the empty facet. If every line is a single token and some token is longer
// than one character, each character is a label ("124" = {1, 2, 4}). Labels
// are numbered in natural order.

SimplicialComplex parse_complex_text(const std::string& text);
/// {"n": N, "labels": [...], "facets": [[label, ...], ...]}; "labels" optional.
SimplicialComplex parse_complex_json(const json& j);
/// JSON if the first non-blank character is '{', text otherwise.
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex(const std::string& path);

json complex_to_json(const SimplicialComplex& c);
std::string complex_to_text(const SimplicialComplex& c);

/// Labels of a face; compact ("124") when all labels are single characters.
std::string face_string(Face f, const SimplicialComplex& c);
json face_json(Face f, const SimplicialComplex& c);
/// Whitespace-separated or compact labels, "-" or "" for ∅.
Face parse_face(const std::string& text, const SimplicialComplex& c, std::size_t line = 0);

// --- ideals -------------------------------------------------------------------
//
// Text: one monomial per line, "x1^2*x3" or "x1 x1 x3", "1" for the unit.
// An optional first line "vars: a b c" fixes the ring; otherwise the ring is
// the naturally sorted set of variables that occur.

Monomial parse_monomial(const std::string& text, const Ring& ring, std::size_t line = 0);
/// Comma-separated monomials, e.g. "x1^2,x2,x3*x4".
std::vector<Monomial> parse_monomial_list(const std::string& text, const Ring& ring);
MonomialIdeal parse_ideal_text(const std::string& text);
/// {"vars": [...], "gens": [[[var, exp], ...], ...]}
MonomialIdeal parse_ideal_json(const json& j);
MonomialIdeal parse_ideal(const std::string& text);
MonomialIdeal read_ideal(const std::string& path);

json monomial_json(const Monomial& u, const Ring& ring);
Monomial parse_monomial_json(const json& j, const Ring& ring);
json ideal_to_json(const MonomialIdeal& ideal);
std::string ideal_to_text(const MonomialIdeal& ideal);
json prime_json(const MonomialPrime& p, const Ring& ring);

// --- partitions, decompositions, shellings, filtrations -----------------------

/// One interval per line, "F : G".
Partition parse_partition_text(const std::string& text, const SimplicialComplex& c);
std::string partition_to_text(const Partition& p);
json partition_to_json(const Partition& p);

/// [{"u": [[var, exp], ...], "Z": [var, ...]}, ...]
StanleyDecomposition parse_decomposition_json(const json& j, const MonomialIdeal& ideal);
json decomposition_to_json(const StanleyDecomposition& d);

/// One facet per line.
ShellingOrder parse_shelling_text(const std::string& text, const SimplicialComplex& c);
std::string shelling_to_text(const ShellingOrder& s, const SimplicialComplex& c);
json shelling_to_json(const ShellingOrder& s, const SimplicialComplex& c);

/// [{"w": [[var, exp], ...], "P": [var, ...]}, ...]
PrimeFiltration parse_filtration_json(const json& j, const MonomialIdeal& ideal);
json filtration_to_json(const PrimeFiltration& f);

/// Parses JSON text, converting errors to ParseError with a line number.
json parse_json(const std::string& text);

}  // namespace stanley::io
