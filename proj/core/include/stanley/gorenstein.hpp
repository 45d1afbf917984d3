#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/ideal.hpp"
#include "stanley/shelling.hpp"

// Codimension-3 Gorenstein monomial ideals through their cyclic template
// (y_i y_{i+1} ... y_{i+m-1} : i = 1..2m+1), indices mod 2m+1.
namespace stanley::gorenstein {

/// The facet [2m+1] \ {a1, a2, a3}; vertices are 1-based here.
struct FacetTriple {
  int a1 = 0;
  int a2 = 0;
  int a3 = 0;

  friend bool operator==(const FacetTriple&, const FacetTriple&) = default;
};

bool is_valid_triple(const FacetTriple& t, int m);
/// 0-based vertex set of the facet.
Face facet_of(const FacetTriple& t, int m);
FacetTriple triple_of(Face facet, int m);
std::string to_string(const FacetTriple& t);

struct Template {
  MonomialIdeal ideal;
  SimplicialComplex complex;
};

/// Ideal in y1..y_{2m+1} and its Stanley-Reisner complex (labels "1".."2m+1").
Template build_template(int m);

/// All triples with a2-a1 < m+1, a3-a2 < m+1, a3-a1 > m, in lex_less order.
std::vector<FacetTriple> facet_triples(int m);

/// F(a) < F(b): b1 < a1, or b1 = a1 and b2 < a2, or a1 = b1, a2 = b2, b3 < a3.
bool lex_less(const FacetTriple& a, const FacetTriple& b);

struct Witness {
  /// 1-based vertex c with G \ H = {c}, c in G \ F.
  int c = 0;
  FacetTriple h;
  /// Which branch of the case analysis fired, e.g. "1(iii)".
  std::string branch;
};

/// For F earlier than G in the lex order: a facet H earlier than G with
/// G \ H = {c} and c in G \ F. Throws if no branch applies.
Witness shelling_witness(const FacetTriple& f, const FacetTriple& g, int m);

/// Facets of the template complex in lex_less order.
ShellingOrder lex_shelling(int m);

/// Template ideal under y_i -> u_i, in `target`.
MonomialIdeal instantiate(int m, const std::vector<Monomial>& u, RingPtr target);

struct Recognition {
  int m = 0;
  std::vector<Monomial> u;
};

/// Finds m and a monomial regular sequence u with I = instantiate(m, u), up to
/// the dihedral symmetry of the cycle. The representative starts at the block
/// holding the smallest variable and turns toward the smaller neighbour.
std::optional<Recognition> recognize(const MonomialIdeal& ideal);

}  // namespace stanley::gorenstein
