#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

/// Coefficient field: the rationals (characteristic 0) or F_p.
class CoefficientField {
 public:
  static CoefficientField rationals() { return CoefficientField(0); }
  /// Throws unless p is prime.
  static CoefficientField prime(std::int64_t p);
  /// "q" or "p:<prime>"
  static CoefficientField parse(const std::string& text);

  std::int64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string to_string() const;

 private:
  explicit CoefficientField(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

struct HomologyProfile {
  /// dimension -> rank of reduced homology, for dimensions -1 .. dim Δ.
  std::map<int, std::int64_t> reduced_betti;

  std::int64_t betti(int i) const {
    auto it = reduced_betti.find(i);
    return it == reduced_betti.end() ? 0 : it->second;
  }
  bool acyclic_below(int k) const;
};

/// Rank of an integer matrix over K (rows of equal length).
std::int64_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, const CoefficientField& k);

HomologyProfile reduced_homology(const SimplicialComplex& c,
                                 const CoefficientField& k = CoefficientField::rationals());

/// Reisner's criterion over every face, ∅ included. `threads` > 1 evaluates
/// links concurrently; the answer does not depend on it.
bool is_cohen_macaulay(const SimplicialComplex& c,
                       const CoefficientField& k = CoefficientField::rationals(), int threads = 1);

/// depth K[Δ] = 1 + max{ j : the j-skeleton is Cohen-Macaulay }.
int depth_ring(const SimplicialComplex& c,
               const CoefficientField& k = CoefficientField::rationals(), int threads = 1);

/// depth S/I through the polarization: depth of Δ(I^p) minus the added variables.
int depth_ideal(const MonomialIdeal& ideal,
                const CoefficientField& k = CoefficientField::rationals(), int threads = 1);

struct BuchsbaumVerdict {
  bool buchsbaum = false;
  std::string reason;
};

/// Pure and every vertex link Cohen-Macaulay.
BuchsbaumVerdict is_buchsbaum(const SimplicialComplex& c,
                              const CoefficientField& k = CoefficientField::rationals());

/// Number of facets of maximal dimension, e(K[Δ]).
std::int64_t multiplicity(const SimplicialComplex& c);

}  // namespace stanley
