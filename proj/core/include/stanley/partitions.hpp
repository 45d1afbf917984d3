#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/homology.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

/// [lower, upper] = { H : lower ⊆ H ⊆ upper }.
struct Interval {
  Face lower;
  Face upper;

  int rank() const { return upper.size() - lower.size(); }
  bool contains(Face h) const { return lower.is_subset_of(h) && h.is_subset_of(upper); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Partition {
  SimplicialComplex ambient;
  std::vector<Interval> intervals;
};

struct PartitionCertificate {
  bool valid = false;
  std::string message;
  /// Offending face and how many intervals cover it (0 or >= 2).
  std::optional<Face> face;
  int cover_count = 0;
};

/// Exact disjoint cover check. Throws if an interval has lower ⊄ upper or
/// upper is not a face of the ambient complex.
PartitionCertificate validate_partition(const Partition& p);

/// r_i = number of intervals of rank i, i = 0 .. dim_ring.
std::vector<std::int64_t> r_vector(const Partition& p);
/// Every upper face is a facet and every facet is an upper face.
bool is_nice(const Partition& p);

/// sum_i f_{i-1} t^i == sum_intervals t^{|F|} (1+t)^{|G|-|F|}, exactly.
/// For nice partitions of pure complexes this is the r-vector identity.
bool f_identity_holds(const Partition& p);
/// sum_i f_{i-1} t^i == sum_i r_i t^{d-i} (1+t)^i with d = dim_ring.
bool r_identity_holds(const Partition& p);

/// u K[Z]
struct StanleySpace {
  Monomial u;
  VarSet vars;

  int dimension() const { return vars.size(); }
  bool is_squarefree() const { return u.is_squarefree() && u.support().is_subset_of(vars); }
  bool contains(const Monomial& m) const {
    return u.divides(m) && (m / u).support().is_subset_of(vars);
  }
  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
};

struct StanleyDecomposition {
  MonomialIdeal ideal;
  std::vector<StanleySpace> spaces;

  /// min |Z_i|; -1 for an empty decomposition.
  int sdepth() const;
};

/// [F, G] -> x_F K[Z_G]; the ideal is I_Δ of the ambient complex.
StanleyDecomposition partition_to_decomposition(const Partition& p);
/// Inverse direction; throws on a non-squarefree space.
Partition decomposition_to_partition(const StanleyDecomposition& d);

struct DecompositionCertificate {
  bool valid = false;
  std::string message;
  /// A monomial whose multiplicity in the sum of spaces is wrong.
  std::optional<Monomial> witness;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

/// Exact check through the multigraded Hilbert series numerators.
DecompositionCertificate validate_decomposition(const StanleyDecomposition& d);

/// Number of spaces of dimension dim S/I.
std::int64_t count_top_spaces(const StanleyDecomposition& d);

/// min facet size of Δ(I); requires squarefree I.
int sdepth_upper_bound(const MonomialIdeal& ideal);

struct SearchStats {
  std::uint64_t nodes = 0;
};

struct PartitionSearchOptions {
  /// Upper faces must have at least this many vertices.
  int min_upper_size = 0;
  /// Upper faces must be facets.
  bool facets_only = false;
};

/// Deterministic exact-cover search for a partition of c into intervals
/// obeying `opts`. Nullopt means the search space was exhausted.
std::optional<Partition> find_partition(const SimplicialComplex& c, const PartitionSearchOptions& opts,
                                        SearchStats* stats = nullptr);

/// Calls `fn` on every partition obeying `opts`; stops when fn returns false.
void for_each_partition(const SimplicialComplex& c, const PartitionSearchOptions& opts,
                        const std::function<bool(const Partition&)>& fn);

struct SdepthResult {
  int sdepth = 0;
  Partition witness;
  int upper_bound = 0;
  SearchStats stats;
};

/// Largest k such that c has a partition with every |G| >= k. `floor` stops the
/// descent: nullopt if no k >= floor works.
std::optional<SdepthResult> max_partition_depth(const SimplicialComplex& c, int floor = 0);

/// Exact Stanley depth of S/I for squarefree, nonzero, proper I.
SdepthResult sdepth(const MonomialIdeal& ideal);

struct NicePartitionResult {
  std::optional<Partition> partition;
  SearchStats stats;
};

NicePartitionResult find_nice_partition(const SimplicialComplex& c);

struct StanleyVerdict {
  bool stanley = false;
  int sdepth = 0;
  int depth = 0;
  Partition witness;
};

StanleyVerdict is_stanley_ideal(const MonomialIdeal& ideal,
                                const CoefficientField& k = CoefficientField::rationals());

/// All intervals [F, F], i.e. the decomposition sum_F x_F K[Z_F].
Partition singleton_partition(const SimplicialComplex& c);

}  // namespace stanley
