#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/ideal.hpp"
#include "stanley/partitions.hpp"

namespace stanley {

/// A facet order G_1, ..., G_s.
struct ShellingOrder {
  std::vector<Face> facets;
};

struct ShellingCertificate {
  bool valid = false;
  std::string message;
  /// 0-based positions of the failing pair, i < j.
  int i = -1;
  int j = -1;
};

/// Björner-Wachs (non-pure) shelling condition: for all i < j there are
/// k < j and c in G_j \ G_i with G_i ∩ G_j ⊆ G_k ∩ G_j = G_j \ {c}.
/// Throws if `order` is not a permutation of the facets of c.
ShellingCertificate verify_shelling(const SimplicialComplex& c, const ShellingOrder& order);

inline constexpr int kDefaultShellingCap = 24;

struct ShellabilityResult {
  bool shellable = false;
  std::optional<ShellingOrder> order;
  /// Number of facet subsets visited by the search.
  std::uint64_t states = 0;
};

/// Exact decision by reachability over subsets of placed facets. Throws
/// CapExceeded beyond `facet_cap` facets.
ShellabilityResult is_shellable(const SimplicialComplex& c, int facet_cap = kDefaultShellingCap);

/// Restriction faces of a shelling: G_i paired with the unique minimal face of
/// G_i not contained in an earlier facet. Throws if `order` is not a shelling.
Partition shelling_to_partition(const SimplicialComplex& c, const ShellingOrder& order);

struct LinearQuotientsResult {
  bool linear_quotients = false;
  /// Generator order (verified or found).
  std::vector<Monomial> order;
  /// When false, the first position whose colon is not generated by variables.
  int failed_at = -1;
  std::uint64_t states = 0;
};

/// ((g_1..g_{j-1}) : g_j) generated by variables for every j.
LinearQuotientsResult verify_linear_quotients(const MonomialIdeal& ideal,
                                              const std::vector<Monomial>& order);

/// With `order`, verifies it; otherwise searches over generator subsets.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal,
                                           const std::optional<std::vector<Monomial>>& order = std::nullopt,
                                           int generator_cap = kDefaultShellingCap);

struct CleanViaDualResult {
  bool clean = false;
  /// "dual-linear-quotients" or "direct-shelling-search"
  std::string method;
  MonomialIdeal dual_ideal;
  std::optional<ShellingOrder> shelling;
  std::vector<std::string> evidence;
};

/// I_{Δ∨} with linear quotients => Δ shellable => S/I_Δ clean. Falls back to
/// the direct shellability search when no linear-quotient order is found.
CleanViaDualResult check_clean_via_dual(const MonomialIdeal& ideal,
                                        int cap = kDefaultShellingCap);

struct GlueResult {
  std::optional<Partition> partition;
  /// On failure: the interval of the second partition whose part outside
  /// Γ has several minimal elements, and those elements.
  std::optional<Interval> failed_interval;
  std::vector<Face> minimal_elements;
};

/// Union of a nice partition of Δ1 with the restrictions of a nice partition
/// of Δ2 to the complement of Γ = Δ1 ∩ Δ2.
GlueResult glue_partitions(const Partition& p1, const Partition& p2, const SimplicialComplex& gamma);

}  // namespace stanley
