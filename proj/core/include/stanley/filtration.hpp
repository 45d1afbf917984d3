#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/ideal.hpp"
#include "stanley/partitions.hpp"
#include "stanley/shelling.hpp"

namespace stanley {

/// I_{j+1} = I_j + (w), with (I_j : w) = p.
struct FiltrationStep {
  Monomial w;
  MonomialPrime p;
};

/// Prime filtration of S/I: I_0 = base, ..., I_r = S.
struct PrimeFiltration {
  MonomialIdeal base;
  std::vector<FiltrationStep> steps;
};

struct FiltrationCertificate {
  bool valid = false;
  std::string message;
  /// 0-based failing step; steps.size() when the chain does not reach S.
  int failed_step = -1;
};

FiltrationCertificate verify_filtration(const PrimeFiltration& f);

struct FiltrationClass {
  /// Every P_j is a minimal prime of the base ideal.
  bool clean = false;
  /// No P_i is strictly contained in a later P_j.
  bool pretty_clean = false;
};

/// Throws if f does not verify.
FiltrationClass classify(const PrimeFiltration& f);

inline constexpr std::uint64_t kDefaultBoxCap = 1U << 16;

struct FiltrationSearchResult {
  std::optional<PrimeFiltration> filtration;
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t box_size = 0;
};

/// Exhaustive search over steps w with exponents bounded by the per-variable
/// maxima of G(I), memoized on the intermediate ideal. Throws CapExceeded if
/// the box holds more than `box_cap` monomials.
FiltrationSearchResult find_clean_filtration(const MonomialIdeal& ideal,
                                             std::uint64_t box_cap = kDefaultBoxCap);
FiltrationSearchResult find_pretty_clean_filtration(const MonomialIdeal& ideal,
                                                    std::uint64_t box_cap = kDefaultBoxCap);

struct PolarizationVerdict {
  bool pretty_clean = false;
  Polarization polarization;
  std::optional<ShellingOrder> shelling;
  std::vector<std::string> evidence;
};

/// S/I pretty clean <=> S/I^p clean <=> Δ(I^p) shellable.
PolarizationVerdict is_pretty_clean_via_polarization(const MonomialIdeal& ideal,
                                                     int facet_cap = kDefaultShellingCap);

/// Step j contributes w_j K[Z_j], Z_j the variables outside P_j. Throws if f
/// does not verify.
StanleyDecomposition filtration_to_decomposition(const PrimeFiltration& f);

/// Clean filtration of S/I_Δ: the intervals [R_i, G_i] of a shelling removed
/// from the last facet back to the first. `ring` defaults to ring_for_complex.
PrimeFiltration shelling_to_clean_filtration(const SimplicialComplex& c, const ShellingOrder& order,
                                             RingPtr ring = nullptr);

/// Clean filtration of S/(u_1, ..., u_r) for a monomial regular sequence; the
/// zero ideal gets the single step (1, (0)).
PrimeFiltration complete_intersection_filtration(const MonomialIdeal& ideal);

/// Filtration of S/φ(I)S, φ(y_i) = images[i], obtained by refining every step
/// through the clean filtration of S/φ(P_k)S.
PrimeFiltration substitute_filtration(const PrimeFiltration& f, const std::vector<Monomial>& images,
                                      RingPtr target);

}  // namespace stanley
