#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/ideal.hpp"
#include "stanley/partitions.hpp"
#include "stanley/shelling.hpp"

// Literature examples embedded in the library so that tests and the CLI are
// hermetic.
namespace stanley::fixtures {

struct Fixture {
  std::string name;
  SimplicialComplex complex;
  MonomialIdeal ideal;
  /// Published partition, if any.
  std::optional<Partition> partition;
  /// Published shelling order, if any.
  std::optional<ShellingOrder> shelling;
};

/// Triangulation of the dunce hat on 8 vertices, 17 triangles.
SimplicialComplex dunce_hat();
Partition dunce_hat_partition();

/// Cylinder on 6 vertices, 6 triangles; not Cohen-Macaulay.
SimplicialComplex cylinder();
MonomialIdeal cylinder_ideal();
/// A partition with one rank-0 interval [26, 26].
Partition cylinder_partition();

/// Ten vertices labelled 1, ..., 9, 0.
struct Hachimori {
  SimplicialComplex delta;
  SimplicialComplex delta1;
  SimplicialComplex delta2;
  SimplicialComplex gamma;
  ShellingOrder shelling1;
  ShellingOrder shelling2;
  /// Nice partition of delta2 that glues along gamma.
  Partition adjusted2;
  /// adjusted2 restricted to the faces outside gamma.
  Partition adjusted2_restricted;
};

Hachimori hachimori();

/// "dunce-hat", "cylinder", "hachimori", "hachimori-1", "hachimori-2",
/// "gorenstein-<m>".
Fixture load(const std::string& name);
std::vector<std::string> names();

}  // namespace stanley::fixtures
