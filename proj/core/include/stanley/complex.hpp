#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "stanley/face.hpp"

namespace stanley {

/// dim of the void complex (no faces at all). Distinct from -1, which is the
/// dimension of the irrelevant complex {∅}.
inline constexpr int kVoidDimension = INT_MIN;

/// A finite simplicial complex on the vertex table {0, ..., n-1}, stored by
/// its facets. Values are immutable once constructed.
class SimplicialComplex {
 public:
  /// The void complex on zero vertices.
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal members of `faces`. Throws on a vertex id
  /// outside [0, n). Labels default to "1".."n".
  static SimplicialComplex from_facets(const std::vector<Face>& faces, int n);
  static SimplicialComplex from_facets(const std::vector<Face>& faces, int n,
                                       std::vector<std::string> labels);

  static SimplicialComplex void_complex(int n);
  /// The complex {∅}.
  static SimplicialComplex irrelevant(int n);
  static SimplicialComplex simplex(int n);

  int n_vertices() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_.at(v); }
  /// Facets in deterministic face order.
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_face(Face f) const;

  /// dim Δ = max |F| - 1; kVoidDimension for the void complex.
  int dim_complex() const;
  /// Krull dimension of K[Δ] = dim Δ + 1 (0 for the void complex).
  int dim_ring() const;

  VertexSet vertex_set() const;
  VertexSet ground_set() const { return VertexSet::range(n_); }

  /// Same facets, different label table (size must be n).
  SimplicialComplex relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
};

std::vector<std::string> default_labels(int n);

/// Every face, ∅ included, in (cardinality, lex) order.
std::vector<Face> all_faces(const SimplicialComplex& c);

/// f_{-1}, ..., f_{d-1}. Throws for the void complex.
std::vector<std::int64_t> f_vector(const SimplicialComplex& c);
/// h_0, ..., h_d from sum f_{i-1} t^i = sum h_i t^i (1+t)^{d-i}.
std::vector<std::int64_t> h_vector(const SimplicialComplex& c);
std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f);

bool is_pure(const SimplicialComplex& c);

/// {G : G ∩ f = ∅, G ∪ f ∈ c}. Throws if f is not a face.
SimplicialComplex link(const SimplicialComplex& c, Face f);
/// Faces of dimension <= j. j may be -1 (giving {∅}).
SimplicialComplex skeleton(const SimplicialComplex& c, int j);
/// The subcomplex generated by the faces of c that are faces of `other` too.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// Inclusion-minimal subsets of [n] that are not faces. For the void complex
/// this is {∅}.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c);

/// Faces are complements of non-faces of c, relative to [n].
SimplicialComplex alexander_dual(const SimplicialComplex& c);

}  // namespace stanley
