#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/face.hpp"

namespace stanley {

/// Variable table of a polynomial ring K[x_0, ..., x_{n-1}] (0-based ids,
/// display names at the boundary).
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);
  /// Names "x1", ..., "xn".
  static std::shared_ptr<const Ring> standard(int n, const std::string& prefix = "x");
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  /// Id of `name`, or -1.
  int find(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Sparse exponent vector. Entries are sorted by variable id and carry
/// positive exponents only; the unit monomial is empty.
class Monomial {
 public:
  using Entry = std::pair<int, int>;  // (variable, exponent)

  Monomial() = default;
  /// Zero exponents are dropped, repeated variables accumulate.
  explicit Monomial(std::vector<Entry> entries);
  static Monomial variable(int v, int exponent = 1);
  /// x_F
  static Monomial squarefree(VarSet vars);
  static Monomial from_dense(const std::vector<int>& exponents);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_unit() const { return entries_.empty(); }
  int exponent(int v) const;
  int degree() const;
  bool is_squarefree() const;
  VarSet support() const;
  /// Largest variable id present, -1 for the unit.
  int max_variable() const { return entries_.empty() ? -1 : entries_.back().first; }
  std::vector<int> dense(int n) const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial pow(int k) const;
  /// Exact quotient; throws if `other` does not divide *this.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Structural order on entry lists (for containers, not the display order).
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Entry> entries_;
};

Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Canonical order for listings: degree, then lex with x_0 > x_1 > ...
bool monomial_order_less(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m, const Ring& ring);

/// (x_i : i in vars). The empty set stands for the zero ideal.
struct MonomialPrime {
  VarSet vars;

  int height() const { return vars.size(); }
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
};

std::string to_string(const MonomialPrime& p, const Ring& ring);

/// A monomial ideal stored by its minimal generating set, in canonical order.
class MonomialIdeal {
 public:
  /// Minimalizes `gens`.
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring) { return MonomialIdeal(std::move(ring), {Monomial{}}); }
  static MonomialIdeal of_prime(RingPtr ring, const MonomialPrime& p);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  int n_vars() const { return ring_->size(); }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }
  bool is_squarefree() const;
  /// All minimal generators are variables; `as_prime` returns them.
  bool is_prime() const;
  std::optional<MonomialPrime> as_prime() const;

  bool contains(const Monomial& u) const;
  /// Per-variable maximum exponent over G(I).
  std::vector<int> max_exponents() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens);
bool contains(const MonomialIdeal& ideal, const Monomial& u);
/// I : u, generated by g / gcd(g, u).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
/// I + (u)
MonomialIdeal add(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

VarSet support(const Monomial& u);
/// Pairwise disjoint supports. Throws on a unit monomial.
bool is_regular_sequence(const std::vector<Monomial>& seq);

/// Δ(I) on the ring's n vertices; faces are supports of squarefree monomials
/// outside I. Vertex labels are the variable names with a leading "x" removed.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);
/// I_Δ in variables "x<label>".
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);
RingPtr ring_for_complex(const SimplicialComplex& c);
std::vector<std::string> labels_for_ring(const Ring& ring);

/// Minimal primes of I (of its radical for non-squarefree I), inclusion-
/// minimal and in face order of their variable sets.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

/// Krull dimension of S/I (n - min height over minimal primes). Throws on the
/// unit ideal.
int dim_quotient(const MonomialIdeal& ideal);

struct Polarization {
  MonomialIdeal ideal;
  /// For each polarized variable: (original variable, copy index >= 1).
  std::vector<std::pair<int, int>> origin;
  int added_vars = 0;
};

/// x_i^a -> x_{i,1} ... x_{i,a}. Copy 1 of x_i keeps id i and its name, extra
/// copies are appended as "<name>_<k>", so squarefree ideals are fixed points.
Polarization polarize(const MonomialIdeal& ideal);
/// Collapses x_{i,k} -> x_i.
Monomial depolarize(const Monomial& u, const Polarization& p);

/// Image of I ⊂ K[y_1..y_r] under y_j -> u_j in the target ring.
MonomialIdeal substitute(const MonomialIdeal& ideal, const std::vector<Monomial>& images,
                         RingPtr target);
Monomial substitute(const Monomial& u, const std::vector<Monomial>& images);

}  // namespace stanley
