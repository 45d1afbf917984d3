#pragma once

// Brute-force reference implementations used as test oracles. They work
// from the definitions on small inputs and share no algorithm with the
// library code they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "stanley/complex.hpp"
#include "stanley/ideal.hpp"
#include "stanley/partitions.hpp"

namespace oracle {

using stanley::Face;
using stanley::SimplicialComplex;

inline std::vector<std::uint64_t> all_subsets(int n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) out.push_back(s);
  return out;
}

inline bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

inline bool is_face(const SimplicialComplex& c, std::uint64_t s) {
  for (Face f : c.facets())
    if (subset(s, f.bits())) return true;
  return false;
}

inline std::set<std::uint64_t> faces(const SimplicialComplex& c) {
  std::set<std::uint64_t> out;
  for (auto s : all_subsets(c.n_vertices()))
    if (is_face(c, s)) out.insert(s);
  return out;
}

inline std::set<std::uint64_t> face_set(const std::vector<Face>& fs) {
  std::set<std::uint64_t> out;
  for (Face f : fs) out.insert(f.bits());
  return out;
}

inline std::vector<std::int64_t> f_vector(const SimplicialComplex& c) {
  std::map<int, std::int64_t> by_size;
  int top = 0;
  for (auto s : faces(c)) {
    int k = std::popcount(s);
    ++by_size[k];
    top = std::max(top, k);
  }
  std::vector<std::int64_t> f;
  for (int k = 0; k <= top; ++k) f.push_back(by_size[k]);
  return f;
}

/// h(t) from sum f_{i-1} t^i (1-t)^{d-i}, expanded term by term.
inline std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f) {
  int d = static_cast<int>(f.size()) - 1;
  std::vector<std::int64_t> h(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    // t^i (1-t)^{d-i}
    std::vector<std::int64_t> poly{1};
    for (int k = 0; k < d - i; ++k) {
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t j = 0; j < poly.size(); ++j) {
        next[j] += poly[j];
        next[j + 1] -= poly[j];
      }
      poly = next;
    }
    for (std::size_t j = 0; j < poly.size(); ++j) h[i + j] += f[i] * poly[j];
  }
  return h;
}

inline std::set<std::uint64_t> link(const SimplicialComplex& c, std::uint64_t f) {
  std::set<std::uint64_t> out;
  for (auto g : faces(c))
    if ((g & f) == 0 && is_face(c, g | f)) out.insert(g);
  return out;
}

inline std::set<std::uint64_t> alexander_dual(const SimplicialComplex& c) {
  std::uint64_t ground = (std::uint64_t{1} << c.n_vertices()) - 1;
  std::set<std::uint64_t> out;
  for (auto s : all_subsets(c.n_vertices()))
    if (!is_face(c, ground & ~s)) out.insert(s);
  return out;
}

inline std::set<std::uint64_t> minimal_nonfaces(const SimplicialComplex& c) {
  std::set<std::uint64_t> out;
  for (auto s : all_subsets(c.n_vertices())) {
    if (is_face(c, s)) continue;
    bool minimal = true;
    for (int v = 0; v < c.n_vertices(); ++v)
      if ((s >> v & 1U) && !is_face(c, s & ~(std::uint64_t{1} << v))) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

// --- dense monomials ----------------------------------------------------------

using Dense = std::vector<int>;

inline bool divides(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::vector<Dense> dense_gens(const stanley::MonomialIdeal& ideal) {
  std::vector<Dense> out;
  for (const auto& g : ideal.gens()) out.push_back(g.dense(ideal.n_vars()));
  return out;
}

inline bool in_ideal(const std::vector<Dense>& gens, const Dense& u) {
  return std::any_of(gens.begin(), gens.end(), [&](const Dense& g) { return divides(g, u); });
}

/// All exponent vectors of total degree <= d in n variables.
inline std::vector<Dense> monomials_up_to(int n, int d) {
  std::vector<Dense> out;
  Dense cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, d);
  return out;
}

/// Minimal primes straight from the definition: inclusion-minimal variable
/// sets meeting the support of every generator.
inline std::set<std::uint64_t> minimal_primes(const stanley::MonomialIdeal& ideal) {
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.gens()) supports.push_back(g.support().bits());
  std::vector<std::uint64_t> covers;
  for (auto s : all_subsets(ideal.n_vars())) {
    bool ok = std::all_of(supports.begin(), supports.end(), [s](std::uint64_t e) { return (e & s) != 0; });
    if (ok) covers.push_back(s);
  }
  std::set<std::uint64_t> out;
  for (auto s : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [s](std::uint64_t t) { return t != s && subset(t, s); });
    if (minimal) out.insert(s);
  }
  return out;
}

/// (I : u) computed by testing u*v in I for v in the exponent box.
inline std::set<Dense> colon_gens(const stanley::MonomialIdeal& ideal, const Dense& u) {
  auto gens = dense_gens(ideal);
  int n = ideal.n_vars();
  Dense bound(n, 0);
  for (const auto& g : gens)
    for (int i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);
  std::vector<Dense> members;
  Dense v(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Dense w(n);
      for (int k = 0; k < n; ++k) w[k] = u[k] + v[k];
      if (in_ideal(gens, w)) members.push_back(v);
      return;
    }
    for (int e = 0; e <= bound[i]; ++e) {
      v[i] = e;
      rec(i + 1);
    }
    v[i] = 0;
  };
  rec(0);
  std::set<Dense> minimal;
  for (const auto& a : members) {
    bool is_min = std::none_of(members.begin(), members.end(),
                               [&](const Dense& b) { return b != a && divides(b, a); });
    if (is_min) minimal.insert(a);
  }
  return minimal;
}

// --- shelling -----------------------------------------------------------------

/// The exchange form of the shelling condition: for all i < j there are k < j
/// and c in G_j \ G_i with G_i ∩ G_j ⊆ G_k ∩ G_j = G_j \ {c}.
inline bool is_shelling(const std::vector<std::uint64_t>& g) {
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      bool found = false;
      for (std::size_t k = 0; k < j && !found; ++k) {
        std::uint64_t common = g[k] & g[j];
        std::uint64_t missing = g[j] & ~common;
        if (std::popcount(missing) != 1) continue;
        if ((missing & g[i]) != 0) continue;
        if (subset(g[i] & g[j], common)) found = true;
      }
      if (!found) return false;
    }
  return true;
}

/// Shellability by trying every facet order. Small inputs only.
inline bool shellable_by_permutations(const SimplicialComplex& c) {
  std::vector<std::uint64_t> g;
  for (Face f : c.facets()) g.push_back(f.bits());
  std::sort(g.begin(), g.end());
  do {
    if (is_shelling(g)) return true;
  } while (std::next_permutation(g.begin(), g.end()));
  return false;
}

// --- partitions and decompositions ------------------------------------------

/// Every face covered exactly once, intervals inside the complex.
inline bool is_partition(const SimplicialComplex& c, const std::vector<stanley::Interval>& ivs) {
  std::map<std::uint64_t, int> cover;
  for (auto f : faces(c)) cover[f] = 0;
  for (const auto& iv : ivs) {
    if (!subset(iv.lower.bits(), iv.upper.bits()) || !is_face(c, iv.upper.bits())) return false;
    for (auto s : all_subsets(c.n_vertices()))
      if (subset(iv.lower.bits(), s) && subset(s, iv.upper.bits())) ++cover[s];
  }
  return std::all_of(cover.begin(), cover.end(), [](const auto& kv) { return kv.second == 1; });
}

/// Compares, monomial by monomial up to total degree `degree`, how often the
/// spaces cover each monomial against the indicator of "not in I".
inline bool decomposition_matches(const stanley::StanleyDecomposition& d, int degree) {
  int n = d.ideal.n_vars();
  auto gens = dense_gens(d.ideal);
  for (const auto& u : monomials_up_to(n, degree)) {
    int expected = in_ideal(gens, u) ? 0 : 1;
    int count = 0;
    for (const auto& s : d.spaces) {
      Dense base = s.u.dense(n);
      if (!divides(base, u)) continue;
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (u[i] > base[i] && !s.vars.contains(i)) ok = false;
      if (ok) ++count;
    }
    if (count != expected) return false;
  }
  return true;
}

/// Every antichain of subsets of {0..n-1}, i.e. the facet list of every
/// complex on that vertex table (void complex and {∅} included).
inline std::vector<std::vector<std::uint64_t>> antichains(int n) {
  std::vector<std::uint64_t> sets = all_subsets(n);
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sets.size()) {
      out.push_back(cur);
      return;
    }
    rec(i + 1);
    std::uint64_t s = sets[i];
    bool comparable = std::any_of(cur.begin(), cur.end(),
                                  [s](std::uint64_t t) { return subset(s, t) || subset(t, s); });
    if (!comparable) {
      cur.push_back(s);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
