#include "stanley/gorenstein.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "stanley/error.hpp"

namespace stanley::gorenstein {

namespace {

void check_m(int m) {
  if (m < 1) throw Error("gorenstein template needs m >= 1");
  if (2 * m + 1 > kMaxVertices) throw Error("gorenstein template too large");
}

FacetTriple sorted_triple(int x, int y, int z) {
  int v[3] = {x, y, z};
  std::sort(v, v + 3);
  return FacetTriple{v[0], v[1], v[2]};
}

// (G \ {x}) ∪ {y} on facets is (b \ {y}) ∪ {x} on triples.
Witness exchange(const FacetTriple& b, int x, int y, std::string branch) {
  int rest[2], k = 0;
  for (int v : {b.a1, b.a2, b.a3})
    if (v != y) rest[k++] = v;
  return Witness{x, sorted_triple(rest[0], rest[1], x), std::move(branch)};
}

}  // namespace

bool is_valid_triple(const FacetTriple& t, int m) {
  return 1 <= t.a1 && t.a1 < t.a2 && t.a2 < t.a3 && t.a3 <= 2 * m + 1 && t.a2 - t.a1 < m + 1 &&
         t.a3 - t.a2 < m + 1 && t.a3 - t.a1 > m;
}

Face facet_of(const FacetTriple& t, int m) {
  return VertexSet::range(2 * m + 1) - VertexSet{t.a1 - 1, t.a2 - 1, t.a3 - 1};
}

FacetTriple triple_of(Face facet, int m) {
  auto missing = (VertexSet::range(2 * m + 1) - facet).elements();
  if (missing.size() != 3) throw Error("face is not the complement of three vertices");
  return FacetTriple{missing[0] + 1, missing[1] + 1, missing[2] + 1};
}

std::string to_string(const FacetTriple& t) {
  return "(" + std::to_string(t.a1) + "," + std::to_string(t.a2) + "," + std::to_string(t.a3) + ")";
}

Template build_template(int m) {
  check_m(m);
  int n = 2 * m + 1;
  auto ring = Ring::standard(n, "y");
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    VarSet window;
    for (int k = 0; k < m; ++k) window = window.with((i + k) % n);
    gens.push_back(Monomial::squarefree(window));
  }
  MonomialIdeal ideal(ring, gens);
  SimplicialComplex c = stanley_reisner_complex(ideal).relabeled(default_labels(n));
  return Template{std::move(ideal), std::move(c)};
}

std::vector<FacetTriple> facet_triples(int m) {
  check_m(m);
  int n = 2 * m + 1;
  std::vector<FacetTriple> out;
  for (int a1 = 1; a1 <= n; ++a1)
    for (int a2 = a1 + 1; a2 <= n; ++a2)
      for (int a3 = a2 + 1; a3 <= n; ++a3)
        if (is_valid_triple({a1, a2, a3}, m)) out.push_back({a1, a2, a3});
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool lex_less(const FacetTriple& a, const FacetTriple& b) {
  if (b.a1 != a.a1) return b.a1 < a.a1;
  if (b.a2 != a.a2) return b.a2 < a.a2;
  return b.a3 < a.a3;
}

Witness shelling_witness(const FacetTriple& f, const FacetTriple& g, int m) {
  if (!is_valid_triple(f, m) || !is_valid_triple(g, m)) throw Error("not a facet triple");
  if (!lex_less(f, g)) throw Error("shelling witness needs F earlier than G");
  const int a1 = f.a1, a2 = f.a2, a3 = f.a3;
  const int b1 = g.a1, b2 = g.a2, b3 = g.a3;

  std::vector<int> only_a;
  for (int v : {a1, a2, a3})
    if (v != b1 && v != b2 && v != b3) only_a.push_back(v);

  if (only_a.size() == 1) return Witness{only_a.front(), f, "trivial"};

  if (only_a.size() == 2) {
    if (b1 == a1 && a1 < b2 && b2 < a2) return exchange(g, a2, b2, "1(i)");
    if ((b1 < b2 && b2 == a1) || (b1 < b2 && b2 < a1 && a1 < a2 && a2 == b3 && b3 < a3))
      return exchange(g, a3, b1, "1(ii)");
    if (b1 < a1 && a1 < b2 && b2 < a2 && a2 == b3 && b3 < a3)
      return a3 - b2 < m + 1 ? exchange(g, a3, b3, "1(iii)") : exchange(g, a3, b1, "1(iii)");
    if (b1 < a1 && a1 < a2 && a2 == b2 && b2 < b3 && b3 < a3) return exchange(g, a3, b3, "1(iv)");
    if ((b1 < a1 && a1 < a2 && a2 == b2 && b2 < a3 && a3 < b3) ||
        (b1 < a1 && a1 < a2 && a2 < a3 && a3 == b2 && b2 < b3))
      return exchange(g, a1, b1, "1(v)");
    // shared largest vertex; not covered by (i)-(v)
    if (a3 == b3 && b1 < a1) return exchange(g, a1, b1, "1(vi)");
  } else {
    if (b1 < a1 && a1 < a2 && a2 < a3 && a3 < b3) return exchange(g, a1, b1, "2(i)");
    if ((b1 < b2 && b2 < b3 && b3 < a1) || (b1 < b2 && b2 < a1 && a1 < b3))
      return exchange(g, a1, b2, "2(ii)");
    if (b1 < a1 && a1 < b2 && b2 < b3 && b3 < a2) return exchange(g, a2, b3, "2(iii)");
    if (b1 < a1 && a1 < b2 && b2 < a2 && a2 < b3 && b3 < a3)
      return a3 - b2 < m + 1 ? exchange(g, a3, b3, "2(iv-a)") : exchange(g, a3, b1, "2(iv-a)");
    if (b1 < a1 && a1 < a2 && a2 < b2 && b2 < b3 && b3 < a3) return exchange(g, a3, b3, "2(iv-b)");
  }
  throw Error("no shelling witness branch for F=" + to_string(f) + " G=" + to_string(g));
}

ShellingOrder lex_shelling(int m) {
  ShellingOrder order;
  for (const auto& t : facet_triples(m)) order.facets.push_back(facet_of(t, m));
  return order;
}

MonomialIdeal instantiate(int m, const std::vector<Monomial>& u, RingPtr target) {
  check_m(m);
  if (static_cast<int>(u.size()) != 2 * m + 1)
    throw Error("instantiate: expected " + std::to_string(2 * m + 1) + " monomials");
  if (!is_regular_sequence(u)) throw Error("instantiate: not a monomial regular sequence");
  return substitute(build_template(m).ideal, u, std::move(target));
}

std::optional<Recognition> recognize(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  int g = static_cast<int>(gens.size());
  if (g < 3 || g % 2 == 0 || ideal.is_unit()) return std::nullopt;
  int m = (g - 1) / 2;

  // variables grouped by the set of generators they divide
  std::map<std::uint64_t, std::vector<int>> groups;
  for (int v = 0; v < ideal.n_vars(); ++v) {
    std::uint64_t incidence = 0;
    for (int j = 0; j < g; ++j)
      if (gens[j].exponent(v) > 0) incidence |= std::uint64_t{1} << j;
    if (incidence != 0) groups[incidence].push_back(v);
  }
  if (static_cast<int>(groups.size()) != g) return std::nullopt;

  struct Block {
    std::uint64_t incidence;
    Monomial u;
    int min_var;
  };
  std::vector<Block> blocks;
  for (const auto& [incidence, vars] : groups) {
    if (std::popcount(incidence) != m) return std::nullopt;
    int j = std::countr_zero(incidence);
    std::vector<Monomial::Entry> entries;
    for (int v : vars) entries.emplace_back(v, gens[j].exponent(v));
    blocks.push_back(Block{incidence, Monomial(entries), vars.front()});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.min_var < y.min_var; });

  std::vector<int> cycle;
  if (m == 1) {
    for (int i = 0; i < g; ++i) cycle.push_back(i);
  } else {
    // consecutive blocks share exactly m-1 generators
    std::vector<std::vector<int>> adj(g);
    for (int i = 0; i < g; ++i)
      for (int k = 0; k < g; ++k)
        if (i != k && std::popcount(blocks[i].incidence & blocks[k].incidence) == m - 1)
          adj[i].push_back(k);
    for (const auto& a : adj)
      if (a.size() != 2) return std::nullopt;
    int prev = 0, cur = std::min(adj[0][0], adj[0][1]);
    cycle.push_back(0);
    while (cur != 0) {
      if (static_cast<int>(cycle.size()) >= g) return std::nullopt;
      cycle.push_back(cur);
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(cycle.size()) != g) return std::nullopt;
  }

  Recognition r{m, {}};
  for (int i : cycle) r.u.push_back(blocks[i].u);
  if (!(instantiate(m, r.u, ideal.ring_ptr()) == ideal)) return std::nullopt;
  return r;
}

}  // namespace stanley::gorenstein
