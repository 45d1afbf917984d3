#include "stanley/shelling.hpp"

#include <algorithm>
#include <functional>

#include "stanley/error.hpp"

namespace stanley {

namespace {

void check_permutation(const SimplicialComplex& c, const std::vector<Face>& order) {
  std::vector<Face> a = c.facets(), b = order;
  std::sort(a.begin(), a.end(), FaceLess{});
  std::sort(b.begin(), b.end(), FaceLess{});
  if (a != b) throw Error("shelling order is not a permutation of the facets");
}

// {c in g : g \ {c} lies in one of `earlier`}
VertexSet restriction_face(Face g, const std::vector<Face>& facets, std::size_t count) {
  VertexSet r;
  g.for_each([&](int v) {
    Face ridge = g.without(v);
    for (std::size_t k = 0; k < count; ++k)
      if (ridge.is_subset_of(facets[k])) {
        r = r.with(v);
        break;
      }
  });
  return r;
}

// Reachability over subsets of "placed" items, shared by the shellability
// and linear-quotient searches. `extends(item, state)` decides whether item
// may follow the items in state.
class SubsetReachability {
 public:
  SubsetReachability(int items, std::function<bool(int, std::uint64_t)> extends)
      : items_(items), extends_(std::move(extends)),
        dead_((std::size_t{1} << items) / 64 + 1, 0) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> order;
    if (dfs(0, order)) {
      std::reverse(order.begin(), order.end());
      return order;
    }
    return std::nullopt;
  }

  std::uint64_t states() const { return states_; }

 private:
  bool dfs(std::uint64_t state, std::vector<int>& order) {
    std::uint64_t full = (items_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << items_) - 1;
    if (state == full) return true;
    if ((dead_[state / 64] >> (state % 64)) & 1U) return false;
    ++states_;
    for (int g = 0; g < items_; ++g) {
      if ((state >> g) & 1U) continue;
      if (!extends_(g, state)) continue;
      if (dfs(state | (std::uint64_t{1} << g), order)) {
        order.push_back(g);
        return true;
      }
    }
    dead_[state / 64] |= std::uint64_t{1} << (state % 64);
    return false;
  }

  int items_;
  std::function<bool(int, std::uint64_t)> extends_;
  std::vector<std::uint64_t> dead_;
  std::uint64_t states_ = 0;
};

}  // namespace

ShellingCertificate verify_shelling(const SimplicialComplex& c, const ShellingOrder& order) {
  const auto& g = order.facets;
  check_permutation(c, g);
  for (std::size_t j = 1; j < g.size(); ++j) {
    VertexSet r = restriction_face(g[j], g, j);
    for (std::size_t i = 0; i < j; ++i) {
      if (!(g[j] - g[i]).intersects(r)) {
        return ShellingCertificate{
            false,
            "facet " + std::to_string(j + 1) + " meets facet " + std::to_string(i + 1) +
                " outside the codimension-one part of its attachment",
            static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }
  return ShellingCertificate{true, "ok", -1, -1};
}

ShellabilityResult is_shellable(const SimplicialComplex& c, int facet_cap) {
  if (c.is_void()) throw Error("shellability of the void complex is undefined");
  const auto& facets = c.facets();
  int s = static_cast<int>(facets.size());
  if (s > facet_cap || s > 62)
    throw CapExceeded("shellability search: " + std::to_string(s) + " facets exceed the cap of " +
                      std::to_string(facet_cap));

  // ridge_owner[g][k]: facets containing the k-th ridge g \ {v_k}
  // good[g][R]: facets h with (g \ h) ∩ R != ∅, R in local vertex bits of g
  std::vector<std::vector<std::uint64_t>> ridge_owner(s), good(s);
  std::vector<std::vector<int>> local(s);
  for (int a = 0; a < s; ++a) {
    local[a] = facets[a].elements();
    for (int v : local[a]) {
      std::uint64_t mask = 0;
      for (int b = 0; b < s; ++b)
        if (b != a && facets[a].without(v).is_subset_of(facets[b])) mask |= std::uint64_t{1} << b;
      ridge_owner[a].push_back(mask);
    }
    int width = static_cast<int>(local[a].size());
    if (width > 20) throw CapExceeded("shellability search: facet too large");
    good[a].assign(std::size_t{1} << width, 0);
    for (std::uint64_t r_local = 0; r_local < (std::uint64_t{1} << width); ++r_local) {
      VertexSet r;
      for (int k = 0; k < width; ++k)
        if ((r_local >> k) & 1U) r = r.with(local[a][k]);
      std::uint64_t mask = 0;
      for (int b = 0; b < s; ++b)
        if ((facets[a] - facets[b]).intersects(r)) mask |= std::uint64_t{1} << b;
      good[a][r_local] = mask;
    }
  }

  SubsetReachability search(s, [&](int g, std::uint64_t state) {
    if (state == 0) return true;
    std::uint64_t r_local = 0;
    for (std::size_t k = 0; k < ridge_owner[g].size(); ++k)
      if (ridge_owner[g][k] & state) r_local |= std::uint64_t{1} << k;
    return (state & ~good[g][r_local]) == 0;
  });
  ShellabilityResult result;
  if (auto order = search.run()) {
    ShellingOrder so;
    for (int g : *order) so.facets.push_back(facets[g]);
    result.shellable = true;
    result.order = std::move(so);
  }
  result.states = search.states();
  return result;
}

Partition shelling_to_partition(const SimplicialComplex& c, const ShellingOrder& order) {
  ShellingCertificate cert = verify_shelling(c, order);
  if (!cert.valid) throw Error("not a shelling: " + cert.message);
  const auto& g = order.facets;
  Partition p{c, {}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    VertexSet r = restriction_face(g[i], g, i);
    for (std::size_t k = 0; k < i; ++k)
      if (r.is_subset_of(g[k])) throw Error("restriction face is not new; order is not a shelling");
    p.intervals.push_back(Interval{r, g[i]});
  }
  return p;
}

// --- linear quotients ---------------------------------------------------------

LinearQuotientsResult verify_linear_quotients(const MonomialIdeal& ideal,
                                              const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end(), monomial_order_less);
  if (sorted_order != ideal.gens())
    throw Error("linear quotient order is not a permutation of the minimal generators");
  LinearQuotientsResult result{true, order, -1, 0};
  for (std::size_t j = 1; j < order.size(); ++j) {
    MonomialIdeal prefix(ideal.ring_ptr(), std::vector<Monomial>(order.begin(), order.begin() + j));
    if (!colon(prefix, order[j]).is_prime()) {
      result.linear_quotients = false;
      result.failed_at = static_cast<int>(j);
      break;
    }
  }
  return result;
}

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal,
                                           const std::optional<std::vector<Monomial>>& order,
                                           int generator_cap) {
  if (order) return verify_linear_quotients(ideal, *order);
  const auto& gens = ideal.gens();
  int m = static_cast<int>(gens.size());
  if (m > generator_cap || m > 62)
    throw CapExceeded("linear quotient search: " + std::to_string(m) +
                      " generators exceed the cap of " + std::to_string(generator_cap));
  // quotient support and, when the quotient is a single variable, that variable
  std::vector<std::vector<VarSet>> quot(m, std::vector<VarSet>(m));
  std::vector<std::vector<int>> linear(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Monomial q = gens[i] / gcd(gens[i], gens[j]);
      quot[i][j] = q.support();
      if (q.degree() == 1) linear[i][j] = q.entries().front().first;
    }
  SubsetReachability search(m, [&](int j, std::uint64_t state) {
    VarSet vars;
    for (int i = 0; i < m; ++i)
      if (((state >> i) & 1U) && linear[i][j] >= 0) vars = vars.with(linear[i][j]);
    for (int i = 0; i < m; ++i)
      if (((state >> i) & 1U) && !quot[i][j].intersects(vars)) return false;
    return true;
  });
  LinearQuotientsResult result;
  if (auto found = search.run()) {
    result.linear_quotients = true;
    for (int g : *found) result.order.push_back(gens[g]);
  }
  result.states = search.states();
  return result;
}

CleanViaDualResult check_clean_via_dual(const MonomialIdeal& ideal, int cap) {
  if (!ideal.is_squarefree()) throw Error("clean-via-dual requires a squarefree ideal");
  if (ideal.is_unit()) throw Error("clean-via-dual: unit ideal");
  SimplicialComplex delta = stanley_reisner_complex(ideal);
  VarSet ground = VarSet::range(ideal.n_vars());

  // I_{Δ∨} is generated by x_P over the minimal primes P of I_Δ.
  std::vector<Monomial> dual_gens;
  for (const auto& p : minimal_primes(ideal)) dual_gens.push_back(Monomial::squarefree(p.vars));
  CleanViaDualResult result{false, "", MonomialIdeal(ideal.ring_ptr(), dual_gens), std::nullopt, {}};
  const MonomialIdeal& dual = result.dual_ideal;
  result.evidence.push_back("Alexander dual ideal has " + std::to_string(dual.gens().size()) +
                            " generators (one per facet)");

  std::vector<std::vector<Monomial>> candidates;
  candidates.push_back(dual.gens());
  candidates.emplace_back(dual.gens().rbegin(), dual.gens().rend());
  std::optional<std::vector<Monomial>> lq_order;
  for (const auto& cand : candidates) {
    if (verify_linear_quotients(dual, cand).linear_quotients) {
      lq_order = cand;
      result.evidence.push_back("linear quotients verified for a canonical generator order");
      break;
    }
  }
  if (!lq_order && static_cast<int>(dual.gens().size()) <= cap) {
    LinearQuotientsResult lq = has_linear_quotients(dual, std::nullopt, cap);
    if (lq.linear_quotients) {
      lq_order = lq.order;
      result.evidence.push_back("linear quotient order found by subset search (" +
                                std::to_string(lq.states) + " states)");
    } else {
      result.evidence.push_back("no linear quotient order exists (" + std::to_string(lq.states) +
                                " states)");
    }
  }

  if (lq_order) {
    ShellingOrder order;
    for (const auto& u : *lq_order) order.facets.push_back(ground - u.support());
    ShellingCertificate cert = verify_shelling(delta, order);
    if (cert.valid) {
      result.evidence.push_back("complementary facet order verified as a shelling of the complex");
      result.evidence.push_back("shellable complex => Stanley-Reisner ideal is clean");
      result.clean = true;
      result.method = "dual-linear-quotients";
      result.shelling = std::move(order);
      return result;
    }
    result.evidence.push_back("complementary facet order failed shelling verification");
  }

  ShellabilityResult direct = is_shellable(delta, cap);
  result.method = "direct-shelling-search";
  result.evidence.push_back("direct shellability search visited " + std::to_string(direct.states) +
                            " states");
  result.clean = direct.shellable;
  result.shelling = direct.order;
  result.evidence.push_back(direct.shellable ? "shellable => clean" : "not shellable => not clean");
  return result;
}

// --- gluing -------------------------------------------------------------------

GlueResult glue_partitions(const Partition& p1, const Partition& p2, const SimplicialComplex& gamma) {
  const SimplicialComplex& d1 = p1.ambient;
  const SimplicialComplex& d2 = p2.ambient;
  if (d1.n_vertices() != d2.n_vertices() || gamma.n_vertices() != d1.n_vertices())
    throw Error("glue: vertex tables differ");
  for (Face f : gamma.facets())
    if (!d1.is_face(f) || !d2.is_face(f)) throw Error("glue: Γ is not a common subcomplex");
  if (!gamma.is_void()) {
    int d = std::max(d1.dim_complex(), d2.dim_complex());
    if (!is_pure(gamma) || gamma.dim_complex() != d - 1)
      throw Error("glue: Γ must be pure of dimension one less than the complexes");
  }

  GlueResult result;
  Partition glued{union_of(d1, d2), p1.intervals};
  for (const Interval& iv : p2.intervals) {
    std::vector<Face> outside;
    (iv.upper - iv.lower).for_each_subset([&](Face s) {
      Face h = iv.lower | s;
      if (!gamma.is_face(h)) outside.push_back(h);
    });
    std::vector<Face> minimal;
    for (Face h : outside) {
      bool is_min = std::none_of(outside.begin(), outside.end(),
                                 [h](Face o) { return o != h && o.is_subset_of(h); });
      if (is_min) minimal.push_back(h);
    }
    std::sort(minimal.begin(), minimal.end(), FaceLess{});
    if (minimal.empty()) continue;
    if (minimal.size() > 1) {
      result.failed_interval = iv;
      result.minimal_elements = std::move(minimal);
      return result;
    }
    glued.intervals.push_back(Interval{minimal.front(), iv.upper});
  }
  result.partition = std::move(glued);
  return result;
}

}  // namespace stanley
