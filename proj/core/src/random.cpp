#include "stanley/random.hpp"

#include <random>

#include "stanley/complex.hpp"
#include "stanley/error.hpp"
#include "stanley/homology.hpp"

namespace stanley::random {

namespace {

// Unbiased draw from [0, k) by rejection.
int below(std::mt19937_64& rng, int k) {
  const std::uint64_t span = static_cast<std::uint64_t>(k);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return static_cast<int>(x % span);
}

void check_n(int n, int least) {
  if (n < least || n > kMaxVertices)
    throw Error("random instance needs " + std::to_string(least) + " <= n <= " +
                std::to_string(kMaxVertices));
}

std::vector<int> shuffled(std::mt19937_64& rng, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(v[i], v[below(rng, i + 1)]);
  return v;
}

}  // namespace

MonomialIdeal squarefree(std::uint64_t seed, int n) {
  check_n(n, 1);
  std::mt19937_64 rng(seed);
  auto random_set = [&](int size) {
    auto order = shuffled(rng, n);
    VarSet s;
    for (int k = 0; k < size; ++k) s = s.with(order[k]);
    return s;
  };
  // Random generators alone almost always give shellable complexes (an
  // isolated vertex or a cone shells trivially), so half of the instances
  // are Stanley-Reisner ideals of random low-dimensional facet lists.
  if (n >= 3 && below(rng, 2) == 0) {
    int count = 2 + below(rng, n);
    std::vector<Face> facets;
    for (int f = 0; f < count; ++f) facets.push_back(random_set(std::min(n - 1, 2 + below(rng, 2))));
    return stanley_reisner_ideal(SimplicialComplex::from_facets(facets, n));
  }
  int count = 1 + below(rng, 2 * n);
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    int degree = std::min(n, below(rng, 6) == 0 ? 1 : 2 + below(rng, 2));
    gens.push_back(Monomial::squarefree(random_set(degree)));
  }
  return MonomialIdeal(Ring::standard(n), gens);
}

MonomialIdeal complete_intersection(std::uint64_t seed, int n) {
  check_n(n, 1);
  std::mt19937_64 rng(seed);
  int r = 1 + below(rng, std::min(n, 3));
  auto order = shuffled(rng, n);
  // r nonempty blocks from a prefix of the shuffled variables
  int used = r + below(rng, n - r + 1);
  std::vector<std::vector<Monomial::Entry>> blocks(r);
  for (int k = 0; k < used; ++k) {
    int b = k < r ? k : below(rng, r);
    blocks[b].emplace_back(order[k], 1 + below(rng, 3));
  }
  std::vector<Monomial> gens;
  for (auto& b : blocks) gens.emplace_back(b);
  return MonomialIdeal(Ring::standard(n), gens);
}

MonomialIdeal codim2_cm(std::uint64_t seed, int n) {
  check_n(n, 2);
  std::mt19937_64 rng(seed);
  VarSet ground = VarSet::range(n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (below(rng, 10) < 7) facets.push_back(ground - VertexSet{i, j});
    if (facets.empty()) continue;
    auto c = SimplicialComplex::from_facets(facets, n);
    if (is_cohen_macaulay(c)) {
      std::vector<Monomial> gens;
      for (Face nf : minimal_nonfaces(c)) gens.push_back(Monomial::squarefree(nf));
      return MonomialIdeal(Ring::standard(n), gens);
    }
  }
  // the complete graph always qualifies
  std::vector<Face> facets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) facets.push_back(ground - VertexSet{i, j});
  auto c = SimplicialComplex::from_facets(facets, n);
  std::vector<Monomial> gens;
  for (Face nf : minimal_nonfaces(c)) gens.push_back(Monomial::squarefree(nf));
  return MonomialIdeal(Ring::standard(n), gens);
}

MonomialIdeal generate(const std::string& model, std::uint64_t seed, int n) {
  if (model == "squarefree") return squarefree(seed, n);
  if (model == "ci") return complete_intersection(seed, n);
  if (model == "codim2-cm") return codim2_cm(seed, n);
  throw Error("unknown random model '" + model + "' (expected squarefree, ci or codim2-cm)");
}

}  // namespace stanley::random
