#include "stanley/filtration.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <unordered_set>

#include "stanley/error.hpp"

namespace stanley {

namespace {

std::string prime_string(const MonomialPrime& p, const Ring& ring) { return to_string(p, ring); }

std::string ideal_key(const MonomialIdeal& ideal) {
  std::string key;
  for (const auto& g : ideal.gens()) {
    for (auto [v, e] : g.entries()) {
      key += std::to_string(v);
      key += '^';
      key += std::to_string(e);
      key += ' ';
    }
    key += ';';
  }
  return key;
}

bool strictly_contains(VarSet big, VarSet small) { return small.is_subset_of(big) && big != small; }

std::vector<Monomial> box_monomials(const MonomialIdeal& ideal, std::uint64_t cap, std::uint64_t& size) {
  std::vector<int> bound = ideal.max_exponents();
  size = 1;
  for (int e : bound) {
    if (size > cap / static_cast<std::uint64_t>(e + 1) + 1) {
      size = cap + 1;
      break;
    }
    size *= static_cast<std::uint64_t>(e + 1);
  }
  if (size > cap)
    throw CapExceeded("filtration search: exponent box exceeds the cap of " + std::to_string(cap) +
                      " monomials");
  std::vector<Monomial> out;
  out.reserve(size);
  std::vector<int> exps(bound.size(), 0);
  while (true) {
    out.push_back(Monomial::from_dense(exps));
    std::size_t i = 0;
    while (i < exps.size() && exps[i] == bound[i]) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }
  std::sort(out.begin(), out.end(), monomial_order_less);
  return out;
}

class FiltrationSearch {
 public:
  FiltrationSearch(const MonomialIdeal& ideal, bool pretty, std::uint64_t cap)
      : base_(ideal), pretty_(pretty) {
    box_ = box_monomials(ideal, cap, result_.box_size);
    n_ = ideal.n_vars();
    squarefree_clean_ = !pretty && ideal.is_squarefree();
    for (const auto& w : box_) box_dense_.push_back(w.dense(n_));
    for (const auto& p : minimal_primes(ideal)) min_primes_.push_back(p.vars);
  }

  FiltrationSearchResult run() {
    if (base_.is_unit()) {
      result_.filtration = PrimeFiltration{base_, {}};
      return result_;
    }
    if (squarefree_clean_) {
      std::vector<std::uint64_t> gens;
      for (const auto& g : base_.gens()) gens.push_back(g.support().bits());
      for (const auto& w : box_) box_masks_.push_back(w.support().bits());
      if (dfs_squarefree(gens)) result_.filtration = PrimeFiltration{base_, steps_};
    } else if (dfs(base_, key(base_))) {
      result_.filtration = PrimeFiltration{base_, steps_};
    }
    return std::move(result_);
  }

 private:
  bool is_min_prime(VarSet p) const {
    return std::find(min_primes_.begin(), min_primes_.end(), p) != min_primes_.end();
  }

  // A later prime may not strictly contain an earlier one.
  bool admissible_later(VarSet p) const {
    if (!pretty_) return is_min_prime(p);
    return std::none_of(steps_.begin(), steps_.end(),
                        [p](const FiltrationStep& s) { return strictly_contains(p, s.p.vars); });
  }

  std::string key(const MonomialIdeal& j) const {
    std::string k = ideal_key(j);
    if (pretty_) {
      std::vector<std::uint64_t> seen;
      for (const auto& s : steps_) seen.push_back(s.p.vars.bits());
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      k += '|';
      for (auto b : seen) k += std::to_string(b) + ',';
    }
    return k;
  }

  // (J : w) when it is a nonzero prime and w is not in J. The colon is prime
  // iff each g / gcd(g, w) is divisible by a variable x_i with x_i w in J;
  // x_i w lies in J iff some g exceeds w only at i, and there by one.
  std::optional<VarSet> prime_colon(const std::vector<std::vector<int>>& gens,
                                    const std::vector<int>& w) {
    VarSet linear;
    excess_.clear();
    for (const auto& g : gens) {
      std::uint64_t mask = 0;
      bool by_one = true;
      for (int i = 0; i < n_; ++i)
        if (g[i] > w[i]) {
          mask |= std::uint64_t{1} << i;
          by_one = by_one && g[i] == w[i] + 1;
        }
      if (mask == 0) return std::nullopt;
      if (by_one && (mask & (mask - 1)) == 0) linear |= VarSet(mask);
      excess_.push_back(mask);
    }
    if (linear.empty()) return std::nullopt;
    for (std::uint64_t mask : excess_)
      if ((mask & linear.bits()) == 0) return std::nullopt;
    return linear;
  }

  // A state whose minimal primes cannot all show up later is dead: every
  // minimal prime of the current ideal occurs in any filtration of it.
  bool viable(const MonomialIdeal& j) const {
    if (j.is_unit()) return true;
    for (const auto& q : minimal_primes(j))
      if (!admissible_later(q.vars)) return false;
    return true;
  }

  // Clean search for squarefree I on generator bitmasks. Every state J is
  // squarefree; w = x_F has a prime colon iff no generator lies in F and each
  // generator outside F meets the set L of single vertices it adds to F.
  // Facets of Δ(J) stay facets of Δ(I) iff every G \ {v}, v in F, lies in
  // another facet, G the facet holding F.
  static bool contains_mask(const std::vector<std::uint64_t>& gens, std::uint64_t f) {
    return std::any_of(gens.begin(), gens.end(), [f](std::uint64_t g) { return (g & ~f) == 0; });
  }

  bool dfs_squarefree(const std::vector<std::uint64_t>& gens) {
    if (gens.size() == 1 && gens.front() == 0) return true;
    ++result_.nodes;
    const std::uint64_t ground = VarSet::range(n_).bits();
    for (std::size_t b = 0; b < box_masks_.size(); ++b) {
      std::uint64_t f = box_masks_[b];
      std::uint64_t linear = 0;
      bool member = false;
      for (std::uint64_t g : gens) {
        std::uint64_t extra = g & ~f;
        if (extra == 0) {
          member = true;
          break;
        }
        if ((extra & (extra - 1)) == 0) linear |= extra;
      }
      if (member || linear == 0) continue;
      if (!std::all_of(gens.begin(), gens.end(), [&](std::uint64_t g) { return (g & ~f & linear) != 0; }))
        continue;
      if (!is_min_prime(VarSet(linear))) continue;

      std::vector<std::uint64_t> next;
      for (std::uint64_t g : gens)
        if ((f & ~g) != 0) next.push_back(g);  // generators divisible by x_F go
      next.push_back(f);
      std::sort(next.begin(), next.end());
      steps_.push_back(FiltrationStep{box_[b], MonomialPrime{VarSet(linear)}});
      if (f == 0) return true;
      if (dead_masks_.count(next)) {
        ++result_.memo_hits;
        steps_.pop_back();
        continue;
      }
      std::uint64_t facet = ground & ~linear;
      bool viable = true;
      for (std::uint64_t rest = f; rest && viable; rest &= rest - 1) {
        std::uint64_t ridge = facet & ~(rest & -rest);
        bool covered = false;
        for (std::uint64_t out = ground & ~facet; out && !covered; out &= out - 1)
          covered = !contains_mask(next, ridge | (out & -out));
        viable = covered;
      }
      if (viable && dfs_squarefree(next)) return true;
      if (!viable) dead_masks_.insert(next);
      steps_.pop_back();
    }
    dead_masks_.insert(gens);
    return false;
  }

  bool dfs(const MonomialIdeal& j, std::string k) {
    if (j.is_unit()) return true;
    ++result_.nodes;
    std::vector<std::vector<int>> gens;
    for (const auto& g : j.gens()) gens.push_back(g.dense(n_));
    for (std::size_t b = 0; b < box_.size(); ++b) {
      auto p = prime_colon(gens, box_dense_[b]);
      if (!p || !admissible_later(*p)) continue;
      const Monomial& w = box_[b];
      MonomialIdeal next = add(j, w);
      steps_.push_back(FiltrationStep{w, MonomialPrime{*p}});
      std::string nk = next.is_unit() ? std::string() : key(next);
      if (!next.is_unit() && dead_.count(nk)) {
        ++result_.memo_hits;
      } else if (!viable(next)) {
        dead_.insert(std::move(nk));
      } else if (dfs(next, std::move(nk))) {
        return true;
      }
      steps_.pop_back();
    }
    dead_.insert(std::move(k));
    return false;
  }

  const MonomialIdeal& base_;
  bool pretty_;
  int n_ = 0;
  bool squarefree_clean_ = false;
  std::vector<Monomial> box_;
  std::vector<std::vector<int>> box_dense_;
  std::vector<std::uint64_t> excess_;
  std::vector<std::uint64_t> box_masks_;
  std::set<std::vector<std::uint64_t>> dead_masks_;
  std::vector<VarSet> min_primes_;
  std::vector<FiltrationStep> steps_;
  std::unordered_set<std::string> dead_;
  FiltrationSearchResult result_;
};

}  // namespace

FiltrationCertificate verify_filtration(const PrimeFiltration& f) {
  MonomialIdeal current = f.base;
  const Ring& ring = f.base.ring();
  for (std::size_t j = 0; j < f.steps.size(); ++j) {
    const auto& step = f.steps[j];
    int js = static_cast<int>(j);
    if (step.w.max_variable() >= ring.size() || step.p.vars.max() >= ring.size())
      return {false, "step " + std::to_string(j) + " uses a variable outside the ring", js};
    if (current.is_unit())
      return {false, "step " + std::to_string(j) + " comes after the unit ideal was reached", js};
    if (current.contains(step.w))
      return {false, "step " + std::to_string(j) + ": " + to_string(step.w, ring) +
                         " already lies in the ideal", js};
    MonomialIdeal q = colon(current, step.w);
    auto p = q.as_prime();
    if (!p) {
      std::string gens;
      for (const auto& g : q.gens()) gens += (gens.empty() ? "" : ",") + to_string(g, ring);
      return {false, "step " + std::to_string(j) + ": colon by " + to_string(step.w, ring) +
                         " is (" + gens + "), not a prime", js};
    }
    if (!(p->vars == step.p.vars))
      return {false, "step " + std::to_string(j) + ": colon is " + prime_string(*p, ring) +
                         ", recorded " + prime_string(step.p, ring), js};
    current = add(current, step.w);
  }
  if (!current.is_unit())
    return {false, "the chain does not reach the unit ideal", static_cast<int>(f.steps.size())};
  return {true, "ok", -1};
}

FiltrationClass classify(const PrimeFiltration& f) {
  FiltrationCertificate cert = verify_filtration(f);
  if (!cert.valid) throw Error("classify: invalid filtration: " + cert.message);
  std::vector<VarSet> mins;
  if (!f.base.is_unit())
    for (const auto& p : minimal_primes(f.base)) mins.push_back(p.vars);
  FiltrationClass out{true, true};
  for (std::size_t j = 0; j < f.steps.size(); ++j) {
    VarSet pj = f.steps[j].p.vars;
    if (std::find(mins.begin(), mins.end(), pj) == mins.end()) out.clean = false;
    for (std::size_t i = 0; i < j; ++i)
      if (strictly_contains(pj, f.steps[i].p.vars)) out.pretty_clean = false;
  }
  return out;
}

FiltrationSearchResult find_clean_filtration(const MonomialIdeal& ideal, std::uint64_t box_cap) {
  return FiltrationSearch(ideal, false, box_cap).run();
}

FiltrationSearchResult find_pretty_clean_filtration(const MonomialIdeal& ideal, std::uint64_t box_cap) {
  return FiltrationSearch(ideal, true, box_cap).run();
}

PolarizationVerdict is_pretty_clean_via_polarization(const MonomialIdeal& ideal, int facet_cap) {
  if (ideal.is_unit()) throw Error("pretty-clean check: unit ideal");
  PolarizationVerdict v{false, polarize(ideal), std::nullopt, {}};
  const MonomialIdeal& pol = v.polarization.ideal;
  v.evidence.push_back("polarization adds " + std::to_string(v.polarization.added_vars) +
                       " variables");
  SimplicialComplex delta = stanley_reisner_complex(pol);
  v.evidence.push_back("complex of the polarization has " + std::to_string(delta.facets().size()) +
                       " facets");
  ShellabilityResult s = is_shellable(delta, facet_cap);
  v.evidence.push_back("shellability search visited " + std::to_string(s.states) + " states");
  v.pretty_clean = s.shellable;
  v.shelling = s.order;
  v.evidence.push_back(s.shellable ? "shellable => polarization clean => ideal pretty clean"
                                   : "not shellable => polarization not clean => not pretty clean");
  return v;
}

StanleyDecomposition filtration_to_decomposition(const PrimeFiltration& f) {
  FiltrationCertificate cert = verify_filtration(f);
  if (!cert.valid) throw Error("invalid filtration: " + cert.message);
  StanleyDecomposition d{f.base, {}};
  VarSet ground = VarSet::range(f.base.n_vars());
  for (const auto& s : f.steps) d.spaces.push_back(StanleySpace{s.w, ground - s.p.vars});
  return d;
}

PrimeFiltration shelling_to_clean_filtration(const SimplicialComplex& c, const ShellingOrder& order,
                                             RingPtr ring) {
  if (!ring) ring = ring_for_complex(c);
  if (ring->size() != c.n_vertices()) throw Error("ring and complex sizes differ");
  Partition p = shelling_to_partition(c, order);
  PrimeFiltration f{MonomialIdeal(ring, stanley_reisner_ideal(c).gens()), {}};
  VarSet ground = VarSet::range(c.n_vertices());
  for (auto it = p.intervals.rbegin(); it != p.intervals.rend(); ++it)
    f.steps.push_back(FiltrationStep{Monomial::squarefree(it->lower), MonomialPrime{ground - it->upper}});
  return f;
}

PrimeFiltration complete_intersection_filtration(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error("complete intersection filtration: unit ideal");
  const auto& gens = ideal.gens();
  if (!gens.empty() && !is_regular_sequence(gens))
    throw Error("complete intersection filtration: generators share variables");

  // S/(u) for u = x_1^{a_1} ... x_s^{a_s}: the chain (u) ⊂ (u / x_s) ⊂ ... ⊂ S,
  // each step a colon by one variable.
  std::vector<std::vector<FiltrationStep>> factors;
  for (const auto& u : gens) {
    std::vector<FiltrationStep> steps;
    const auto& e = u.entries();
    for (int l = static_cast<int>(e.size()) - 1; l >= 0; --l) {
      Monomial prefix(std::vector<Monomial::Entry>(e.begin(), e.begin() + l));
      for (int k = e[l].second - 1; k >= 0; --k)
        steps.push_back(FiltrationStep{prefix * Monomial::variable(e[l].first, k),
                                       MonomialPrime{VarSet{e[l].first}}});
    }
    factors.push_back(std::move(steps));
  }

  // tensor product, tuples in lex order
  PrimeFiltration f{ideal, {}};
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    FiltrationStep step{Monomial{}, MonomialPrime{}};
    for (std::size_t k = 0; k < factors.size(); ++k) {
      step.w = step.w * factors[k][idx[k]].w;
      step.p.vars |= factors[k][idx[k]].p.vars;
    }
    f.steps.push_back(step);
    int k = static_cast<int>(factors.size()) - 1;
    while (k >= 0 && idx[k] + 1 == factors[k].size()) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  return f;
}

PrimeFiltration substitute_filtration(const PrimeFiltration& f, const std::vector<Monomial>& images,
                                      RingPtr target) {
  if (static_cast<int>(images.size()) != f.base.n_vars())
    throw Error("substitution needs one image per variable");
  if (!is_regular_sequence(images)) throw Error("substitution images are not a regular sequence");
  PrimeFiltration out{substitute(f.base, images, target), {}};
  for (const auto& step : f.steps) {
    Monomial phi_w = substitute(step.w, images);
    std::vector<Monomial> ci;
    step.p.vars.for_each([&](int v) { ci.push_back(images[v]); });
    PrimeFiltration inner = complete_intersection_filtration(MonomialIdeal(target, ci));
    for (const auto& s : inner.steps) out.steps.push_back(FiltrationStep{phi_w * s.w, s.p});
  }
  return out;
}

}  // namespace stanley
