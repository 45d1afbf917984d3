#include "stanley/partitions.hpp"

#include <algorithm>
#include <unordered_map>

#include "stanley/error.hpp"
#include "stanley/hilbert.hpp"

namespace stanley {

namespace {

std::string face_string(Face f, const SimplicialComplex& c) {
  if (f.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  f.for_each([&](int v) {
    if (!first) out += ' ';
    out += c.label(v);
    first = false;
  });
  return out + "}";
}

// (1+t)^k t^shift added into poly
void add_shifted_binomial(std::vector<std::int64_t>& poly, int shift, int k) {
  std::int64_t coeff = 1;
  for (int j = 0; j <= k; ++j) {
    if (static_cast<int>(poly.size()) <= shift + j) poly.resize(shift + j + 1, 0);
    poly[shift + j] += coeff;
    coeff = coeff * (k - j) / (j + 1);
  }
}

void trim(std::vector<std::int64_t>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

PartitionCertificate validate_partition(const Partition& p) {
  const SimplicialComplex& c = p.ambient;
  std::unordered_map<Face, int> count;
  for (Face f : all_faces(c)) count[f] = 0;
  for (const Interval& iv : p.intervals) {
    if (!iv.lower.is_subset_of(iv.upper))
      throw Error("interval [" + face_string(iv.lower, c) + ", " + face_string(iv.upper, c) +
                  "] has lower face not contained in upper face");
    if (!c.is_face(iv.upper))
      throw Error("interval upper face " + face_string(iv.upper, c) + " is not a face");
    (iv.upper - iv.lower).for_each_subset([&](Face s) { ++count[iv.lower | s]; });
  }
  for (Face f : all_faces(c)) {
    int k = count[f];
    if (k != 1) {
      PartitionCertificate cert;
      cert.face = f;
      cert.cover_count = k;
      cert.message = "face " + face_string(f, c) + (k == 0 ? " is not covered" :
                     " is covered " + std::to_string(k) + " times");
      return cert;
    }
  }
  return PartitionCertificate{true, "ok", std::nullopt, 1};
}

std::vector<std::int64_t> r_vector(const Partition& p) {
  std::vector<std::int64_t> r(std::max(p.ambient.dim_ring(), 0) + 1, 0);
  for (const Interval& iv : p.intervals) {
    if (iv.rank() >= static_cast<int>(r.size())) r.resize(iv.rank() + 1, 0);
    ++r[iv.rank()];
  }
  return r;
}

bool is_nice(const Partition& p) {
  const auto& facets = p.ambient.facets();
  for (const Interval& iv : p.intervals)
    if (std::find(facets.begin(), facets.end(), iv.upper) == facets.end()) return false;
  for (Face f : facets) {
    bool used = std::any_of(p.intervals.begin(), p.intervals.end(),
                            [f](const Interval& iv) { return iv.upper == f; });
    if (!used) return false;
  }
  return true;
}

bool f_identity_holds(const Partition& p) {
  std::vector<std::int64_t> lhs = f_vector(p.ambient);
  std::vector<std::int64_t> rhs;
  for (const Interval& iv : p.intervals) add_shifted_binomial(rhs, iv.lower.size(), iv.rank());
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

bool r_identity_holds(const Partition& p) {
  std::vector<std::int64_t> lhs = f_vector(p.ambient);
  std::vector<std::int64_t> r = r_vector(p);
  int d = p.ambient.dim_ring();
  std::vector<std::int64_t> rhs;
  for (int i = 0; i < static_cast<int>(r.size()); ++i) {
    if (r[i] == 0) continue;
    if (i > d) return false;
    std::vector<std::int64_t> term;
    add_shifted_binomial(term, d - i, i);
    if (rhs.size() < term.size()) rhs.resize(term.size(), 0);
    for (std::size_t j = 0; j < term.size(); ++j) rhs[j] += r[i] * term[j];
  }
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

int StanleyDecomposition::sdepth() const {
  if (spaces.empty()) return -1;
  int best = spaces.front().dimension();
  for (const auto& s : spaces) best = std::min(best, s.dimension());
  return best;
}

StanleyDecomposition partition_to_decomposition(const Partition& p) {
  StanleyDecomposition d{stanley_reisner_ideal(p.ambient), {}};
  for (const Interval& iv : p.intervals)
    d.spaces.push_back(StanleySpace{Monomial::squarefree(iv.lower), iv.upper});
  return d;
}

Partition decomposition_to_partition(const StanleyDecomposition& d) {
  Partition p{stanley_reisner_complex(d.ideal), {}};
  for (const auto& s : d.spaces) {
    if (!s.is_squarefree())
      throw Error("space " + to_string(s.u, d.ideal.ring()) + " K[...] is not squarefree");
    p.intervals.push_back(Interval{s.u.support(), s.vars});
  }
  return p;
}

DecompositionCertificate validate_decomposition(const StanleyDecomposition& d) {
  const MonomialIdeal& ideal = d.ideal;
  int n = ideal.n_vars();
  VarSet ground = VarSet::range(n);
  Polynomial one;
  one[Monomial{}] = 1;

  Polynomial total;
  for (const auto& s : d.spaces) {
    if (s.u.max_variable() >= n || !s.vars.is_subset_of(ground))
      throw Error("Stanley space uses a variable outside the ring");
    Polynomial term;
    term[s.u] = 1;
    (ground - s.vars).for_each([&](int v) {
      Polynomial factor = one;
      add_term(factor, Monomial::variable(v), -1);
      term = term * factor;
    });
    for (const auto& [m, c] : term) add_term(total, m, c);
  }
  Polynomial diff = total - hilbert_numerator(ideal);
  if (diff.empty()) return DecompositionCertificate{true, "ok", std::nullopt, 0, 0};

  // A support element of least degree is minimal under divisibility, so its
  // coefficient is exactly the excess multiplicity of that monomial.
  auto it = std::min_element(diff.begin(), diff.end(), [](const auto& a, const auto& b) {
    return monomial_order_less(a.first, b.first);
  });
  DecompositionCertificate cert;
  cert.witness = it->first;
  cert.expected = ideal.contains(it->first) ? 0 : 1;
  cert.actual = cert.expected + it->second;
  cert.message = "monomial " + to_string(it->first, ideal.ring()) + " is covered " +
                 std::to_string(cert.actual) + " times, expected " + std::to_string(cert.expected);
  return cert;
}

std::int64_t count_top_spaces(const StanleyDecomposition& d) {
  int top = dim_quotient(d.ideal);
  return std::count_if(d.spaces.begin(), d.spaces.end(),
                       [top](const StanleySpace& s) { return s.dimension() == top; });
}

int sdepth_upper_bound(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw Error("sdepth upper bound requires a squarefree ideal");
  SimplicialComplex c = stanley_reisner_complex(ideal);
  if (c.is_void()) throw Error("sdepth upper bound is undefined for the unit ideal");
  int best = c.facets().front().size();
  for (Face f : c.facets()) best = std::min(best, f.size());
  return best;
}

// --- exact-cover search -------------------------------------------------------

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const SimplicialComplex& c, const PartitionSearchOptions& opts)
      : faces_(all_faces(c)) {
    for (std::size_t i = 0; i < faces_.size(); ++i) index_[faces_[i]] = static_cast<int>(i);
    std::vector<int> allowed;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      Face g = faces_[i];
      if (g.size() < opts.min_upper_size) continue;
      if (opts.facets_only &&
          std::find(c.facets().begin(), c.facets().end(), g) == c.facets().end())
        continue;
      allowed.push_back(static_cast<int>(i));
    }
    // Larger uppers first, then face order.
    std::stable_sort(allowed.begin(), allowed.end(), [this](int a, int b) {
      return faces_[a].size() > faces_[b].size();
    });
    uppers_.resize(faces_.size());
    for (std::size_t i = 0; i < faces_.size(); ++i)
      for (int g : allowed)
        if (faces_[i].is_subset_of(faces_[g])) uppers_[i].push_back(g);
    covered_.assign(faces_.size(), 0);
  }

  bool run(const std::function<bool(const std::vector<Interval>&)>& on_solution) {
    on_solution_ = &on_solution;
    stop_ = false;
    dfs(0);
    return stop_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool interval_free(Face lower, Face upper) const {
    bool free = true;
    (upper - lower).for_each_subset([&](Face s) {
      if (free && covered_[index_.at(lower | s)]) free = false;
    });
    return free;
  }

  void mark(Face lower, Face upper, char value) {
    (upper - lower).for_each_subset([&](Face s) { covered_[index_.at(lower | s)] = value; });
  }

  void dfs(std::size_t n_covered) {
    ++nodes_;
    if (n_covered == faces_.size()) {
      if (!(*on_solution_)(chosen_)) stop_ = true;
      return;
    }
    // Uncovered faces of least cardinality have all proper subfaces covered,
    // so each is the lower end of its interval. Fail-first among them.
    int layer = -1, best = -1, best_count = -1;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (covered_[i]) continue;
      if (layer < 0) layer = faces_[i].size();
      if (faces_[i].size() != layer) break;
      int count = 0;
      for (int g : uppers_[i]) {
        if (interval_free(faces_[i], faces_[g])) ++count;
        if (best_count >= 0 && count >= best_count) break;
      }
      if (best_count < 0 || count < best_count) {
        best = static_cast<int>(i);
        best_count = count;
        if (count == 0) return;
      }
    }
    Face lower = faces_[best];
    for (int g : uppers_[best]) {
      Face upper = faces_[g];
      if (!interval_free(lower, upper)) continue;
      mark(lower, upper, 1);
      chosen_.push_back(Interval{lower, upper});
      dfs(n_covered + (std::size_t{1} << (upper - lower).size()));
      chosen_.pop_back();
      mark(lower, upper, 0);
      if (stop_) return;
    }
  }

  std::vector<Face> faces_;
  std::unordered_map<Face, int> index_;
  std::vector<std::vector<int>> uppers_;
  std::vector<char> covered_;
  std::vector<Interval> chosen_;
  const std::function<bool(const std::vector<Interval>&)>* on_solution_ = nullptr;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

std::vector<Interval> sorted_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    if (a.lower != b.lower) return face_less(a.lower, b.lower);
    return face_less(a.upper, b.upper);
  });
  return intervals;
}

}  // namespace

std::optional<Partition> find_partition(const SimplicialComplex& c, const PartitionSearchOptions& opts,
                                        SearchStats* stats) {
  if (c.is_void()) throw Error("partition search on the void complex");
  PartitionSearch search(c, opts);
  std::optional<Partition> found;
  search.run([&](const std::vector<Interval>& intervals) {
    found = Partition{c, sorted_intervals(intervals)};
    return false;
  });
  if (stats) stats->nodes += search.nodes();
  return found;
}

void for_each_partition(const SimplicialComplex& c, const PartitionSearchOptions& opts,
                        const std::function<bool(const Partition&)>& fn) {
  if (c.is_void()) throw Error("partition search on the void complex");
  PartitionSearch search(c, opts);
  search.run([&](const std::vector<Interval>& intervals) {
    return fn(Partition{c, sorted_intervals(intervals)});
  });
}

std::optional<SdepthResult> max_partition_depth(const SimplicialComplex& c, int floor) {
  if (c.is_void()) throw Error("Stanley depth is undefined for the void complex");
  int bound = c.facets().front().size();
  for (Face f : c.facets()) bound = std::min(bound, f.size());
  SearchStats stats;
  for (int k = bound; k >= std::max(floor, 0); --k) {
    if (auto p = find_partition(c, PartitionSearchOptions{k, false}, &stats))
      return SdepthResult{k, std::move(*p), bound, stats};
  }
  return std::nullopt;
}

SdepthResult sdepth(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw Error("exact sdepth is implemented for squarefree ideals only");
  if (ideal.is_zero()) throw Error("sdepth: zero ideal");
  if (ideal.is_unit()) throw Error("sdepth: unit ideal");
  return *max_partition_depth(stanley_reisner_complex(ideal));
}

NicePartitionResult find_nice_partition(const SimplicialComplex& c) {
  NicePartitionResult result;
  result.partition = find_partition(c, PartitionSearchOptions{0, true}, &result.stats);
  return result;
}

StanleyVerdict is_stanley_ideal(const MonomialIdeal& ideal, const CoefficientField& k) {
  SdepthResult s = sdepth(ideal);
  int depth = depth_ideal(ideal, k);
  return StanleyVerdict{s.sdepth >= depth, s.sdepth, depth, std::move(s.witness)};
}

Partition singleton_partition(const SimplicialComplex& c) {
  Partition p{c, {}};
  for (Face f : all_faces(c)) p.intervals.push_back(Interval{f, f});
  return p;
}

}  // namespace stanley
