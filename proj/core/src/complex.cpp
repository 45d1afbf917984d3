#include "stanley/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "stanley/error.hpp"

namespace stanley {

namespace {

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw Error("vertex count " + std::to_string(n) + " outside [0, " +
                std::to_string(kMaxVertices) + "]");
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return face_less(a, b);
  });
  std::vector<Face> kept;
  for (Face f : faces) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [f](Face g) { return f.is_subset_of(g); });
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), FaceLess{});
  return kept;
}

template <typename Fn>
void for_each_k_subset(VertexSet s, int k, Fn&& fn) {
  std::vector<int> elems = s.elements();
  int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet sub;
    for (int i : idx) sub = sub.with(elems[i]);
    fn(sub);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& faces, int n) {
  return from_facets(faces, n, default_labels(n));
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& faces, int n,
                                                 std::vector<std::string> labels) {
  check_vertex_count(n);
  if (static_cast<int>(labels.size()) != n)
    throw Error("label table has " + std::to_string(labels.size()) + " entries, expected " +
                std::to_string(n));
  VertexSet ground = VertexSet::range(n);
  for (Face f : faces) {
    if (!f.is_subset_of(ground))
      throw Error("vertex id " + std::to_string(f.max()) + " out of range for n=" +
                  std::to_string(n));
  }
  SimplicialComplex c;
  c.n_ = n;
  c.labels_ = std::move(labels);
  c.facets_ = maximal_faces(faces);
  return c;
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return from_facets({}, n); }

SimplicialComplex SimplicialComplex::irrelevant(int n) { return from_facets({Face{}}, n); }

SimplicialComplex SimplicialComplex::simplex(int n) {
  return from_facets({VertexSet::range(n)}, n);
}

bool SimplicialComplex::is_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](Face g) { return f.is_subset_of(g); });
}

int SimplicialComplex::dim_complex() const {
  if (facets_.empty()) return kVoidDimension;
  int top = 0;
  for (Face f : facets_) top = std::max(top, f.size());
  return top - 1;
}

int SimplicialComplex::dim_ring() const {
  return facets_.empty() ? 0 : dim_complex() + 1;
}

VertexSet SimplicialComplex::vertex_set() const {
  VertexSet v;
  for (Face f : facets_) v |= f;
  return v;
}

SimplicialComplex SimplicialComplex::relabeled(std::vector<std::string> labels) const {
  return from_facets(facets_, n_, std::move(labels));
}

std::vector<Face> all_faces(const SimplicialComplex& c) {
  std::unordered_set<Face> seen;
  for (Face f : c.facets()) f.for_each_subset([&](Face s) { seen.insert(s); });
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), FaceLess{});
  return out;
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& c) {
  if (c.is_void()) throw Error("f-vector of the void complex is undefined");
  int d = c.dim_ring();
  std::vector<std::int64_t> f(d + 1, 0);
  for (Face face : all_faces(c)) ++f[face.size()];
  return f;
}

std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f) {
  int d = static_cast<int>(f.size()) - 1;
  // binom(a, b) for 0 <= b <= a <= d
  std::vector<std::vector<std::int64_t>> binom(d + 1, std::vector<std::int64_t>(d + 1, 0));
  for (int a = 0; a <= d; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b < a ? binom[a - 1][b] : 0);
  }
  std::vector<std::int64_t> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      std::int64_t term = binom[d - i][k - i] * f[i];
      h[k] += ((k - i) % 2 == 0) ? term : -term;
    }
  }
  return h;
}

std::vector<std::int64_t> h_vector(const SimplicialComplex& c) { return h_from_f(f_vector(c)); }

bool is_pure(const SimplicialComplex& c) {
  if (c.is_void()) return true;
  int size = c.facets().front().size();
  return std::all_of(c.facets().begin(), c.facets().end(),
                     [size](Face f) { return f.size() == size; });
}

SimplicialComplex link(const SimplicialComplex& c, Face f) {
  if (!c.is_face(f)) throw Error("link: argument is not a face of the complex");
  std::vector<Face> gens;
  for (Face g : c.facets())
    if (f.is_subset_of(g)) gens.push_back(g - f);
  return SimplicialComplex::from_facets(gens, c.n_vertices(), c.labels());
}

SimplicialComplex skeleton(const SimplicialComplex& c, int j) {
  if (j < -1) throw Error("skeleton dimension must be >= -1");
  std::vector<Face> gens;
  for (Face g : c.facets()) {
    if (g.size() <= j + 1)
      gens.push_back(g);
    else
      for_each_k_subset(g, j + 1, [&](Face s) { gens.push_back(s); });
  }
  return SimplicialComplex::from_facets(gens, c.n_vertices(), c.labels());
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.n_vertices() != b.n_vertices()) throw Error("intersection: vertex tables differ");
  std::vector<Face> gens;
  for (Face f : a.facets())
    for (Face g : b.facets()) gens.push_back(f & g);
  return SimplicialComplex::from_facets(gens, a.n_vertices(), a.labels());
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.n_vertices() != b.n_vertices()) throw Error("union: vertex tables differ");
  std::vector<Face> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::from_facets(gens, a.n_vertices(), a.labels());
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
  if (c.is_void()) return {Face{}};
  std::unordered_set<Face> found;
  VertexSet ground = c.ground_set();
  for (Face f : all_faces(c)) {
    (ground - f).for_each([&](int v) {
      Face cand = f.with(v);
      if (found.count(cand) || c.is_face(cand)) return;
      bool minimal = true;
      cand.for_each([&](int w) {
        if (minimal && !c.is_face(cand.without(w))) minimal = false;
      });
      if (minimal) found.insert(cand);
    });
  }
  std::vector<Face> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), FaceLess{});
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& c) {
  VertexSet ground = c.ground_set();
  std::vector<Face> gens;
  for (Face nf : minimal_nonfaces(c)) gens.push_back(ground - nf);
  return SimplicialComplex::from_facets(gens, c.n_vertices(), c.labels());
}

}  // namespace stanley
