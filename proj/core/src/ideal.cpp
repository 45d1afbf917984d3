#include "stanley/ideal.hpp"

#include <algorithm>
#include <map>

#include "stanley/error.hpp"

namespace stanley {

// --- Ring -------------------------------------------------------------------

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxVertices)
    throw Error("ring has " + std::to_string(names_.size()) + " variables; at most " +
                std::to_string(kMaxVertices) + " are supported");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw Error("duplicate variable name '" + names_[i] + "'");
}

std::shared_ptr<const Ring> Ring::standard(int n, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names));
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

int Ring::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<Entry> entries) {
  std::map<int, int> acc;
  for (auto [v, e] : entries) {
    if (v < 0 || v >= kMaxVertices) throw Error("variable id out of range");
    if (e < 0) throw Error("negative exponent");
    acc[v] += e;
  }
  for (auto [v, e] : acc)
    if (e > 0) entries_.emplace_back(v, e);
}

Monomial Monomial::variable(int v, int exponent) { return Monomial({{v, exponent}}); }

Monomial Monomial::squarefree(VarSet vars) {
  Monomial m;
  vars.for_each([&](int v) { m.entries_.emplace_back(v, 1); });
  return m;
}

Monomial Monomial::from_dense(const std::vector<int>& exponents) {
  Monomial m;
  for (int v = 0; v < static_cast<int>(exponents.size()); ++v)
    if (exponents[v] > 0) m.entries_.emplace_back(v, exponents[v]);
  return m;
}

int Monomial::exponent(int v) const {
  for (auto [w, e] : entries_)
    if (w == v) return e;
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (auto [v, e] : entries_) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Entry x) { return x.second == 1; });
}

VarSet Monomial::support() const {
  VarSet s;
  for (auto [v, e] : entries_) s = s.with(v);
  return s;
}

std::vector<int> Monomial::dense(int n) const {
  std::vector<int> out(n, 0);
  for (auto [v, e] : entries_) {
    if (v >= n) throw Error("monomial uses a variable outside the ring");
    out[v] = e;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.entries_.begin();
  for (auto [v, e] : entries_) {
    while (it != other.entries_.end() && it->first < v) ++it;
    if (it == other.entries_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(int k) const {
  Monomial out;
  if (k == 0) return out;
  for (auto [v, e] : entries_) out.entries_.emplace_back(v, e * k);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw Error("monomial division is not exact");
  Monomial out;
  auto b = other.entries_.begin();
  for (auto [v, e] : entries_) {
    int sub = 0;
    if (b != other.entries_.end() && b->first == v) sub = (b++)->second;
    if (e > sub) out.entries_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  auto y = b.entries().begin();
  for (auto [v, e] : a.entries()) {
    while (y != b.entries().end() && y->first < v) ++y;
    if (y != b.entries().end() && y->first == v) out.emplace_back(v, std::min(e, y->second));
  }
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out(a.entries());
  for (auto [v, e] : b.entries()) {
    auto it = std::find_if(out.begin(), out.end(), [v = v](auto x) { return x.first == v; });
    if (it == out.end())
      out.emplace_back(v, e);
    else
      it->second = std::max(it->second, e);
  }
  return Monomial(std::move(out));
}

bool monomial_order_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->first != y->first) return x->first < y->first;  // a has the smaller variable
    if (x->second != y->second) return x->second > y->second;
    ++x;
    ++y;
  }
  return x != a.entries().end() && y == b.entries().end();
}

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.is_unit()) return "1";
  std::string out;
  for (auto [v, e] : m.entries()) {
    if (!out.empty()) out += '*';
    out += ring.name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string to_string(const MonomialPrime& p, const Ring& ring) {
  std::string out = "(";
  bool first = true;
  p.vars.for_each([&](int v) {
    if (!first) out += ',';
    out += ring.name(v);
    first = false;
  });
  return out + ")";
}

// --- MonomialIdeal ----------------------------------------------------------

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), monomial_order_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  if (!ring_) throw Error("monomial ideal without a ring");
  for (const auto& g : gens)
    if (g.max_variable() >= ring_->size())
      throw Error("generator uses a variable outside the ring");
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::of_prime(RingPtr ring, const MonomialPrime& p) {
  std::vector<Monomial> gens;
  p.vars.for_each([&](int v) { gens.push_back(Monomial::variable(v)); });
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_prime() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

std::optional<MonomialPrime> MonomialIdeal::as_prime() const {
  if (!is_prime()) return std::nullopt;
  MonomialPrime p;
  for (const auto& g : gens_) p.vars = p.vars.with(g.entries().front().first);
  return p;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

std::vector<int> MonomialIdeal::max_exponents() const {
  std::vector<int> out(n_vars(), 0);
  for (const auto& g : gens_)
    for (auto [v, e] : g.entries()) out[v] = std::max(out[v], e);
  return out;
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) { return ideal.contains(u); }

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(g / gcd(g, u));
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens));
}

MonomialIdeal add(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> gens = ideal.gens();
  gens.push_back(u);
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw Error("ideal sum: ambient rings differ");
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring_ptr(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

VarSet support(const Monomial& u) { return u.support(); }

bool is_regular_sequence(const std::vector<Monomial>& seq) {
  VarSet seen;
  bool disjoint = true;
  for (const auto& u : seq) {
    if (u.is_unit()) throw Error("regular sequence test: unit monomial in sequence");
    VarSet s = u.support();
    if (s.intersects(seen)) disjoint = false;
    seen |= s;
  }
  return disjoint;
}

// --- Stanley-Reisner bridge ---------------------------------------------------

RingPtr ring_for_complex(const SimplicialComplex& c) {
  std::vector<std::string> names;
  for (const auto& l : c.labels()) names.push_back("x" + l);
  return Ring::make(std::move(names));
}

std::vector<std::string> labels_for_ring(const Ring& ring) {
  bool strip = std::all_of(ring.names().begin(), ring.names().end(), [](const std::string& s) {
    return s.size() > 1 && s.front() == 'x';
  });
  std::vector<std::string> labels;
  for (const auto& s : ring.names()) labels.push_back(strip ? s.substr(1) : s);
  return labels;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
  std::vector<Monomial> gens;
  for (Face nf : minimal_nonfaces(c)) gens.push_back(Monomial::squarefree(nf));
  return MonomialIdeal(ring_for_complex(c), std::move(gens));
}

namespace {

// Minimal transversals of the hypergraph `edges` by branching on the first
// edge not yet hit. Vertices in `forbidden` were branched on earlier.
void collect_covers(const std::vector<VarSet>& edges, VarSet chosen, VarSet forbidden,
                    std::vector<VarSet>& out) {
  for (VarSet found : out)
    if (found.is_subset_of(chosen)) return;
  const VarSet* open = nullptr;
  for (const auto& e : edges)
    if (!e.intersects(chosen)) {
      open = &e;
      break;
    }
  if (!open) {
    out.push_back(chosen);
    return;
  }
  VarSet branch = *open - forbidden;
  branch.for_each([&](int v) {
    collect_covers(edges, chosen.with(v), forbidden, out);
    forbidden = forbidden.with(v);
  });
}

}  // namespace

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  std::vector<VarSet> edges;
  for (const auto& g : ideal.gens()) edges.push_back(g.support());
  std::sort(edges.begin(), edges.end(), [](VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return face_less(a, b);
  });
  std::vector<VarSet> covers;
  collect_covers(edges, VarSet{}, VarSet{}, covers);
  std::vector<VarSet> minimal;
  for (VarSet c : covers) {
    bool dominated = std::any_of(covers.begin(), covers.end(), [c](VarSet d) {
      return d != c && d.is_subset_of(c);
    });
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), FaceLess{});
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  std::vector<MonomialPrime> out;
  for (VarSet c : minimal) out.push_back(MonomialPrime{c});
  return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw Error("Stanley-Reisner complex requires a squarefree ideal");
  int n = ideal.n_vars();
  VarSet ground = VarSet::range(n);
  std::vector<Face> facets;
  for (const auto& p : minimal_primes(ideal)) facets.push_back(ground - p.vars);
  return SimplicialComplex::from_facets(facets, n, labels_for_ring(ideal.ring()));
}

int dim_quotient(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error("dimension of S/I is undefined for the unit ideal");
  int min_height = ideal.n_vars();
  for (const auto& p : minimal_primes(ideal)) min_height = std::min(min_height, p.height());
  return ideal.n_vars() - min_height;
}

// --- polarization / substitution ----------------------------------------------

Polarization polarize(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  int n = ring.size();
  std::vector<int> width = ideal.max_exponents();
  std::vector<std::string> names = ring.names();
  std::vector<std::pair<int, int>> origin;
  for (int i = 0; i < n; ++i) origin.emplace_back(i, 1);
  // copy_id[i][k-1] = id of x_{i,k}
  std::vector<std::vector<int>> copy_id(n);
  for (int i = 0; i < n; ++i) {
    copy_id[i].push_back(i);
    for (int k = 2; k <= width[i]; ++k) {
      copy_id[i].push_back(static_cast<int>(names.size()));
      names.push_back(ring.name(i) + "_" + std::to_string(k));
      origin.emplace_back(i, k);
    }
  }
  RingPtr target = Ring::make(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Monomial::Entry> entries;
    for (auto [v, e] : g.entries())
      for (int k = 0; k < e; ++k) entries.emplace_back(copy_id[v][k], 1);
    gens.emplace_back(std::move(entries));
  }
  int added = target->size() - n;
  return Polarization{MonomialIdeal(std::move(target), std::move(gens)), std::move(origin), added};
}

Monomial depolarize(const Monomial& u, const Polarization& p) {
  std::vector<Monomial::Entry> entries;
  for (auto [v, e] : u.entries()) entries.emplace_back(p.origin.at(v).first, e);
  return Monomial(std::move(entries));
}

Monomial substitute(const Monomial& u, const std::vector<Monomial>& images) {
  Monomial out;
  for (auto [v, e] : u.entries()) {
    if (v >= static_cast<int>(images.size())) throw Error("substitution: missing image");
    out = out * images[v].pow(e);
  }
  return out;
}

MonomialIdeal substitute(const MonomialIdeal& ideal, const std::vector<Monomial>& images,
                         RingPtr target) {
  if (static_cast<int>(images.size()) != ideal.n_vars())
    throw Error("substitution needs one image per variable (" + std::to_string(ideal.n_vars()) +
                "), got " + std::to_string(images.size()));
  if (!is_regular_sequence(images))
    throw Error("substitution images are not a monomial regular sequence");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(substitute(g, images));
  return MonomialIdeal(std::move(target), std::move(gens));
}

}  // namespace stanley
