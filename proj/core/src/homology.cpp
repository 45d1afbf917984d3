#include "stanley/homology.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "stanley/error.hpp"

namespace stanley {

namespace {

bool is_prime_number(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fraction-free (Bareiss) elimination. Returns nullopt if an intermediate
// value overflows T.
template <typename T>
std::optional<std::int64_t> bareiss_rank(std::vector<std::vector<T>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m.front().size();
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t a, b, diff;
          if (__builtin_mul_overflow(m[r][col], m[i][j], &a) ||
              __builtin_mul_overflow(m[i][col], m[r][j], &b) ||
              __builtin_sub_overflow(a, b, &diff))
            return std::nullopt;
          m[i][j] = diff / prev;
        } else {
          m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
        }
      }
      m[i][col] = 0;
    }
    prev = m[r][col];
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

__extension__ typedef __int128 wide_t;

std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = static_cast<std::int64_t>((wide_t)result * base % p);
      base = static_cast<std::int64_t>((wide_t)base * base % p);
      e >>= 1;
    }
    return result;
  };
  for (auto& row : m)
    for (auto& x : row) x = mod(x);
  std::size_t rows = m.size(), cols = m.front().size(), r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::int64_t inv = inverse(m[r][col]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      std::int64_t factor = static_cast<std::int64_t>((wide_t)m[i][col] * inv % p);
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = mod(m[i][j] - static_cast<std::int64_t>((wide_t)factor * m[r][j] % p));
    }
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

CoefficientField CoefficientField::prime(std::int64_t p) {
  if (!is_prime_number(p)) throw Error(std::to_string(p) + " is not prime");
  return CoefficientField(p);
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("p:", 0) == 0) {
    try {
      return prime(std::stoll(text.substr(2)));
    } catch (const std::logic_error&) {
    }
  }
  throw Error("field must be 'q' or 'p:<prime>', got '" + text + "'");
}

std::string CoefficientField::to_string() const {
  return p_ == 0 ? "q" : "p:" + std::to_string(p_);
}

bool HomologyProfile::acyclic_below(int k) const {
  for (const auto& [dim, rank] : reduced_betti)
    if (dim < k && rank != 0) return false;
  return true;
}

std::int64_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, const CoefficientField& k) {
  if (!k.is_rational()) return rank_mod_p(std::move(rows), k.characteristic());
  if (auto r = bareiss_rank<std::int64_t>(rows)) return *r;
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> big;
  big.reserve(rows.size());
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return *bareiss_rank<cpp_int>(std::move(big));
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const CoefficientField& k) {
  if (c.is_void()) throw Error("homology of the void complex is undefined");
  int top = c.dim_complex();
  // by_dim[i + 1] = faces of dimension i, i = -1 .. top
  std::vector<std::vector<Face>> by_dim(top + 2);
  for (Face f : all_faces(c)) by_dim[f.size()].push_back(f);

  // rank of the boundary C_i -> C_{i-1}, i = 0 .. top
  std::vector<std::int64_t> boundary_rank(top + 2, 0);
  for (int i = 0; i <= top; ++i) {
    const auto& lower = by_dim[i];
    const auto& upper = by_dim[i + 1];
    std::unordered_map<Face, std::size_t> row_of;
    for (std::size_t r = 0; r < lower.size(); ++r) row_of[lower[r]] = r;
    std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
    for (std::size_t col = 0; col < upper.size(); ++col) {
      int pos = 0;
      upper[col].for_each([&](int v) {
        m[row_of.at(upper[col].without(v))][col] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      });
    }
    boundary_rank[i] = matrix_rank(std::move(m), k);
  }

  HomologyProfile profile;
  for (int i = -1; i <= top; ++i) {
    std::int64_t chains = static_cast<std::int64_t>(by_dim[i + 1].size());
    std::int64_t out = i >= 0 ? boundary_rank[i] : 0;
    std::int64_t in = i + 1 <= top ? boundary_rank[i + 1] : 0;
    profile.reduced_betti[i] = chains - out - in;
  }
  return profile;
}

namespace {

bool link_condition(const SimplicialComplex& c, Face f, const CoefficientField& k) {
  SimplicialComplex lk = link(c, f);
  int d = lk.dim_complex();
  if (d <= 0) return true;  // {∅} or a set of points: nothing below dimension 0 except -1
  return reduced_homology(lk, k).acyclic_below(d);
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& c, const CoefficientField& k, int threads) {
  if (c.is_void()) throw Error("Cohen-Macaulay test of the void complex is undefined");
  if (!is_pure(c)) return false;
  std::vector<Face> faces = all_faces(c);
  if (threads <= 1 || faces.size() < 8) {
    return std::all_of(faces.begin(), faces.end(),
                       [&](Face f) { return link_condition(c, f, k); });
  }
  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (ok.load()) {
        std::size_t i = next.fetch_add(1);
        if (i >= faces.size()) break;
        if (!link_condition(c, faces[i], k)) ok.store(false);
      }
    });
  }
  for (auto& th : pool) th.join();
  return ok.load();
}

int depth_ring(const SimplicialComplex& c, const CoefficientField& k, int threads) {
  if (c.is_void()) throw Error("depth of the void complex is undefined");
  for (int j = c.dim_complex(); j >= 0; --j)
    if (is_cohen_macaulay(skeleton(c, j), k, threads)) return j + 1;
  return 0;
}

int depth_ideal(const MonomialIdeal& ideal, const CoefficientField& k, int threads) {
  if (ideal.is_unit()) throw Error("depth of S/I is undefined for the unit ideal");
  Polarization p = polarize(ideal);
  return depth_ring(stanley_reisner_complex(p.ideal), k, threads) - p.added_vars;
}

BuchsbaumVerdict is_buchsbaum(const SimplicialComplex& c, const CoefficientField& k) {
  if (c.is_void()) return {false, "void complex"};
  if (!is_pure(c)) return {false, "complex is not pure"};
  BuchsbaumVerdict verdict{true, ""};
  c.vertex_set().for_each([&](int v) {
    if (!verdict.buchsbaum) return;
    if (!is_cohen_macaulay(link(c, Face{v}), k)) {
      verdict.buchsbaum = false;
      verdict.reason = "link of vertex " + c.label(v) + " is not Cohen-Macaulay";
    }
  });
  return verdict;
}

std::int64_t multiplicity(const SimplicialComplex& c) {
  if (c.is_void()) return 0;
  int top = c.dim_ring();
  return std::count_if(c.facets().begin(), c.facets().end(),
                       [top](Face f) { return f.size() == top; });
}

}  // namespace stanley
