#include "stanley/hilbert.hpp"

#include <algorithm>

#include "stanley/error.hpp"

namespace stanley {

void add_term(Polynomial& p, const Monomial& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = p.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) p.erase(it);
  }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_term(out, ma * mb, ca * cb);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b) add_term(out, m, -c);
  return out;
}

namespace {

Polynomial numerator(const std::vector<Monomial>& gens) {
  Polynomial one;
  one[Monomial{}] = 1;
  if (gens.empty()) return one;

  // Pairwise coprime generators: the numerator factors as prod (1 - g).
  VarSet seen;
  bool coprime = true;
  for (const auto& g : gens) {
    if (g.support().intersects(seen)) {
      coprime = false;
      break;
    }
    seen |= g.support();
  }
  if (coprime) {
    Polynomial out = one;
    for (const auto& g : gens) {
      Polynomial factor = one;
      add_term(factor, g, -1);
      out = out * factor;
    }
    return out;
  }

  // Pivot on the most frequent variable x:
  //   K(S/J) = K(S/(J + x)) + x * K(S/(J : x)).
  std::vector<int> count(kMaxVertices, 0);
  for (const auto& g : gens)
    for (auto [v, e] : g.entries()) ++count[v];
  int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  Monomial pivot = Monomial::variable(x);

  std::vector<Monomial> plus{pivot};
  std::vector<Monomial> quotient;
  for (const auto& g : gens) {
    if (!pivot.divides(g)) plus.push_back(g);
    quotient.push_back(g / gcd(g, pivot));
  }
  Polynomial left = numerator(minimalize(std::move(plus)));
  Polynomial right = numerator(minimalize(std::move(quotient)));
  Polynomial shifted;
  for (const auto& [m, c] : right) add_term(shifted, m * pivot, c);
  for (const auto& [m, c] : shifted) add_term(left, m, c);
  return left;
}

}  // namespace

Polynomial hilbert_numerator(const MonomialIdeal& ideal) { return numerator(ideal.gens()); }

std::vector<std::int64_t> univariate(const Polynomial& p) {
  std::vector<std::int64_t> out;
  for (const auto& [m, c] : p) {
    int d = m.degree();
    if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
    out[d] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::int64_t multiplicity(const MonomialIdeal& ideal) {
  int n = ideal.n_vars();
  int d = dim_quotient(ideal);
  std::vector<std::int64_t> q = univariate(hilbert_numerator(ideal));
  // H = q / (1-t)^n; divide q by (1-t) exactly n-d times and evaluate at 1.
  for (int step = 0; step < n - d; ++step) {
    // q = (1 - t) r  <=>  r_k = sum_{j<=k} q_j
    std::vector<std::int64_t> r(q.size(), 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    if (acc != 0) throw Error("Hilbert numerator is not divisible by (1-t)^codim");
    if (!r.empty()) r.pop_back();
    q = std::move(r);
  }
  std::int64_t e = 0;
  for (auto c : q) e += c;
  return e;
}

}  // namespace stanley
