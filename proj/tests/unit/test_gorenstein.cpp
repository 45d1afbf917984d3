#include <doctest.h>

#include <algorithm>
#include <set>

#include "stanley/error.hpp"
#include "stanley/filtration.hpp"
#include "stanley/gorenstein.hpp"
#include "stanley/homology.hpp"
#include "stanley/io.hpp"

using namespace stanley;
using namespace stanley::gorenstein;

namespace {

std::vector<std::string> gen_strings(const MonomialIdeal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.gens()) out.push_back(to_string(g, i.ring()));
  return out;
}

std::vector<Monomial> monos(const std::string& csv, const Ring& r) { return io::parse_monomial_list(csv, r); }

}  // namespace

TEST_CASE("template ideals") {
  auto t1 = build_template(1);
  CHECK(gen_strings(t1.ideal) == std::vector<std::string>{"y1", "y2", "y3"});
  CHECK(t1.complex == SimplicialComplex::irrelevant(3));

  auto t2 = build_template(2);
  CHECK(t2.ideal.gens().size() == 5);
  CHECK(t2.complex == io::parse_complex_text("13\n14\n24\n25\n35\n"));
  CHECK(t2.complex.labels() == std::vector<std::string>{"1", "2", "3", "4", "5"});

  auto t3 = build_template(3);
  CHECK(t3.ideal.gens().size() == 7);
  for (const auto& g : t3.ideal.gens()) CHECK(g.degree() == 3);

  CHECK_THROWS_AS(build_template(0), Error);
}

TEST_CASE("facet triples") {
  CHECK(facet_triples(1) == std::vector<FacetTriple>{{1, 2, 3}});
  auto t2 = facet_triples(2);
  std::set<std::tuple<int, int, int>> got;
  for (const auto& t : t2) got.insert({t.a1, t.a2, t.a3});
  CHECK(got == std::set<std::tuple<int, int, int>>{{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
  CHECK(t2 == std::vector<FacetTriple>{{2, 4, 5}, {2, 3, 5}, {1, 3, 5}, {1, 3, 4}, {1, 2, 4}});

  for (int m = 1; m <= 5; ++m) {
    auto tmpl = build_template(m);
    std::vector<Face> from_triples;
    for (const auto& t : facet_triples(m)) {
      CHECK(is_valid_triple(t, m));
      from_triples.push_back(facet_of(t, m));
      CHECK(triple_of(facet_of(t, m), m) == t);
    }
    std::sort(from_triples.begin(), from_triples.end(), face_less);
    CHECK(from_triples == tmpl.complex.facets());
  }
  CHECK_FALSE(is_valid_triple({1, 2, 3}, 2));
  CHECK(to_string(FacetTriple{1, 3, 5}) == "(1,3,5)");
}

TEST_CASE("lex order") {
  CHECK(lex_less({2, 4, 5}, {1, 3, 4}));
  CHECK(lex_less({1, 3, 5}, {1, 3, 4}));
  CHECK_FALSE(lex_less({1, 3, 4}, {1, 3, 4}));
  CHECK_FALSE(lex_less({1, 3, 4}, {2, 4, 5}));
}

TEST_CASE("shelling witnesses") {
  auto w = shelling_witness({2, 4, 5}, {1, 3, 4}, 2);
  CHECK(w.h == FacetTriple{1, 3, 5});
  CHECK(w.c == 5);
  CHECK(w.branch == "1(iii)");

  // |G \ F| = 1
  auto same = shelling_witness({1, 3, 5}, {1, 3, 4}, 2);
  CHECK(same.h == FacetTriple{1, 3, 5});
  CHECK(same.c == 5);

  CHECK_THROWS_AS(shelling_witness({1, 3, 4}, {2, 4, 5}, 2), Error);

  for (int m = 1; m <= 5; ++m) {
    auto ts = facet_triples(m);
    std::set<std::string> branches;
    for (std::size_t j = 0; j < ts.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const auto& f = ts[i];
        const auto& g = ts[j];
        Witness wt = shelling_witness(f, g, m);
        branches.insert(wt.branch);
        Face fg = facet_of(f, m), gg = facet_of(g, m), hg = facet_of(wt.h, m);
        CHECK(is_valid_triple(wt.h, m));
        CHECK(lex_less(wt.h, g));
        CHECK((gg - hg) == Face{wt.c - 1});
        CHECK((gg - fg).contains(wt.c - 1));
      }
    if (m >= 3) CHECK(branches.size() > 5);
  }
}

TEST_CASE("lex shelling and homological profile") {
  for (int m = 1; m <= 4; ++m) {
    auto t = build_template(m);
    auto order = lex_shelling(m);
    CHECK(order.facets.size() == t.complex.facets().size());
    CHECK(verify_shelling(t.complex, order).valid);
    CHECK(is_cohen_macaulay(t.complex, CoefficientField::rationals()));
    CHECK(t.complex.n_vertices() - t.complex.dim_ring() == 3);
    auto h = h_vector(t.complex);
    auto rev = h;
    std::reverse(rev.begin(), rev.end());
    CHECK(h == rev);
  }
}

TEST_CASE("instantiation") {
  auto r5 = Ring::standard(5);
  auto cyc = instantiate(2, monos("x1,x2,x3,x4,x5", *r5), r5);
  CHECK(stanley_reisner_complex(cyc) == io::parse_complex_text("13\n14\n24\n25\n35\n"));

  auto r4 = Ring::standard(4);
  auto ci = instantiate(1, monos("x1*x2,x3,x4^2", *r4), r4);
  CHECK(gen_strings(ci) == std::vector<std::string>{"x3", "x1*x2", "x4^2"});

  auto r6 = Ring::standard(6);
  auto i = instantiate(2, monos("x1^2,x2,x3*x4,x5,x6", *r6), r6);
  MonomialIdeal expected(r6, monos("x1^2*x2,x2*x3*x4,x3*x4*x5,x5*x6,x1^2*x6", *r6));
  CHECK(i == expected);

  CHECK_THROWS_AS(instantiate(2, monos("x1,x2,x3,x4", *r5), r5), Error);
  CHECK_THROWS_AS(instantiate(2, monos("x1,x2,x3,x4,x4*x5", *r5), r5), Error);
}

TEST_CASE("recognition") {
  auto r5 = Ring::standard(5);
  auto rec = recognize(instantiate(2, monos("x1,x2,x3,x4,x5", *r5), r5));
  REQUIRE(rec);
  CHECK(rec->m == 2);
  CHECK(rec->u == monos("x1,x2,x3,x4,x5", *r5));

  CHECK_FALSE(recognize(io::parse_ideal_text("x1*x2\nx3*x4\n")).has_value());
  CHECK_FALSE(recognize(io::parse_ideal_text("x1*x2\nx2*x3\nx1*x3*x4\n")).has_value());

  // round trip up to rotation and reflection
  auto r8 = Ring::standard(8);
  auto u = monos("x3^2,x1,x5*x6,x2,x4*x7^2", *r8);
  auto i = instantiate(2, u, r8);
  auto back = recognize(i);
  REQUIRE(back);
  CHECK(back->m == 2);
  CHECK(instantiate(back->m, back->u, r8) == i);
  std::vector<Monomial> a = back->u, b = u;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);

  for (int m = 1; m <= 6; ++m) {
    int n = 2 * m + 1;
    auto ring = Ring::standard(n + 2);
    std::vector<Monomial> seq;
    for (int k = 0; k < n; ++k) seq.push_back(Monomial::variable(k, 1 + k % 2));
    seq.back() = seq.back() * Monomial::variable(n);
    auto ideal = instantiate(m, seq, ring);
    auto got = recognize(ideal);
    REQUIRE(got);
    CHECK(got->m == m);
    CHECK(instantiate(got->m, got->u, ring) == ideal);
  }
}

TEST_CASE("substituted templates are pretty clean") {
  auto r6 = Ring::standard(6);
  auto u = monos("x1^2,x2,x3*x4,x5,x6", *r6);
  auto t = build_template(2);
  auto base = shelling_to_clean_filtration(t.complex, lex_shelling(2), t.ideal.ring_ptr());
  CHECK(classify(base).clean);
  auto f = substitute_filtration(base, u, r6);
  CHECK(f.base == instantiate(2, u, r6));
  CHECK(verify_filtration(f).valid);
  CHECK(classify(f).pretty_clean);
}
