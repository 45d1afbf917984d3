#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "stanley/error.hpp"
#include "stanley/fixtures.hpp"
#include "stanley/gorenstein.hpp"
#include "stanley/io.hpp"
#include "stanley/random.hpp"
#include "stanley/shelling.hpp"

using namespace stanley;

namespace {

const SimplicialComplex kFiveCycle = io::parse_complex_text("13\n14\n24\n25\n35\n");

ShellingOrder order_of(const SimplicialComplex& c, std::string csv) {
  std::replace(csv.begin(), csv.end(), ',', '\n');
  return io::parse_shelling_text(csv, c);
}

std::string intervals_text(const Partition& p) {
  std::string out;
  for (const auto& iv : p.intervals)
    out += "[" + (iv.lower.empty() ? std::string() : io::face_string(iv.lower, p.ambient)) + "," +
           io::face_string(iv.upper, p.ambient) + "]";
  return out;
}

MonomialIdeal ideal(const std::string& text) { return io::parse_ideal_text(text); }

std::vector<Monomial> gens_in_order(const MonomialIdeal& i, const std::vector<std::string>& names) {
  std::vector<Monomial> out;
  for (const auto& n : names) out.push_back(io::parse_monomial(n, i.ring()));
  return out;
}

}  // namespace

TEST_CASE("verify_shelling on the literature orders") {
  auto h = fixtures::hachimori();
  CHECK(verify_shelling(h.delta1, h.shelling1).valid);
  CHECK(verify_shelling(h.delta2, h.shelling2).valid);
  CHECK(h.shelling1.facets.size() == 14);
  CHECK(h.shelling2.facets.size() == 8);

  auto bad = verify_shelling(kFiveCycle, order_of(kFiveCycle, "13,24,14,25,35"));
  CHECK_FALSE(bad.valid);
  CHECK(bad.i == 0);
  CHECK(bad.j == 1);
  CHECK(verify_shelling(kFiveCycle, order_of(kFiveCycle, "13,35,25,24,14")).valid);

  CHECK_THROWS_AS(verify_shelling(kFiveCycle, order_of(kFiveCycle, "13,35,25,24")), Error);
  CHECK_THROWS_AS(verify_shelling(kFiveCycle, order_of(kFiveCycle, "13,35,25,24,24")), Error);
  CHECK_THROWS_AS(verify_shelling(kFiveCycle, order_of(kFiveCycle, "13,35,25,24,12")), Error);
}

TEST_CASE("non-pure shellings") {
  // an edge with an isolated vertex attached last
  auto c = io::parse_complex_text("12\n3\n");
  CHECK(verify_shelling(c, order_of(c, "12,3")).valid);
  CHECK_FALSE(verify_shelling(c, order_of(c, "3,12")).valid);
  CHECK(is_shellable(c).shellable);
  // two disjoint edges are not shellable in either order
  auto d = io::parse_complex_text("12\n34\n");
  CHECK_FALSE(is_shellable(d).shellable);
}

TEST_CASE("shellability decisions") {
  auto dh = is_shellable(fixtures::dunce_hat());
  CHECK_FALSE(dh.shellable);
  CHECK_FALSE(dh.order.has_value());
  CHECK(dh.states > 0);

  auto g2 = is_shellable(gorenstein::build_template(2).complex);
  REQUIRE(g2.shellable);
  CHECK(verify_shelling(gorenstein::build_template(2).complex, *g2.order).valid);

  auto h = fixtures::hachimori();
  auto s1 = is_shellable(h.delta1);
  REQUIRE(s1.shellable);
  CHECK(verify_shelling(h.delta1, *s1.order).valid);

  CHECK_THROWS_AS(is_shellable(fixtures::dunce_hat(), 10), CapExceeded);
  CHECK(is_shellable(SimplicialComplex::irrelevant(3)).shellable);
}

TEST_CASE("DP agrees with permutation search") {
  int checked = 0;
  auto run = [&](int n, std::size_t stride) {
    auto all = oracle::antichains(n);
    for (std::size_t k = 0; k < all.size(); k += stride) {
      if (all[k].empty() || all[k].size() > 6) continue;
      std::vector<Face> fs;
      for (auto b : all[k]) fs.push_back(VertexSet(b));
      auto c = SimplicialComplex::from_facets(fs, n);
      auto r = is_shellable(c);
      CHECK(r.shellable == oracle::shellable_by_permutations(c));
      if (r.shellable) {
        std::vector<std::uint64_t> g;
        for (Face f : r.order->facets) g.push_back(f.bits());
        CHECK(oracle::is_shelling(g));
        auto p = shelling_to_partition(c, *r.order);
        CHECK(oracle::is_partition(c, p.intervals));
        CHECK(is_nice(p));
      }
      ++checked;
    }
  };
  run(4, 1);
  run(5, 7);
  CHECK(checked > 1000);
}

TEST_CASE("restriction faces") {
  auto h = fixtures::hachimori();
  auto p1 = shelling_to_partition(h.delta1, h.shelling1);
  CHECK(intervals_text(p1).rfind("[,148][9,149][0,140]", 0) == 0);
  CHECK(p1.intervals.size() == 14);
  CHECK(validate_partition(p1).valid);
  auto p2 = shelling_to_partition(h.delta2, h.shelling2);
  CHECK(intervals_text(p2).rfind("[,125][6,126][7,127][67,167]", 0) == 0);

  auto pc = shelling_to_partition(kFiveCycle, order_of(kFiveCycle, "13,14,24,25,35"));
  CHECK(intervals_text(pc) == "[,13][4,14][2,24][5,25][35,35]");

  CHECK_THROWS_AS(shelling_to_partition(kFiveCycle, order_of(kFiveCycle, "13,24,14,25,35")), Error);
}

TEST_CASE("linear quotients") {
  auto t = ideal("x1*x2\nx1*x3\nx2*x3\n");
  auto given = verify_linear_quotients(t, gens_in_order(t, {"x1*x2", "x1*x3", "x2*x3"}));
  CHECK(given.linear_quotients);
  CHECK(has_linear_quotients(t).linear_quotients);

  auto tr = ideal("x1*x2\nx1*x3\n");
  CHECK(has_linear_quotients(tr).linear_quotients);

  auto two = ideal("x1*x2*x3\nx4*x5*x6\n");
  auto r = has_linear_quotients(two);
  CHECK_FALSE(r.linear_quotients);
  auto v = verify_linear_quotients(two, gens_in_order(two, {"x4*x5*x6", "x1*x2*x3"}));
  CHECK_FALSE(v.linear_quotients);
  CHECK(v.failed_at == 1);

  // an order that fails even though another order works
  auto path = ideal("x1*x2\nx3*x4\nx2*x3\n");
  CHECK_FALSE(verify_linear_quotients(path, gens_in_order(path, {"x1*x2", "x3*x4", "x2*x3"})).linear_quotients);
  auto found = has_linear_quotients(path);
  REQUIRE(found.linear_quotients);
  CHECK(verify_linear_quotients(path, found.order).linear_quotients);

  CHECK_THROWS_AS(verify_linear_quotients(path, gens_in_order(path, {"x1*x2", "x3*x4"})), Error);
}

TEST_CASE("clean via the Alexander dual") {
  auto pol = polarize(ideal("x1^2\nx2*x3\n"));
  auto r = check_clean_via_dual(pol.ideal);
  CHECK(r.clean);
  CHECK(r.method == "dual-linear-quotients");
  REQUIRE(r.shelling);
  CHECK(verify_shelling(stanley_reisner_complex(pol.ideal), *r.shelling).valid);

  auto dh = check_clean_via_dual(stanley_reisner_ideal(fixtures::dunce_hat()));
  CHECK_FALSE(dh.clean);
  CHECK(dh.method == "direct-shelling-search");
  CHECK_FALSE(dh.evidence.empty());

  CHECK_THROWS_AS(check_clean_via_dual(ideal("x1^2\n")), Error);
}

TEST_CASE("dual linear quotients imply shellability on random ideals") {
  int via_dual = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    auto i = random::squarefree(seed, n);
    auto c = stanley_reisner_complex(i);
    auto r = check_clean_via_dual(i);
    CHECK(r.clean == is_shellable(c).shellable);
    if (r.method == "dual-linear-quotients") {
      ++via_dual;
      CHECK(r.clean);
      REQUIRE(r.shelling);
      CHECK(verify_shelling(c, *r.shelling).valid);
    }
  }
  CHECK(via_dual > 0);
}

TEST_CASE("gluing along the Hachimori intersection") {
  auto h = fixtures::hachimori();
  auto p1 = shelling_to_partition(h.delta1, h.shelling1);

  auto fail = glue_partitions(p1, shelling_to_partition(h.delta2, h.shelling2), h.gamma);
  CHECK_FALSE(fail.partition.has_value());
  REQUIRE(fail.failed_interval);
  CHECK(io::face_string(fail.failed_interval->lower, h.delta2) == "6");
  CHECK(io::face_string(fail.failed_interval->upper, h.delta2) == "126");
  REQUIRE(fail.minimal_elements.size() == 2);
  CHECK(io::face_string(fail.minimal_elements[0], h.delta2) == "16");
  CHECK(io::face_string(fail.minimal_elements[1], h.delta2) == "26");

  CHECK(validate_partition(h.adjusted2).valid);
  CHECK(is_nice(h.adjusted2));
  auto ok = glue_partitions(p1, h.adjusted2, h.gamma);
  REQUIRE(ok.partition);
  CHECK(ok.partition->intervals.size() == 22);
  CHECK(ok.partition->ambient == h.delta);
  CHECK(validate_partition(*ok.partition).valid);
  CHECK(is_nice(*ok.partition));
  std::vector<Interval> tail(ok.partition->intervals.begin() + 14, ok.partition->intervals.end());
  CHECK(tail == h.adjusted2_restricted.intervals);
  CHECK(intervals_text(Partition{h.delta, tail}).rfind("[2,237][12,125][35,356][16,167]", 0) == 0);
}

TEST_CASE("gluing edge cases") {
  auto left = SimplicialComplex::from_facets({VertexSet{0, 1}}, 4);
  auto right = SimplicialComplex::from_facets({VertexSet{2}, VertexSet{3}}, 4);
  Partition pl{left, {Interval{Face{}, VertexSet{0, 1}}}};
  Partition pr{right, {Interval{Face{}, VertexSet{2}}, Interval{VertexSet{3}, VertexSet{3}}}};
  // disjoint: plain concatenation
  auto g = glue_partitions(pl, pr, SimplicialComplex::void_complex(4));
  REQUIRE(g.partition);
  CHECK(g.partition->intervals.size() == 3);
  CHECK(g.partition->ambient == SimplicialComplex::from_facets({VertexSet{0, 1}, VertexSet{2}, VertexSet{3}}, 4));

  // Γ must be the intersection
  auto e1 = SimplicialComplex::from_facets({VertexSet{0, 1}}, 3);
  auto e2 = SimplicialComplex::from_facets({VertexSet{1, 2}}, 3);
  Partition q1{e1, {Interval{Face{}, VertexSet{0, 1}}}};
  Partition q2{e2, {Interval{Face{}, VertexSet{1, 2}}}};
  CHECK_THROWS_AS(glue_partitions(q1, q2, SimplicialComplex::from_facets({VertexSet{0}}, 3)), Error);
  // a shared vertex: [∅,23] minus Γ = {3, 23} has the single minimum 3
  auto ok = glue_partitions(q1, q2, SimplicialComplex::from_facets({VertexSet{1}}, 3));
  REQUIRE(ok.partition);
  CHECK(ok.partition->intervals.back() == Interval{VertexSet{2}, VertexSet{1, 2}});
  CHECK(validate_partition(*ok.partition).valid);
}
