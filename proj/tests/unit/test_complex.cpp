#include <doctest.h>

#include "oracles.hpp"
#include "stanley/complex.hpp"
#include "stanley/error.hpp"
#include "stanley/fixtures.hpp"
#include "stanley/io.hpp"

using namespace stanley;

namespace {

SimplicialComplex cx(const std::string& text) { return io::parse_complex_text(text); }

std::vector<std::string> face_strings(const std::vector<Face>& fs, const SimplicialComplex& c) {
  std::vector<std::string> out;
  for (Face f : fs) out.push_back(io::face_string(f, c));
  return out;
}

const SimplicialComplex kFiveCycle = io::parse_complex_text("13\n14\n24\n25\n35\n");

}  // namespace

TEST_CASE("from_facets keeps the maximal faces") {
  auto c = SimplicialComplex::from_facets({VertexSet{0, 1}, VertexSet{0}, VertexSet{1, 2}}, 3);
  CHECK(face_strings(c.facets(), c) == std::vector<std::string>{"12", "23"});
  auto again = SimplicialComplex::from_facets(c.facets(), 3);
  CHECK(again == c);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({VertexSet{3}}, 3), Error);
}

TEST_CASE("void and irrelevant complexes are distinct") {
  auto v = SimplicialComplex::void_complex(3);
  auto e = SimplicialComplex::irrelevant(3);
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(v.dim_complex() == kVoidDimension);
  CHECK(e.dim_complex() == -1);
  CHECK(e.dim_ring() == 0);
  CHECK_FALSE(v == e);
  CHECK(SimplicialComplex::from_facets({}, 4).is_void());
  CHECK_THROWS_AS(f_vector(v), Error);
  CHECK(f_vector(e) == std::vector<std::int64_t>{1});
}

TEST_CASE("all_faces order and counts") {
  auto c = cx("12\n");
  CHECK(face_strings(all_faces(c), c) == std::vector<std::string>{"-", "1", "2", "12"});
  CHECK(all_faces(fixtures::dunce_hat()).size() == 50);
  CHECK(all_faces(kFiveCycle).size() == 11);
}

TEST_CASE("f- and h-vectors") {
  CHECK(f_vector(fixtures::cylinder()) == std::vector<std::int64_t>{1, 6, 12, 6});
  CHECK(h_vector(fixtures::cylinder()) == std::vector<std::int64_t>{1, 3, 3, -1});
  CHECK(f_vector(fixtures::dunce_hat()) == std::vector<std::int64_t>{1, 8, 24, 17});
  CHECK(h_vector(fixtures::dunce_hat()) == std::vector<std::int64_t>{1, 5, 11, 0});
  CHECK(h_vector(SimplicialComplex::simplex(1)) == std::vector<std::int64_t>{1, 0});
  CHECK(f_vector(SimplicialComplex::simplex(1)) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("faces, f and h agree with the oracles on all complexes with 4 vertices") {
  for (const auto& facets : oracle::antichains(4)) {
    std::vector<Face> fs;
    for (auto b : facets) fs.push_back(VertexSet(b));
    auto c = SimplicialComplex::from_facets(fs, 4);
    if (c.is_void()) continue;
    auto faces = all_faces(c);
    CHECK(oracle::face_set(faces) == oracle::faces(c));
    CHECK(std::is_sorted(faces.begin(), faces.end(), FaceLess{}));
    auto f = f_vector(c);
    CHECK(f == oracle::f_vector(c));
    CHECK(h_from_f(f) == oracle::h_vector(f));
  }
}

TEST_CASE("h satisfies the polynomial identity at t = 1, 2, 3 for random complexes on 7 vertices") {
  std::uint64_t state = 12345;
  auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Face> fs;
    int k = 1 + static_cast<int>(next() >> 60);
    for (int i = 0; i < k; ++i) fs.push_back(VertexSet((next() >> 20) & 0x7F));
    auto c = SimplicialComplex::from_facets(fs, 7);
    auto f = f_vector(c);
    auto h = h_vector(c);
    int d = c.dim_ring();
    for (std::int64_t t : {1, 2, 3}) {
      std::int64_t lhs = 0, rhs = 0, p = 1;
      for (int i = 0; i <= d; ++i, p *= t) lhs += f[i] * p;
      for (int i = 0; i <= d; ++i) {
        std::int64_t term = h[i];
        for (int a = 0; a < i; ++a) term *= t;
        for (int a = 0; a < d - i; ++a) term *= (1 + t);
        rhs += term;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("links and skeletons") {
  auto cyl = fixtures::cylinder();
  auto l = link(cyl, VertexSet{1});
  CHECK(oracle::face_set(all_faces(l)) == oracle::link(cyl, VertexSet{1}.bits()));
  CHECK(face_strings(l.facets(), l) == std::vector<std::string>{"13", "16", "34"});
  CHECK(link(cyl, Face{}) == cyl);
  CHECK_THROWS_AS(link(cyl, VertexSet{0, 3}), Error);

  auto dh = fixtures::dunce_hat();
  auto sk = skeleton(dh, 1);
  CHECK(f_vector(sk) == std::vector<std::int64_t>{1, 8, 24});
  CHECK(sk.facets().size() == 24);
  for (int j = 0; j <= 3; ++j) CHECK(skeleton(dh, j).dim_complex() == std::min(j, dh.dim_complex()));

  for (const auto& facets : oracle::antichains(4)) {
    std::vector<Face> fs;
    for (auto b : facets) fs.push_back(VertexSet(b));
    auto c = SimplicialComplex::from_facets(fs, 4);
    if (c.is_void()) continue;
    for (Face f : all_faces(c))
      CHECK(oracle::face_set(all_faces(link(c, f))) == oracle::link(c, f.bits()));
  }
}

TEST_CASE("purity") {
  CHECK(is_pure(fixtures::dunce_hat()));
  CHECK_FALSE(is_pure(cx("12\n3\n")));
}

TEST_CASE("Alexander dual") {
  auto c = cx("12\n23\n");
  auto mnf = minimal_nonfaces(c);
  CHECK(face_strings(mnf, c) == std::vector<std::string>{"13"});
  auto d = alexander_dual(c);
  CHECK(face_strings(d.facets(), d) == std::vector<std::string>{"2"});

  auto dual5 = alexander_dual(kFiveCycle);
  CHECK(dual5.facets().size() == 5);
  for (Face f : dual5.facets()) CHECK(f.size() == 3);

  for (const auto& facets : oracle::antichains(4)) {
    std::vector<Face> fs;
    for (auto b : facets) fs.push_back(VertexSet(b));
    auto c4 = SimplicialComplex::from_facets(fs, 4);
    auto dual = alexander_dual(c4);
    CHECK(alexander_dual(dual) == c4);
    std::set<std::uint64_t> dual_faces;
    if (!dual.is_void()) dual_faces = oracle::face_set(all_faces(dual));
    CHECK(dual_faces == oracle::alexander_dual(c4));
    std::size_t nf = c4.is_void() ? 0 : all_faces(c4).size();
    CHECK(nf + dual_faces.size() == 16);
    CHECK(oracle::face_set(minimal_nonfaces(c4)) == oracle::minimal_nonfaces(c4));
  }
}

TEST_CASE("intersection and union") {
  auto h = fixtures::hachimori();
  CHECK(intersection(h.delta1, h.delta2) == h.gamma);
  CHECK(union_of(h.delta1, h.delta2) == h.delta);
  CHECK(h.delta.facets().size() == 22);
}
