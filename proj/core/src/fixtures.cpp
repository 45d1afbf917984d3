#include "stanley/fixtures.hpp"

#include <sstream>

#include "stanley/error.hpp"
#include "stanley/gorenstein.hpp"
#include "stanley/io.hpp"

namespace stanley::fixtures {

namespace {

const std::vector<std::string> kHachimoriLabels = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "0"};

std::vector<Face> faces(const std::string& list, const SimplicialComplex& frame) {
  std::istringstream in(list);
  std::vector<Face> out;
  std::string tok;
  while (in >> tok) out.push_back(io::parse_face(tok, frame));
  return out;
}

SimplicialComplex complex_on(const std::vector<std::string>& labels, const std::string& facets) {
  auto frame = SimplicialComplex::simplex(static_cast<int>(labels.size())).relabeled(labels);
  return SimplicialComplex::from_facets(faces(facets, frame), frame.n_vertices(), labels);
}

Partition partition_on(const SimplicialComplex& c, const std::string& intervals) {
  Partition p{c, {}};
  std::istringstream in(intervals);
  std::string tok;
  while (in >> tok) {
    auto comma = tok.find(',');
    p.intervals.push_back(
        Interval{io::parse_face(tok.substr(0, comma), c), io::parse_face(tok.substr(comma + 1), c)});
  }
  return p;
}

ShellingOrder order_on(const SimplicialComplex& c, const std::string& facets) {
  return ShellingOrder{faces(facets, c)};
}

}  // namespace

SimplicialComplex dunce_hat() {
  return complex_on(default_labels(8),
                    "124 125 145 234 348 458 568 256 236 138 128 278 678 237 137 167 136");
}

Partition dunce_hat_partition() {
  return partition_on(dunce_hat(),
                      "-,124 3,234 5,145 6,236 7,137 8,348 13,138 16,136 18,128 25,125 27,237 "
                      "28,278 56,256 67,167 68,568 78,678 58,458");
}

SimplicialComplex cylinder() { return complex_on(default_labels(6), "123 126 156 234 345 456"); }

MonomialIdeal cylinder_ideal() {
  auto ring = Ring::standard(6);
  std::vector<Monomial> gens;
  for (const char* g : {"x1*x4", "x2*x5", "x3*x6", "x1*x3*x5", "x2*x4*x6"})
    gens.push_back(io::parse_monomial(g, *ring));
  return MonomialIdeal(ring, gens);
}

Partition cylinder_partition() {
  return partition_on(cylinder(), "-,123 4,234 5,345 6,456 15,156 16,126 26,26");
}

Hachimori hachimori() {
  const std::string d1 = "148 149 140 150 189 348 349 378 340 390 590 569 689 678";
  const std::string d2 = "125 126 127 167 235 236 237 356";
  auto delta1 = complex_on(kHachimoriLabels, d1);
  auto delta2 = complex_on(kHachimoriLabels, d2);
  Hachimori h{complex_on(kHachimoriLabels, d1 + " " + d2),
              delta1,
              delta2,
              complex_on(kHachimoriLabels, "15 56 67 73"),
              order_on(delta1, d1),
              order_on(delta2, d2),
              partition_on(delta2, "-,237 1,125 5,356 6,167 17,127 25,235 26,126 36,236"),
              partition_on(delta2, "2,237 12,125 35,356 16,167 17,127 25,235 26,126 36,236")};
  return h;
}

std::vector<std::string> names() {
  return {"dunce-hat", "cylinder", "hachimori", "hachimori-1", "hachimori-2", "gorenstein-<m>"};
}

Fixture load(const std::string& name) {
  if (name == "dunce-hat") {
    auto c = dunce_hat();
    return Fixture{name, c, stanley_reisner_ideal(c), dunce_hat_partition(), std::nullopt};
  }
  if (name == "cylinder") {
    auto c = cylinder();
    return Fixture{name, c, stanley_reisner_ideal(c), cylinder_partition(), std::nullopt};
  }
  if (name == "hachimori" || name == "hachimori-1" || name == "hachimori-2") {
    auto h = hachimori();
    if (name == "hachimori-1")
      return Fixture{name, h.delta1, stanley_reisner_ideal(h.delta1), shelling_to_partition(h.delta1, h.shelling1),
                     h.shelling1};
    if (name == "hachimori-2")
      return Fixture{name, h.delta2, stanley_reisner_ideal(h.delta2), h.adjusted2, h.shelling2};
    return Fixture{name, h.delta, stanley_reisner_ideal(h.delta), std::nullopt, std::nullopt};
  }
  const std::string prefix = "gorenstein-";
  if (name.rfind(prefix, 0) == 0) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(name.substr(prefix.size()), &used);
      if (used != name.size() - prefix.size()) m = 0;
    } catch (const std::exception&) {
      m = 0;
    }
    if (m < 1 || m > 20) throw Error("unknown fixture '" + name + "'");
    auto t = gorenstein::build_template(m);
    auto order = gorenstein::lex_shelling(m);
    return Fixture{name, t.complex, t.ideal, shelling_to_partition(t.complex, order), order};
  }
  throw Error("unknown fixture '" + name + "'");
}

}  // namespace stanley::fixtures
