#include "stanley_cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "stanley/error.hpp"
#include "stanley/fixtures.hpp"
#include "stanley/gorenstein.hpp"
#include "stanley/hilbert.hpp"
#include "stanley/io.hpp"
#include "stanley/random.hpp"

namespace stanley::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Loaded {
  std::string source;
  std::optional<SimplicialComplex> complex;
  MonomialIdeal ideal;
  std::optional<Partition> partition;
  std::optional<ShellingOrder> shelling;
};

Loaded load(const Input& in) {
  int given = !in.fixture.empty() + !in.complex_path.empty() + !in.ideal_path.empty();
  if (given != 1) throw UsageError("give exactly one of --fixture, --complex, --ideal");
  if (!in.fixture.empty()) {
    fixtures::Fixture f = [&] {
      try {
        return fixtures::load(in.fixture);
      } catch (const CapExceeded&) {
        throw;
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }();
    return Loaded{"fixture:" + in.fixture, f.complex, f.ideal, f.partition, f.shelling};
  }
  if (!in.complex_path.empty()) {
    SimplicialComplex c = io::read_complex(in.complex_path);
    return Loaded{in.complex_path, c, stanley_reisner_ideal(c), std::nullopt, std::nullopt};
  }
  MonomialIdeal ideal = io::read_ideal(in.ideal_path);
  std::optional<SimplicialComplex> c;
  if (ideal.is_squarefree()) c = stanley_reisner_complex(ideal);
  return Loaded{in.ideal_path, c, ideal, std::nullopt, std::nullopt};
}

json vec_json(const std::vector<std::int64_t>& v) { return json(v); }

json faces_json(const std::vector<Face>& faces, const SimplicialComplex& c) {
  json a = json::array();
  for (Face f : faces) a.push_back(io::face_string(f, c));
  return a;
}

json partition_strings(const Partition& p) {
  json a = json::array();
  for (const auto& iv : p.intervals)
    a.push_back(io::face_string(iv.lower, p.ambient) + " : " + io::face_string(iv.upper, p.ambient));
  return a;
}

// Runs one analysis step; a cap overrun becomes a notice instead of an abort.
template <typename Fn>
json capped(json& notices, const std::string& what, Fn fn) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    notices.push_back(what + ": " + e.what());
    return json{{"cap_exceeded", e.what()}};
  }
}

json analyze_complex(const SimplicialComplex& c, const Options& opts, json& notices) {
  if (c.is_void()) throw UsageError("the void complex (unit ideal) has nothing to analyze");
  json r;
  r["n"] = c.n_vertices();
  r["labels"] = c.labels();
  r["facets"] = faces_json(c.facets(), c);
  r["dim_complex"] = c.dim_complex();
  r["dim_ring"] = c.dim_ring();
  auto f = f_vector(c);
  r["f"] = vec_json(f);
  r["h"] = vec_json(h_from_f(f));
  r["pure"] = is_pure(c);
  r["field"] = opts.field.to_string();
  r["cohen_macaulay"] = is_cohen_macaulay(c, opts.field, opts.threads);
  BuchsbaumVerdict b = is_buchsbaum(c, opts.field);
  r["buchsbaum"] = b.buchsbaum;
  int depth = depth_ring(c, opts.field, opts.threads);
  r["depth"] = depth;
  r["multiplicity"] = multiplicity(c);

  r["shellable"] = capped(notices, "shellable", [&] {
    ShellabilityResult s = is_shellable(c);
    json j{{"value", s.shellable}, {"states", s.states}};
    if (s.order) j["order"] = faces_json(s.order->facets, c);
    return j;
  });
  r["partitionable"] = capped(notices, "partitionable", [&] {
    NicePartitionResult nice = find_nice_partition(c);
    json j{{"value", nice.partition.has_value()}, {"nodes", nice.stats.nodes}};
    if (nice.partition) j["witness"] = partition_strings(*nice.partition);
    return j;
  });

  int floor = opts.target.value_or(0);
  auto sd = max_partition_depth(c, floor);
  json s;
  if (opts.target) s["target"] = *opts.target;
  if (sd) {
    s["value"] = sd->sdepth;
    s["upper_bound"] = sd->upper_bound;
    s["witness"] = partition_strings(sd->witness);
    s["nodes"] = sd->stats.nodes;
    r["stanley_ideal"] = sd->sdepth >= depth;
  } else {
    s["value"] = nullptr;
    s["below_target"] = true;
    r["stanley_ideal"] = floor <= depth ? json(false) : json(nullptr);
  }
  r["sdepth"] = s;
  return r;
}

json analyze_ideal(const MonomialIdeal& ideal, const Options& opts, json& notices) {
  if (ideal.is_unit()) throw UsageError("the unit ideal has nothing to analyze");
  json r;
  r["vars"] = ideal.ring().names();
  r["gens"] = io::ideal_to_json(ideal)["gens"];
  r["squarefree"] = false;
  r["field"] = opts.field.to_string();
  r["dim"] = dim_quotient(ideal);
  int depth = depth_ideal(ideal, opts.field, opts.threads);
  r["depth"] = depth;
  r["multiplicity"] = multiplicity(ideal);
  json primes = json::array();
  for (const auto& p : minimal_primes(ideal)) primes.push_back(to_string(p, ideal.ring()));
  r["minimal_primes"] = primes;
  r["pretty_clean"] = capped(notices, "pretty_clean", [&] {
    PolarizationVerdict v = is_pretty_clean_via_polarization(ideal);
    return json{{"value", v.pretty_clean}, {"evidence", v.evidence}};
  });
  r["stanley_ideal"] = capped(notices, "stanley_ideal", [&] {
    FiltrationSearchResult f = find_pretty_clean_filtration(ideal, opts.box_cap);
    if (!f.filtration) return json{{"value", nullptr}, {"reason", "no pretty clean filtration"}};
    StanleyDecomposition d = filtration_to_decomposition(*f.filtration);
    bool valid = validate_decomposition(d).valid;
    return json{{"value", valid && d.sdepth() >= depth},
                {"certificate_sdepth", d.sdepth()},
                {"decomposition", io::decomposition_to_json(d)}};
  });
  return r;
}

Partition parse_partition_artifact(const std::string& text, const SimplicialComplex& c) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '[') return io::parse_partition_text(text, c);
  json j = io::parse_json(text);
  Partition p{c, {}};
  try {
    for (const auto& iv : j) {
      Face lower, upper;
      for (const auto& l : iv.at("F")) lower = lower | io::parse_face(l.get<std::string>(), c);
      for (const auto& l : iv.at("G")) upper = upper | io::parse_face(l.get<std::string>(), c);
      p.intervals.push_back(Interval{lower, upper});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed partition JSON: ") + e.what());
  }
  return p;
}

const SimplicialComplex& need_complex(const Loaded& l) {
  if (!l.complex) throw UsageError("this command needs a squarefree ideal or a complex");
  return *l.complex;
}

std::string artifact_or_empty(const std::string& path) {
  return path.empty() ? std::string() : io::read_file(path);
}

}  // namespace

Outcome analyze(const Input& in, const Options& opts) {
  Loaded l = load(in);
  json notices = json::array();
  json r = l.complex ? analyze_complex(*l.complex, opts, notices) : analyze_ideal(l.ideal, opts, notices);
  r["source"] = l.source;
  r["notices"] = notices;
  return Outcome{notices.empty() ? kOk : kCapExceeded, r};
}

Outcome verify(const std::string& kind, const Input& in, const std::string& artifact_path,
               const Options& opts) {
  (void)opts;
  Loaded l = load(in);
  std::string text = artifact_or_empty(artifact_path);
  json r{{"kind", kind}, {"source", l.source}};
  auto missing = [&] { return UsageError("no " + kind + " given and none recorded for the input"); };
  bool valid = false;
  try {
    if (kind == "partition") {
      const auto& c = need_complex(l);
      Partition p = text.empty() ? (l.partition ? *l.partition : throw missing()) : parse_partition_artifact(text, c);
      PartitionCertificate cert = validate_partition(p);
      valid = cert.valid;
      r["message"] = cert.message;
      r["intervals"] = p.intervals.size();
      if (cert.face) {
        r["face"] = io::face_string(*cert.face, c);
        r["cover_count"] = cert.cover_count;
      }
      if (valid) {
        r["nice"] = is_nice(p);
        r["r"] = vec_json(r_vector(p));
      }
    } else if (kind == "decomposition") {
      StanleyDecomposition d =
          !text.empty() ? io::parse_decomposition_json(io::parse_json(text), l.ideal)
          : l.partition ? partition_to_decomposition(*l.partition)
                        : throw missing();
      DecompositionCertificate cert = validate_decomposition(d);
      valid = cert.valid;
      r["message"] = cert.message;
      r["spaces"] = d.spaces.size();
      if (cert.witness) {
        r["witness"] = to_string(*cert.witness, d.ideal.ring());
        r["expected"] = cert.expected;
        r["actual"] = cert.actual;
      } else {
        r["sdepth"] = d.sdepth();
        r["top_spaces"] = count_top_spaces(d);
      }
    } else if (kind == "shelling") {
      const auto& c = need_complex(l);
      ShellingOrder s = text.empty() ? (l.shelling ? *l.shelling : throw missing()) : io::parse_shelling_text(text, c);
      ShellingCertificate cert = verify_shelling(c, s);
      valid = cert.valid;
      r["message"] = cert.message;
      if (!valid) r["pair"] = {io::face_string(s.facets[cert.i], c), io::face_string(s.facets[cert.j], c)};
    } else if (kind == "filtration") {
      PrimeFiltration f = !text.empty()
                              ? io::parse_filtration_json(io::parse_json(text), l.ideal)
                              : (l.shelling ? shelling_to_clean_filtration(need_complex(l), *l.shelling,
                                                                           l.ideal.ring_ptr())
                                            : throw missing());
      FiltrationCertificate cert = verify_filtration(f);
      valid = cert.valid;
      r["message"] = cert.message;
      r["steps"] = f.steps.size();
      if (!valid) {
        r["failed_step"] = cert.failed_step;
      } else {
        FiltrationClass cls = classify(f);
        r["clean"] = cls.clean;
        r["pretty_clean"] = cls.pretty_clean;
      }
    } else {
      throw UsageError("unknown kind '" + kind + "' (partition, decomposition, shelling, filtration)");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& e) {
    // structurally broken artifact, e.g. an interval whose top is not a face
    valid = false;
    r["message"] = e.what();
  }
  r["valid"] = valid;
  return Outcome{valid ? kOk : kViolation, r};
}

Outcome gorenstein(int m, const std::string& subst, bool verify_witnesses, const Options& opts) {
  if (m < 1) throw UsageError("--m must be at least 1");
  if (2 * m + 1 > kMaxVertices) throw UsageError("--m too large");
  auto t = gorenstein::build_template(m);
  auto order = gorenstein::lex_shelling(m);
  const auto& c = t.complex;
  json r;
  r["m"] = m;
  r["ideal"] = io::ideal_to_json(t.ideal);
  json triples = json::array();
  for (const auto& tr : gorenstein::facet_triples(m)) triples.push_back(gorenstein::to_string(tr));
  r["triples"] = triples;
  r["facets"] = faces_json(c.facets(), c);
  r["order"] = faces_json(order.facets, c);
  ShellingCertificate sc = verify_shelling(c, order);
  r["shelling_verified"] = sc.valid;
  bool cm = is_cohen_macaulay(c, opts.field, opts.threads);
  r["cohen_macaulay"] = cm;
  r["codim"] = t.ideal.n_vars() - c.dim_ring();
  auto h = h_vector(c);
  r["h"] = vec_json(h);
  bool symmetric = std::equal(h.begin(), h.end(), h.rbegin());
  r["h_symmetric"] = symmetric;
  bool ok = sc.valid && cm && symmetric;

  if (verify_witnesses) {
    auto ts = gorenstein::facet_triples(m);
    std::map<std::string, int> branches;
    int pairs = 0;
    bool all = true;
    for (std::size_t i = 0; i < ts.size(); ++i)
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        ++pairs;
        gorenstein::Witness w = gorenstein::shelling_witness(ts[i], ts[j], m);
        ++branches[w.branch];
        Face g = gorenstein::facet_of(ts[j], m), f = gorenstein::facet_of(ts[i], m);
        Face hf = gorenstein::facet_of(w.h, m);
        bool good = gorenstein::is_valid_triple(w.h, m) && gorenstein::lex_less(w.h, ts[j]) &&
                    (g - hf) == VertexSet{w.c - 1} && (g - f).contains(w.c - 1);
        all = all && good;
      }
    r["witnesses"] = json{{"pairs", pairs}, {"branches", branches}, {"all_valid", all}};
    ok = ok && all;
  }

  if (!subst.empty()) {
    std::string list = subst;
    if (std::filesystem::is_regular_file(subst)) {
      list = io::read_file(subst);
      std::replace(list.begin(), list.end(), '\n', ',');
      while (!list.empty() && (list.back() == ',' || list.back() == ' ')) list.pop_back();
    }
    std::vector<std::string> names;
    {
      std::string t2 = list;
      for (char& ch : t2)
        if (ch == ',' || ch == '*') ch = ' ';
      std::istringstream in(t2);
      std::string tok;
      std::vector<std::string> seen;
      while (in >> tok) {
        std::string name = tok.substr(0, tok.find('^'));
        if (name != "1" && std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
      }
      std::sort(seen.begin(), seen.end(), io::natural_less);
      names = seen;
    }
    RingPtr target = Ring::make(names);
    auto u = io::parse_monomial_list(list, *target);
    MonomialIdeal ideal = gorenstein::instantiate(m, u, target);
    PrimeFiltration base = shelling_to_clean_filtration(c, order, t.ideal.ring_ptr());
    PrimeFiltration f = substitute_filtration(base, u, target);
    FiltrationCertificate fc = verify_filtration(f);
    json s;
    s["ideal"] = io::ideal_to_json(ideal);
    s["filtration_steps"] = f.steps.size();
    s["filtration_valid"] = fc.valid;
    bool certified = false;
    if (fc.valid) {
      FiltrationClass cls = classify(f);
      s["clean"] = cls.clean;
      s["pretty_clean"] = cls.pretty_clean;
      StanleyDecomposition d = filtration_to_decomposition(f);
      bool dvalid = validate_decomposition(d).valid;
      int depth = depth_ideal(ideal, opts.field, opts.threads);
      s["decomposition_valid"] = dvalid;
      s["decomposition_sdepth"] = d.sdepth();
      s["depth"] = depth;
      s["multiplicity"] = multiplicity(ideal);
      s["top_spaces"] = count_top_spaces(d);
      s["filtration"] = io::filtration_to_json(f);
      certified = cls.pretty_clean && dvalid && d.sdepth() >= depth;
    }
    if (auto rec = gorenstein::recognize(ideal)) s["recognized_m"] = rec->m;
    s["stanley_certificate"] = certified;
    r["substitution"] = s;
    ok = ok && certified;
  }
  return Outcome{ok ? kOk : kViolation, r};
}

Outcome random_instance(std::uint64_t seed, int n, const std::string& model) {
  MonomialIdeal ideal = [&] {
    try {
      return random::generate(model, seed, n);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  json r{{"model", model}, {"seed", seed}, {"n", n}, {"ideal", io::ideal_to_json(ideal)},
         {"text", io::ideal_to_text(ideal)}};
  return Outcome{kOk, r};
}

Outcome clean(const Input& in, bool pretty, const Options& opts) {
  Loaded l = load(in);
  if (l.ideal.is_unit()) throw UsageError("the unit ideal has no filtration to search");
  FiltrationSearchResult res = pretty ? find_pretty_clean_filtration(l.ideal, opts.box_cap)
                                      : find_clean_filtration(l.ideal, opts.box_cap);
  json r{{"source", l.source},
         {"kind", pretty ? "pretty-clean" : "clean"},
         {"found", res.filtration.has_value()},
         {"nodes", res.nodes},
         {"memo_hits", res.memo_hits},
         {"box_size", res.box_size}};
  if (res.filtration) {
    r["filtration"] = io::filtration_to_json(*res.filtration);
    FiltrationClass cls = classify(*res.filtration);
    r["clean"] = cls.clean;
    r["pretty_clean"] = cls.pretty_clean;
  } else {
    r["filtration"] = "none";
  }
  return Outcome{kOk, r};
}

Outcome guarded(const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    return Outcome{kCapExceeded, json{{"error", e.what()}, {"cap_exceeded", true}}};
  } catch (const ParseError& e) {
    return Outcome{kUsage, json{{"error", e.what()}}};
  } catch (const UsageError& e) {
    return Outcome{kUsage, json{{"error", e.what()}}};
  } catch (const Error& e) {
    return Outcome{kUsage, json{{"error", e.what()}}};
  }
}

std::string render_text(const json& report) {
  std::string out;
  if (!report.is_object()) return report.dump() + "\n";
  for (const auto& [key, value] : report.items()) {
    if (value.is_object()) {
      out += key + ":\n";
      for (const auto& [k2, v2] : value.items())
        out += "  " + k2 + ": " + (v2.is_string() ? v2.get<std::string>() : v2.dump()) + "\n";
    } else {
      out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
  }
  return out;
}

}  // namespace stanley::cli
