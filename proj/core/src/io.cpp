#include "stanley/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "stanley/error.hpp"

namespace stanley::io {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Non-blank lines with comments removed.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, t});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::map<std::string, int> label_index(const SimplicialComplex& c) {
  std::map<std::string, int> m;
  for (int v = 0; v < c.n_vertices(); ++v) m[c.label(v)] = v;
  return m;
}

bool all_single_char(const std::vector<std::string>& labels) {
  return std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; });
}

std::string json_label(const json& j, std::size_t line = 0) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("vertex labels must be strings or integers", line);
}

int var_id(const Ring& ring, const std::string& name) {
  int v = ring.find(name);
  if (v < 0) throw ParseError("unknown variable '" + name + "'");
  return v;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
}

// --- complexes ----------------------------------------------------------------

SimplicialComplex parse_complex_text(const std::string& text) {
  auto lines = content_lines(text);
  std::vector<std::vector<std::string>> rows;
  bool compact = !lines.empty();
  bool long_token = false;
  for (const auto& l : lines) {
    rows.push_back(tokens(l.text));
    if (rows.back().size() != 1) compact = false;
    for (const auto& t : rows.back())
      if (t.size() > 1) long_token = true;
  }
  compact = compact && long_token;
  if (compact)
    for (auto& row : rows) {
      if (row.front() == "-") continue;
      std::vector<std::string> chars;
      for (char ch : row.front()) chars.emplace_back(1, ch);
      row = chars;
    }

  std::set<std::string> seen;
  for (const auto& row : rows)
    for (const auto& t : row)
      if (t != "-") seen.insert(t);
  std::vector<std::string> labels(seen.begin(), seen.end());
  std::sort(labels.begin(), labels.end(), natural_less);
  if (labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

  std::vector<Face> facets;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Face f;
    for (const auto& t : rows[r]) {
      if (t == "-") {
        if (rows[r].size() != 1) throw ParseError("'-' must stand alone", lines[r].number);
        continue;
      }
      f = f.with(index.at(t));
    }
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(facets, static_cast<int>(labels.size()), labels);
}

static SimplicialComplex parse_complex_json_impl(const json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw ParseError("complex JSON needs an object with a \"facets\" array");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(json_label(l));
    if (j.contains("n") && j["n"].get<int>() != static_cast<int>(labels.size()))
      throw ParseError("\"n\" does not match the number of labels");
  } else if (j.contains("n")) {
    labels = default_labels(j["n"].get<int>());
  } else {
    std::set<std::string> seen;
    for (const auto& f : j["facets"])
      for (const auto& l : f) seen.insert(json_label(l));
    labels.assign(seen.begin(), seen.end());
    std::sort(labels.begin(), labels.end(), natural_less);
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) throw ParseError("duplicate vertex labels");
  if (labels.size() > static_cast<std::size_t>(kMaxVertices))
    throw ParseError("more than " + std::to_string(kMaxVertices) + " vertices");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  std::vector<Face> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw ParseError("each facet must be an array of labels");
    Face face;
    for (const auto& l : f) {
      auto it = index.find(json_label(l));
      if (it == index.end()) throw ParseError("unknown vertex label '" + json_label(l) + "'");
      face = face.with(it->second);
    }
    facets.push_back(face);
  }
  return SimplicialComplex::from_facets(facets, static_cast<int>(labels.size()), labels);
}

SimplicialComplex parse_complex_json(const json& j) {
  try {
    return parse_complex_json_impl(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON value: ") + e.what());
  }
}

SimplicialComplex parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_complex_json(parse_json(text));
  return parse_complex_text(text);
}

SimplicialComplex read_complex(const std::string& path) { return parse_complex(read_file(path)); }

json face_json(Face f, const SimplicialComplex& c) {
  json a = json::array();
  f.for_each([&](int v) { a.push_back(c.label(v)); });
  return a;
}

json complex_to_json(const SimplicialComplex& c) {
  json facets = json::array();
  for (Face f : c.facets()) facets.push_back(face_json(f, c));
  return json{{"n", c.n_vertices()}, {"labels", c.labels()}, {"facets", facets}};
}

std::string face_string(Face f, const SimplicialComplex& c) {
  if (f.empty()) return "-";
  bool compact = all_single_char(c.labels());
  std::string out;
  f.for_each([&](int v) {
    if (!compact && !out.empty()) out += ' ';
    out += c.label(v);
  });
  return out;
}

std::string complex_to_text(const SimplicialComplex& c) {
  std::string out;
  for (Face f : c.facets()) out += face_string(f, c) + "\n";
  return out;
}

Face parse_face(const std::string& text, const SimplicialComplex& c, std::size_t line) {
  std::string t = trim(text);
  if (t.empty() || t == "-") return Face{};
  auto index = label_index(c);
  Face f;
  for (const auto& tok : tokens(t)) {
    auto it = index.find(tok);
    if (it != index.end()) {
      f = f.with(it->second);
      continue;
    }
    for (char ch : tok) {
      auto ct = index.find(std::string(1, ch));
      if (ct == index.end()) throw ParseError("unknown vertex label '" + tok + "'", line);
      f = f.with(ct->second);
    }
  }
  return f;
}

// --- ideals -------------------------------------------------------------------

Monomial parse_monomial(const std::string& text, const Ring& ring, std::size_t line) {
  std::string t = text;
  std::replace(t.begin(), t.end(), '*', ' ');
  auto toks = tokens(t);
  if (toks.empty()) throw ParseError("empty monomial", line);
  if (toks.size() == 1 && toks.front() == "1") return Monomial{};
  std::vector<Monomial::Entry> entries;
  for (const auto& tok : toks) {
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    int exp = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
          e.size() > 6)
        throw ParseError("bad exponent in '" + tok + "'", line);
      exp = std::stoi(e);
      if (exp < 1) throw ParseError("exponent must be positive in '" + tok + "'", line);
    }
    int v = ring.find(name);
    if (v < 0) throw ParseError("unknown variable '" + name + "'", line);
    entries.emplace_back(v, exp);
  }
  return Monomial(entries);
}

std::vector<Monomial> parse_monomial_list(const std::string& text, const Ring& ring) {
  std::vector<Monomial> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_monomial(item, ring));
  return out;
}

MonomialIdeal parse_ideal_text(const std::string& text) {
  auto lines = content_lines(text);
  std::vector<std::string> names;
  std::size_t first = 0;
  if (!lines.empty() && lines.front().text.rfind("vars:", 0) == 0) {
    names = tokens(lines.front().text.substr(5));
    first = 1;
  } else {
    std::set<std::string> seen;
    for (const auto& l : lines) {
      std::string t = l.text;
      std::replace(t.begin(), t.end(), '*', ' ');
      for (const auto& tok : tokens(t)) {
        std::string name = tok.substr(0, tok.find('^'));
        if (name != "1") seen.insert(name);
      }
    }
    names.assign(seen.begin(), seen.end());
    std::sort(names.begin(), names.end(), natural_less);
  }
  RingPtr ring;
  try {
    ring = Ring::make(names);
  } catch (const Error& e) {
    throw ParseError(e.what(), lines.empty() ? 0 : lines.front().number);
  }
  std::vector<Monomial> gens;
  for (std::size_t i = first; i < lines.size(); ++i)
    gens.push_back(parse_monomial(lines[i].text, *ring, lines[i].number));
  return MonomialIdeal(ring, gens);
}

Monomial parse_monomial_json(const json& j, const Ring& ring) {
  if (!j.is_array()) throw ParseError("a monomial is an array of [var, exp] pairs");
  std::vector<Monomial::Entry> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer() ||
        e[1].get<int>() < 1)
      throw ParseError("a monomial entry is [\"var\", positive exponent]");
    entries.emplace_back(var_id(ring, e[0].get<std::string>()), e[1].get<int>());
  }
  return Monomial(entries);
}

static MonomialIdeal parse_ideal_json_impl(const json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    throw ParseError("ideal JSON needs \"vars\" and \"gens\"");
  RingPtr ring;
  try {
    ring = Ring::make(j["vars"].get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad \"vars\": ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  std::vector<Monomial> gens;
  for (const auto& g : j["gens"]) gens.push_back(parse_monomial_json(g, *ring));
  return MonomialIdeal(ring, gens);
}

MonomialIdeal parse_ideal_json(const json& j) {
  try {
    return parse_ideal_json_impl(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON value: ") + e.what());
  }
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_ideal_json(parse_json(text));
  return parse_ideal_text(text);
}

MonomialIdeal read_ideal(const std::string& path) { return parse_ideal(read_file(path)); }

json monomial_json(const Monomial& u, const Ring& ring) {
  json a = json::array();
  for (auto [v, e] : u.entries()) a.push_back(json::array({ring.name(v), e}));
  return a;
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.gens()) gens.push_back(monomial_json(g, ideal.ring()));
  return json{{"vars", ideal.ring().names()}, {"gens", gens}};
}

std::string ideal_to_text(const MonomialIdeal& ideal) {
  std::string out = "vars:";
  for (const auto& n : ideal.ring().names()) out += " " + n;
  out += "\n";
  for (const auto& g : ideal.gens()) out += to_string(g, ideal.ring()) + "\n";
  return out;
}

json prime_json(const MonomialPrime& p, const Ring& ring) {
  json a = json::array();
  p.vars.for_each([&](int v) { a.push_back(ring.name(v)); });
  return a;
}

namespace {

VarSet parse_var_list(const json& j, const Ring& ring) {
  if (!j.is_array()) throw ParseError("expected an array of variable names");
  VarSet s;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    s = s.with(var_id(ring, v.get<std::string>()));
  }
  return s;
}

}  // namespace

// --- partitions etc. ----------------------------------------------------------

Partition parse_partition_text(const std::string& text, const SimplicialComplex& c) {
  Partition p{c, {}};
  for (const auto& l : content_lines(text)) {
    auto colon_pos = l.text.find(':');
    if (colon_pos == std::string::npos) throw ParseError("expected 'F : G'", l.number);
    p.intervals.push_back(Interval{parse_face(l.text.substr(0, colon_pos), c, l.number),
                                   parse_face(l.text.substr(colon_pos + 1), c, l.number)});
  }
  return p;
}

std::string partition_to_text(const Partition& p) {
  std::string out;
  for (const auto& iv : p.intervals)
    out += face_string(iv.lower, p.ambient) + " : " + face_string(iv.upper, p.ambient) + "\n";
  return out;
}

json partition_to_json(const Partition& p) {
  json a = json::array();
  for (const auto& iv : p.intervals)
    a.push_back(json{{"F", face_json(iv.lower, p.ambient)}, {"G", face_json(iv.upper, p.ambient)}});
  return a;
}

static StanleyDecomposition parse_decomposition_json_impl(const json& j, const MonomialIdeal& ideal) {
  if (!j.is_array()) throw ParseError("decomposition JSON is an array of {\"u\", \"Z\"}");
  StanleyDecomposition d{ideal, {}};
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("u") || !s.contains("Z"))
      throw ParseError("each Stanley space needs \"u\" and \"Z\"");
    d.spaces.push_back(StanleySpace{parse_monomial_json(s["u"], ideal.ring()),
                                    parse_var_list(s["Z"], ideal.ring())});
  }
  return d;
}

StanleyDecomposition parse_decomposition_json(const json& j, const MonomialIdeal& ideal) {
  try {
    return parse_decomposition_json_impl(j, ideal);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON value: ") + e.what());
  }
}

json decomposition_to_json(const StanleyDecomposition& d) {
  json a = json::array();
  for (const auto& s : d.spaces)
    a.push_back(json{{"u", monomial_json(s.u, d.ideal.ring())},
                     {"Z", prime_json(MonomialPrime{s.vars}, d.ideal.ring())}});
  return a;
}

ShellingOrder parse_shelling_text(const std::string& text, const SimplicialComplex& c) {
  ShellingOrder s;
  for (const auto& l : content_lines(text)) s.facets.push_back(parse_face(l.text, c, l.number));
  return s;
}

std::string shelling_to_text(const ShellingOrder& s, const SimplicialComplex& c) {
  std::string out;
  for (Face f : s.facets) out += face_string(f, c) + "\n";
  return out;
}

json shelling_to_json(const ShellingOrder& s, const SimplicialComplex& c) {
  json a = json::array();
  for (Face f : s.facets) a.push_back(face_json(f, c));
  return a;
}

static PrimeFiltration parse_filtration_json_impl(const json& j, const MonomialIdeal& ideal) {
  if (!j.is_array()) throw ParseError("filtration JSON is an array of {\"w\", \"P\"}");
  PrimeFiltration f{ideal, {}};
  for (const auto& s : j) {
    if (!s.is_object() || !s.contains("w") || !s.contains("P"))
      throw ParseError("each filtration step needs \"w\" and \"P\"");
    f.steps.push_back(FiltrationStep{parse_monomial_json(s["w"], ideal.ring()),
                                     MonomialPrime{parse_var_list(s["P"], ideal.ring())}});
  }
  return f;
}

PrimeFiltration parse_filtration_json(const json& j, const MonomialIdeal& ideal) {
  try {
    return parse_filtration_json_impl(j, ideal);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON value: ") + e.what());
  }
}

json filtration_to_json(const PrimeFiltration& f) {
  json a = json::array();
  for (const auto& s : f.steps)
    a.push_back(json{{"w", monomial_json(s.w, f.base.ring())}, {"P", prime_json(s.p, f.base.ring())}});
  return a;
}

}  // namespace stanley::io
