#include "equichain/json_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace equichain {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("key \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) {
    throw ParseError(std::string("key \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

const json& require_array(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_array()) {
    throw ParseError(std::string("key \"") + key + "\" must be an array");
  }
  return v;
}

}  // namespace

json meta_block() {
  json m;
  m["tool"] = "equichain";
  m["version"] = "0.1.0";
  return m;
}

json make_document(const std::string& type, json payload) {
  json doc;
  doc["meta"] = meta_block();
  doc["type"] = type;
  for (auto& [key, value] : payload.items()) doc[key] = std::move(value);
  return doc;
}

json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw ParseError("not a decimal integer: \"" + s + "\"");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw ParseError("not a decimal integer: \"" + s + "\"");
      }
    }
    return Int(s);
  }
  throw ParseError("integers must be JSON numbers or decimal strings");
}

json vertex_to_json(const Vertex& v) {
  json j;
  j["color"] = v.color;
  j["label"] = v.label;
  return j;
}

Vertex vertex_from_json(const json& j) {
  Vertex v;
  v.color = require_int(j, "color");
  const json& label = require(j, "label");
  if (label.is_number_integer()) {
    v.label = label.get<int>();
  } else if (label.is_string()) {
    // Tokens are accepted when they are decimal integers; nothing else has an
    // in-memory representation here.
    const Int parsed = int_from_json(label);
    if (parsed < std::numeric_limits<int>::min() || parsed > std::numeric_limits<int>::max()) {
      throw ParseError("label out of range: \"" + label.get<std::string>() + "\"");
    }
    v.label = parsed.convert_to<int>();
  } else {
    throw ParseError("vertex label must be an integer or a decimal string");
  }
  return v;
}

json simplex_to_json(const Simplex& s) {
  json arr = json::array();
  for (const Vertex& v : s.vertices()) arr.push_back(vertex_to_json(v));
  return arr;
}

std::pair<Simplex, int> simplex_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("a simplex must be an array of vertices");
  std::vector<Vertex> vs;
  for (const json& vj : j) vs.push_back(vertex_from_json(vj));
  // Sign of the permutation sorting the listed order into canonical order.
  int sign = 1;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (vs[a].color == vs[b].color) {
        throw ParseError("repeated color " + std::to_string(vs[a].color) +
                         " in a simplex");
      }
      if (vs[a].color > vs[b].color) sign = -sign;
    }
  }
  return {Simplex(std::move(vs)), sign};
}

json complex_to_json(const Complex& k) {
  json j;
  j["n"] = k.n();
  json facets = json::array();
  for (const Simplex& f : k.facets()) facets.push_back(simplex_to_json(f));
  j["facets"] = std::move(facets);
  return j;
}

Complex complex_from_json(const json& j) {
  const int n = require_int(j, "n");
  std::vector<Simplex> facets;
  for (const json& fj : require_array(j, "facets")) {
    facets.push_back(simplex_from_json(fj).first);
  }
  try {
    return Complex::from_facets(n, facets);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json chain_to_json(const Chain& c) {
  json j;
  j["q"] = c.q();
  json terms = json::array();
  for (const auto& [s, coeff] : c.terms()) {
    json t;
    t["simplex"] = simplex_to_json(s);
    t["coeff"] = int_to_json(coeff);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Chain chain_from_json(const json& j) {
  const int q = require_int(j, "q");
  Chain c(q);
  for (const json& tj : require_array(j, "terms")) {
    auto [s, sign] = simplex_from_json(require(tj, "simplex"));
    if (s.dim() != q) {
      throw ParseError("term of dimension " + std::to_string(s.dim()) +
                       " in a chain of degree " + std::to_string(q));
    }
    c.add(s, Int(sign) * int_from_json(require(tj, "coeff")));
  }
  return c;
}

json permutation_to_json(const GroupElement& g) {
  json arr = json::array();
  for (int i = 0; i <= g.degree(); ++i) arr.push_back(g(i));
  return arr;
}

GroupElement permutation_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw ParseError("a permutation must be a non-empty array of images");
  }
  std::vector<int> images;
  for (const json& v : j) {
    if (!v.is_number_integer()) throw ParseError("permutation images must be integers");
    images.push_back(v.get<int>());
  }
  try {
    return GroupElement(images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json map_to_json(const ChainMapTable& m) {
  json j;
  j["n"] = m.n();
  j["source"] = m.source();
  j["target"] = m.target();
  json entries = json::array();
  for (int q = 0; q <= m.max_dim(); ++q) {
    for (const auto& [s, image] : m.entries(q)) {
      json e;
      e["q"] = q;
      e["simplex"] = simplex_to_json(s);
      e["image"] = chain_to_json(image);
      entries.push_back(std::move(e));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

ChainMapTable map_from_json(const json& j) {
  ChainMapTable m(require_int(j, "n"), require_string(j, "source"),
                  require_string(j, "target"));
  for (const json& ej : require_array(j, "entries")) {
    const int q = require_int(ej, "q");
    auto [s, sign] = simplex_from_json(require(ej, "simplex"));
    if (s.dim() != q) {
      throw ParseError("entry simplex dimension disagrees with its q");
    }
    Chain image = chain_from_json(require(ej, "image"));
    if (sign < 0) image = -image;
    try {
      m.set_image(s, std::move(image));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return m;
}

json verifications_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const VerificationReport& r : reports) {
    json v;
    v["property"] = property_name(r.property);
    v["pass"] = r.pass;
    v["detail"] = r.detail;
    arr.push_back(std::move(v));
  }
  return arr;
}

std::vector<VerificationReport> verifications_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("verifications must be an array");
  std::vector<VerificationReport> out;
  for (const json& vj : j) {
    VerificationReport r;
    const std::string name = require_string(vj, "property");
    bool known = false;
    for (MapProperty p : {MapProperty::chain_map, MapProperty::color_preserving,
                          MapProperty::equivariant, MapProperty::augmented}) {
      if (property_name(p) == name) {
        r.property = p;
        known = true;
      }
    }
    if (!known) throw ParseError("unknown verification property \"" + name + "\"");
    const json& pass = require(vj, "pass");
    if (!pass.is_boolean()) throw ParseError("verification pass must be boolean");
    r.pass = pass.get<bool>();
    r.detail = require_string(vj, "detail");
    out.push_back(std::move(r));
  }
  return out;
}

json certificate_to_json(const Certificate& c) {
  json j;
  j["kind"] = c.kind == Certificate::Kind::existence ? "existence" : "nonexistence";
  j["n"] = c.n;
  j["g"] = int_to_json(c.g);
  json kappa = json::array();
  for (const Int& x : c.class_equation_coeffs) kappa.push_back(int_to_json(x));
  j["class_equation"] = std::move(kappa);
  if (c.diophantine) {
    json d = json::array();
    for (const Int& x : *c.diophantine) d.push_back(int_to_json(x));
    j["diophantine"] = std::move(d);
  } else {
    j["diophantine"] = nullptr;
  }
  j["witness_map"] = c.witness ? map_to_json(*c.witness) : json(nullptr);
  j["verifications"] = verifications_to_json(c.verifications);
  if (c.infeasibility) {
    json w;
    json combo = json::array();
    for (const Int& x : c.infeasibility->combination) combo.push_back(int_to_json(x));
    w["combination"] = std::move(combo);
    w["modulus"] = int_to_json(c.infeasibility->modulus);
    j["infeasibility"] = std::move(w);
  } else {
    j["infeasibility"] = nullptr;
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const std::string kind = require_string(j, "kind");
  if (kind == "existence") {
    c.kind = Certificate::Kind::existence;
  } else if (kind == "nonexistence") {
    c.kind = Certificate::Kind::nonexistence;
  } else {
    throw ParseError("unknown certificate kind \"" + kind + "\"");
  }
  c.n = require_int(j, "n");
  c.g = int_from_json(require(j, "g"));
  for (const json& x : require_array(j, "class_equation")) {
    c.class_equation_coeffs.push_back(int_from_json(x));
  }
  const json& dio = require(j, "diophantine");
  if (!dio.is_null()) {
    std::vector<Int> d;
    for (const json& x : dio) d.push_back(int_from_json(x));
    c.diophantine = std::move(d);
  }
  const json& w = require(j, "witness_map");
  if (!w.is_null()) c.witness = map_from_json(w);
  c.verifications = verifications_from_json(require(j, "verifications"));
  const json& inf = require(j, "infeasibility");
  if (!inf.is_null()) {
    InfeasibilityWitness witness{{}, int_from_json(require(inf, "modulus"))};
    for (const json& x : require_array(inf, "combination")) {
      witness.combination.push_back(int_from_json(x));
    }
    c.infeasibility = std::move(witness);
  }
  return c;
}

json subdivision_to_json(const SubdividedComplex& s) {
  json j;
  j["n"] = s.n();
  j["rounds"] = s.rounds();
  json layers = json::array();
  for (int r = 0; r <= s.rounds(); ++r) {
    json layer = json::array();
    for (const SubVertex& v : s.layer(r)) {
      json vj;
      vj["id"] = v.color;
      vj["view"] = v.view;  // indices into the previous layer; empty for corners
      layer.push_back(std::move(vj));
    }
    layers.push_back(std::move(layer));
  }
  j["layers"] = std::move(layers);
  json vertices = json::array();
  for (int v = 0; v < s.vertex_count(); ++v) {
    json vj;
    vj["index"] = v;
    vj["id"] = s.vertex_color(v);
    vj["view"] = s.layer(s.rounds())[static_cast<std::size_t>(v)].view;
    vj["carrier"] = s.carrier_colors(v);
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  j["facets"] = s.facets();
  return j;
}

json coloring_to_json(const BinaryColoring& b) {
  json j;
  j["bits"] = b;
  return j;
}

BinaryColoring coloring_from_json(const json& j) {
  BinaryColoring b;
  for (const json& x : require_array(j, "bits")) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1)) {
      throw ParseError("coloring bits must be 0 or 1");
    }
    b.push_back(x.get<int>());
  }
  return b;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on " + path);
  try {
    return json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << dump_canonical(j);
  out.flush();
  if (!out) throw IoError("write failure on " + path);
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace equichain
