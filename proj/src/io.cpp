#include "dirtile/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dirtile/errors.hpp"
#include "json.hpp"

namespace dirtile {

using Json = nlohmann::ordered_json;

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "/" + key + ": missing field");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
  auto v = j.get<long long>();
  if (v < -2147483647LL || v > 2147483647LL) throw SchemaError(path + ": integer out of range");
  return static_cast<int>(v);
}

int int_field(const Json& obj, const char* key, const std::string& path) { return as_int(field(obj, key, path), path + "/" + key); }

bool bool_field(const Json& obj, const char* key, const std::string& path) {
  const Json& j = field(obj, key, path);
  if (!j.is_boolean()) throw SchemaError(path + "/" + key + ": expected a boolean");
  return j.get<bool>();
}

std::string string_field(const Json& obj, const char* key, const std::string& path) {
  const Json& j = field(obj, key, path);
  if (!j.is_string()) throw SchemaError(path + "/" + key + ": expected a string");
  return j.get<std::string>();
}

const Json& array_field(const Json& obj, const char* key, const std::string& path) {
  const Json& j = field(obj, key, path);
  if (!j.is_array()) throw SchemaError(path + "/" + key + ": expected an array");
  return j;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path + ": expected an array");
  std::vector<int> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], path + "/" + std::to_string(i)));
  return v;
}

SignCode code_field(const Json& obj, const char* key, const std::string& path) {
  std::string s = string_field(obj, key, path);
  for (char c : s)
    if (c != '+' && c != '-') throw SchemaError(path + "/" + key + ": expected a sign string such as \"+--+\"");
  try {
    return SignCode::parse(s);
  } catch (const Error& e) {
    throw SchemaError(path + "/" + key + ": " + e.what());
  }
}

void check_id(const Json& rec, int expected, const std::string& path) {
  if (int_field(rec, "id", path) != expected) throw SchemaError(path + "/id: expected " + std::to_string(expected));
}

// Top-level object with one record per line in each table.
std::string layout(const std::vector<std::pair<std::string, Json>>& scalars,
                   const std::vector<std::pair<std::string, std::vector<Json>>>& tables) {
  std::string out = "{\n";
  std::size_t total = scalars.size() + tables.size(), k = 0;
  for (const auto& [key, value] : scalars) {
    out += "  " + Json(key).dump() + ": " + value.dump();
    out += ++k < total ? ",\n" : "\n";
  }
  for (const auto& [key, rows] : tables) {
    out += "  " + Json(key).dump() + ": [";
    if (!rows.empty()) out += "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) out += "    " + rows[i].dump() + (i + 1 < rows.size() ? ",\n" : "\n");
    out += rows.empty() ? "]" : "  ]";
    out += ++k < total ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace

std::string patch_to_json(const TilingPatch& p) {
  std::vector<Json> vs, es, ts;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Json r;
    r["id"] = i;
    r["edges"] = p.vertices[i].edges;
    r["interior"] = p.vertices[i].interior;
    vs.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const auto& e = p.edges[i];
    Json r;
    r["id"] = i;
    r["src"] = e.src;
    r["tgt"] = e.tgt;
    Json slots = Json::array();
    for (int t : e.tiles) slots.push_back(t < 0 ? Json(nullptr) : Json(t));
    r["tiles"] = slots;
    r["interior"] = e.interior;
    es.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < p.tiles.size(); ++i) {
    const auto& t = p.tiles[i];
    Json r;
    r["id"] = i;
    r["edges"] = t.edges;
    r["color"] = t.color;
    r["word"] = t.word;
    ts.push_back(std::move(r));
  }
  return layout({{"m", p.params.m},
                 {"n", p.params.n},
                 {"code", p.category.code().str()},
                 {"radius", p.radius},
                 {"base_tile", p.base_tile},
                 {"reflective", p.reflective}},
                {{"vertices", vs}, {"edges", es}, {"tiles", ts}});
}

TilingPatch patch_from_json(std::string_view text) {
  Json doc = parse_document(text);
  const std::string root;
  TilingPatch p;
  int m = int_field(doc, "m", root), n = int_field(doc, "n", root);
  try {
    p.params = CoxeterParams::make(m, n);
  } catch (const InvalidParamsError& e) {
    throw SchemaError(std::string("/n: ") + e.what());
  }
  SignCode code = code_field(doc, "code", root);
  if (code.size() != m) throw SchemaError("/code: length " + std::to_string(code.size()) + " differs from m = " + std::to_string(m));
  p.category = MGonCategory(code);
  p.radius = int_field(doc, "radius", root);
  if (p.radius < 0) throw SchemaError("/radius: must be non-negative");
  p.base_tile = int_field(doc, "base_tile", root);
  p.reflective = bool_field(doc, "reflective", root);

  const Json& vs = array_field(doc, "vertices", root);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string path = "/vertices/" + std::to_string(i);
    check_id(vs[i], static_cast<int>(i), path);
    p.vertices.push_back({int_list(field(vs[i], "edges", path), path + "/edges"), bool_field(vs[i], "interior", path)});
  }
  const Json& es = array_field(doc, "edges", root);
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string path = "/edges/" + std::to_string(i);
    check_id(es[i], static_cast<int>(i), path);
    PatchEdge e;
    e.src = int_field(es[i], "src", path);
    e.tgt = int_field(es[i], "tgt", path);
    const Json& slots = array_field(es[i], "tiles", path);
    if (slots.size() != 2) throw SchemaError(path + "/tiles: expected two slots");
    for (std::size_t k = 0; k < 2; ++k) e.tiles[k] = slots[k].is_null() ? -1 : as_int(slots[k], path + "/tiles/" + std::to_string(k));
    e.interior = bool_field(es[i], "interior", path);
    p.edges.push_back(e);
  }
  const Json& ts = array_field(doc, "tiles", root);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string path = "/tiles/" + std::to_string(i);
    check_id(ts[i], static_cast<int>(i), path);
    PatchTile t;
    t.edges = int_list(field(ts[i], "edges", path), path + "/edges");
    if (static_cast<int>(t.edges.size()) != m) throw SchemaError(path + "/edges: expected " + std::to_string(m) + " edge ids");
    t.color = int_field(ts[i], "color", path);
    if (t.color != 1 && t.color != -1) throw SchemaError(path + "/color: expected 1 or -1");
    t.word = int_list(field(ts[i], "word", path), path + "/word");
    p.tiles.push_back(std::move(t));
  }
  if (p.tiles.empty()) throw SchemaError("/tiles: patch has no tiles");
  if (p.base_tile < 0 || p.base_tile >= static_cast<int>(p.tiles.size())) throw SchemaError("/base_tile: no such tile");
  return p;
}

std::string patch_digest(const TilingPatch& patch) {
  std::string text = patch_to_json(patch);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PatchReference PatchReference::of(const TilingPatch& patch) {
  return {patch.params.m, patch.params.n, patch.category.code(), patch.radius, patch_digest(patch)};
}

std::string reversal_to_json(const TilingPatch& patch, const EdgeReversal& tau) {
  if (tau.values.size() != patch.edges.size()) throw DimensionError("edge reversal does not cover the patch");
  PatchReference ref = PatchReference::of(patch);
  Json r;
  r["m"] = ref.m;
  r["n"] = ref.n;
  r["code"] = ref.code.str();
  r["radius"] = ref.radius;
  r["digest"] = ref.digest;
  std::vector<Json> rows;
  for (std::size_t e = 0; e < tau.values.size(); ++e) rows.push_back(Json::array({e, tau.values[e]}));
  return layout({{"patch", r}}, {{"values", rows}});
}

ReversalDocument reversal_from_json(std::string_view text) {
  Json doc = parse_document(text);
  ReversalDocument out;
  const Json& r = field(doc, "patch", "");
  out.patch.m = int_field(r, "m", "/patch");
  out.patch.n = int_field(r, "n", "/patch");
  out.patch.code = code_field(r, "code", "/patch");
  out.patch.radius = int_field(r, "radius", "/patch");
  out.patch.digest = string_field(r, "digest", "/patch");
  const Json& vals = array_field(doc, "values", "");
  out.tau.values.assign(vals.size(), 0);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    std::string path = "/values/" + std::to_string(i);
    auto pair = int_list(vals[i], path);
    if (pair.size() != 2) throw SchemaError(path + ": expected [edge, sign]");
    if (pair[0] < 0 || pair[0] >= static_cast<int>(vals.size())) throw SchemaError(path + "/0: edge id out of range");
    if (pair[1] != 1 && pair[1] != -1) throw SchemaError(path + "/1: sign must be 1 or -1");
    if (out.tau.values[pair[0]] != 0) throw SchemaError(path + "/0: edge listed twice");
    out.tau.values[pair[0]] = pair[1];
  }
  return out;
}

EdgeReversal reversal_from_json(std::string_view text, const TilingPatch& patch) {
  ReversalDocument doc = reversal_from_json(text);
  if (doc.patch != PatchReference::of(patch)) throw SchemaError("/patch: reference does not match the given patch");
  if (doc.tau.values.size() != patch.edges.size()) throw SchemaError("/values: expected one value per edge");
  return doc.tau;
}

std::string scheme_to_json(const ReflectionScheme& s) {
  Json gamma = Json::array();
  for (const auto& e : s.gamma.members()) gamma.push_back(e.name());
  Json phi = Json::array();
  for (const auto& c : s.phi) phi.push_back(c.str());
  return layout({{"base", s.base.code().str()}, {"target", s.target.code().str()}, {"n", s.n}, {"gamma", gamma}, {"phi", phi}}, {});
}

ReflectionScheme scheme_from_json(std::string_view text) {
  Json doc = parse_document(text);
  ReflectionScheme s;
  SignCode base = code_field(doc, "base", ""), target = code_field(doc, "target", "");
  if (base.size() < 3) throw SchemaError("/base: need at least 3 sides");
  if (target.size() != base.size()) throw SchemaError("/target: length differs from base");
  s.base = MGonCategory(base);
  s.target = MGonCategory(target);
  s.n = int_field(doc, "n", "");
  int m = base.size();
  const Json& gamma = array_field(doc, "gamma", "");
  ElementMask mask = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    std::string path = "/gamma/" + std::to_string(i);
    if (!gamma[i].is_string()) throw SchemaError(path + ": expected an element name");
    try {
      mask |= ElementMask{1} << DihedralElement::parse(m, gamma[i].get<std::string>()).index();
    } catch (const Error& e) {
      throw SchemaError(path + ": " + e.what());
    }
  }
  try {
    s.gamma = make_subset(target, mask);
  } catch (const Error& e) {
    throw SchemaError(std::string("/gamma: ") + e.what());
  }
  const Json& phi = array_field(doc, "phi", "");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    std::string path = "/phi/" + std::to_string(i);
    if (!phi[i].is_string()) throw SchemaError(path + ": expected a sign string");
    std::string str = phi[i].get<std::string>();
    for (char c : str)
      if (c != '+' && c != '-') throw SchemaError(path + ": expected a sign string");
    if (static_cast<int>(str.size()) != m) throw SchemaError(path + ": length differs from m");
    s.phi.push_back(SignCode::parse(str));
  }
  return s;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path + ": cannot write");
  out << text;
  if (!out) throw Error(path + ": write failed");
}

}  // namespace dirtile
