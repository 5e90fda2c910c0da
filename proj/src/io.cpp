#include "drs/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace drs::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("parse", msg); }

int get_int(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
  if (!it->is_number_integer()) fail(where + "." + key + ": expected an integer");
  return it->get<int>();
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

cplx cplx_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const la::Mat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

json to_json(const la::Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

QuadComplex parse_dqs(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) fail("top level: expected an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("missing \"vertices\" array");
  if (!doc.contains("quads") || !doc["quads"].is_array()) fail("missing \"quads\" array");
  QuadComplex c;
  const auto& vs = doc["vertices"];
  c.color.assign(vs.size(), Color::black);
  std::vector<char> seen(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_object()) fail(where + ": expected an object");
    int id = get_int(vs[i], "id", where);
    if (id < 0 || id >= static_cast<int>(vs.size())) fail(where + ": id " + std::to_string(id) + " out of range");
    if (seen[id]) fail(where + ": duplicate vertex id " + std::to_string(id));
    seen[id] = 1;
    auto col = vs[i].find("color");
    if (col == vs[i].end() || !col->is_string()) fail(where + ": missing \"color\"");
    const std::string cs = col->get<std::string>();
    if (cs != "b" && cs != "w") fail(where + ".color: expected \"b\" or \"w\"");
    c.color[id] = cs == "b" ? Color::black : Color::white;
  }
  const auto& qs = doc["quads"];
  c.quads.resize(qs.size());
  c.rho.resize(qs.size());
  std::vector<char> qseen(qs.size(), 0);
  bool any_sides = false, all_sides = true;
  std::vector<std::array<int, 4>> sides(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    std::string where = "quads[" + std::to_string(i) + "]";
    if (!qs[i].is_object()) fail(where + ": expected an object");
    int id = get_int(qs[i], "id", where);
    if (id < 0 || id >= static_cast<int>(qs.size())) fail(where + ": id " + std::to_string(id) + " out of range");
    if (qseen[id]) fail(where + ": duplicate quad id " + std::to_string(id));
    qseen[id] = 1;
    where = "quad " + std::to_string(id);
    const char* keys[4] = {"bm", "wm", "bp", "wp"};
    for (int k = 0; k < 4; ++k) c.quads[id][k] = get_int(qs[i], keys[k], where);
    auto rho = qs[i].find("rho");
    if (rho == qs[i].end()) fail(where + ": missing \"rho\"");
    c.rho[id] = cplx_from_json(*rho, where + ".rho");
    auto sd = qs[i].find("sides");
    if (sd != qs[i].end()) {
      if (!sd->is_array() || sd->size() != 4) fail(where + ".sides: expected 4 integers");
      for (int k = 0; k < 4; ++k) {
        if (!(*sd)[k].is_number_integer()) fail(where + ".sides: expected 4 integers");
        sides[id][k] = (*sd)[k].get<int>();
      }
      any_sides = true;
    } else {
      all_sides = false;
    }
  }
  if (any_sides) {
    if (!all_sides) fail("\"sides\" must be given on every quad or on none");
    c.side_edge = std::move(sides);
  }
  return c;
}

std::string serialize_dqs(const QuadComplex& c) {
  json doc;
  doc["vertices"] = json::array();
  for (int v = 0; v < c.num_vertices(); ++v)
    doc["vertices"].push_back({{"id", v}, {"color", c.is_black(v) ? "b" : "w"}});
  doc["quads"] = json::array();
  for (int q = 0; q < c.num_quads(); ++q) {
    json jq = {{"id", q},          {"bm", c.quads[q][0]}, {"wm", c.quads[q][1]},
               {"bp", c.quads[q][2]}, {"wp", c.quads[q][3]}, {"rho", to_json(c.rho[q])}};
    if (!c.side_edge.empty()) jq["sides"] = c.side_edge[q];
    doc["quads"].push_back(jq);
  }
  // nlohmann writes doubles with the shortest round-trip representation
  // (at most 17 significant digits).
  return doc.dump() + "\n";
}

QuadComplex load_dqs(const std::string& path) { return parse_dqs(read_file(path)); }

json form_to_json(const DiamondForm& w) {
  json vals = json::array();
  for (int q = 0; q < w.size(); ++q) vals.push_back({q, to_json(w.black[q]), to_json(w.white[q])});
  return {{"type", "oneform-diamond"}, {"values", vals}};
}

DiamondForm form_from_json(const json& j, int num_quads) {
  if (!j.is_object() || j.value("type", "") != "oneform-diamond") fail("form: expected type \"oneform-diamond\"");
  if (!j.contains("values") || !j["values"].is_array()) fail("form: missing \"values\"");
  DiamondForm w = DiamondForm::zero(num_quads);
  for (std::size_t i = 0; i < j["values"].size(); ++i) {
    const auto& e = j["values"][i];
    const std::string where = "values[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer()) fail(where + ": expected [quad, [re, im], [re, im]]");
    int q = e[0].get<int>();
    if (q < 0 || q >= num_quads) fail(where + ": quad id " + std::to_string(q) + " out of range");
    w.black[q] = cplx_from_json(e[1], where + "[1]");
    w.white[q] = cplx_from_json(e[2], where + "[2]");
  }
  return w;
}

json function_to_json(const VertexFunction& f) {
  json out = json::object();
  for (std::size_t v = 0; v < f.size(); ++v) out[std::to_string(v)] = to_json(f[v]);
  return out;
}

VertexFunction function_from_json(const json& j, int num_vertices) {
  if (!j.is_object()) fail("function: expected an object of vertex-id keys");
  VertexFunction f(num_vertices, 0.0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int v = -1;
    try {
      std::size_t pos = 0;
      v = std::stoi(it.key(), &pos);
      if (pos != it.key().size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= num_vertices) fail("function: bad vertex id \"" + it.key() + "\"");
    f[v] = cplx_from_json(it.value(), "function[" + it.key() + "]");
  }
  return f;
}

json homology_to_json(const HomologyBasis& h) {
  auto walk = [](const Cycle& c) {
    json keys = json::array();
    for (auto st : c.walk) keys.push_back({st.q, st.c, st.dir});
    return keys;
  };
  json a = json::array(), b = json::array();
  for (auto& c : h.a) a.push_back(walk(c));
  for (auto& c : h.b) b.push_back(walk(c));
  return {{"genus", h.genus}, {"a", a}, {"b", b}, {"intersection", h.intersection}};
}

MapFile parse_map(const std::string& text, int source_vertices, int source_quads) {
  const json doc = parse_text(text);
  if (!doc.is_object()) fail("map: expected an object");
  MapFile m;
  for (const char* key : {"source", "target"}) {
    if (!doc.contains(key)) fail(std::string("map: missing \"") + key + "\"");
    const json& v = doc[key];
    std::string& path = std::string(key) == "source" ? m.source : m.target;
    std::string& inl = std::string(key) == "source" ? m.source_dqs : m.target_dqs;
    if (v.is_string())
      path = v.get<std::string>();
    else if (v.is_object())
      inl = v.dump();
    else
      fail(std::string("map.") + key + ": expected a path or a DQS object");
  }
  auto pairs = [&](const char* key, int n, std::vector<int>& out) {
    const auto& arr = doc[key];
    if (!arr.is_array()) fail(std::string("map.") + key + ": expected an array");
    std::map<int, int> mp;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& p = arr[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        fail(std::string("map.") + key + "[" + std::to_string(i) + "]: expected [src, dst]");
      mp[p[0].get<int>()] = p[1].get<int>();
    }
    int size = n >= 0 ? n : (mp.empty() ? 0 : mp.rbegin()->first + 1);
    out.assign(size, -1);
    for (auto [a, b] : mp) {
      if (a < 0 || a >= size) fail(std::string("map.") + key + ": source id " + std::to_string(a) + " out of range");
      out[a] = b;
    }
    for (int i = 0; i < size; ++i)
      if (out[i] < 0) fail(std::string("map.") + key + ": no image for source id " + std::to_string(i));
  };
  if (!doc.contains("vertex_map")) fail("map: missing \"vertex_map\"");
  pairs("vertex_map", source_vertices, m.vertex_map);
  if (doc.contains("quad_map")) pairs("quad_map", source_quads, m.quad_map);
  return m;
}

std::string serialize_map(const MapFile& m) {
  json doc;
  doc["source"] = m.source_dqs.empty() ? json(m.source) : json::parse(m.source_dqs);
  doc["target"] = m.target_dqs.empty() ? json(m.target) : json::parse(m.target_dqs);
  json vm = json::array(), qm = json::array();
  for (std::size_t i = 0; i < m.vertex_map.size(); ++i) vm.push_back({i, m.vertex_map[i]});
  for (std::size_t i = 0; i < m.quad_map.size(); ++i) qm.push_back({i, m.quad_map[i]});
  doc["vertex_map"] = vm;
  if (!m.quad_map.empty()) doc["quad_map"] = qm;
  return doc.dump() + "\n";
}

}  // namespace drs::io
