#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "drs/calculus.hpp"
#include "drs/homology.hpp"
#include "drs/linalg.hpp"

namespace drs::io {

using json = nlohmann::json;

// DQS: {"vertices": [{"id", "color": "b"|"w"}],
//       "quads": [{"id", "bm", "wm", "bp", "wp", "rho": [re, im], "sides"?: [4 ints]}]}
// Errors are Error("parse") naming the offending path or quad id.
QuadComplex parse_dqs(const std::string& text);
std::string serialize_dqs(const QuadComplex& c);
QuadComplex load_dqs(const std::string& path);
std::string read_file(const std::string& path);

json to_json(cplx z);
cplx cplx_from_json(const json& j, const std::string& where);
json to_json(const la::Mat& m);
json to_json(const la::Vec& v);

json form_to_json(const DiamondForm& w);
DiamondForm form_from_json(const json& j, int num_quads);
json function_to_json(const VertexFunction& f);
VertexFunction function_from_json(const json& j, int num_vertices);

// Cycles as lists of oriented medial-edge keys [quad, corner, dir].
json homology_to_json(const HomologyBasis& h);

// {"source": path, "target": path, "vertex_map": [[src, dst], ...], "quad_map"?: [[src, dst], ...]}
// source and target may also be inline DQS objects instead of paths.
struct MapFile {
  std::string source, target;          // paths, empty when inline
  std::string source_dqs, target_dqs;  // inline surfaces, serialized
  std::vector<int> vertex_map, quad_map;
};
std::string serialize_map(const MapFile& m);
MapFile parse_map(const std::string& text, int source_vertices = -1, int source_quads = -1);

}  // namespace drs::io
