#include "drs/coverings.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "drs/generators.hpp"

namespace drs {

namespace {

bool biconstant_on(const CoveringMap& f, int q) {
  const Surface& s = *f.source;
  return f.vertex_map[s.vertex(q, kBm)] == f.vertex_map[s.vertex(q, kBp)] &&
         f.vertex_map[s.vertex(q, kWm)] == f.vertex_map[s.vertex(q, kWp)];
}

// Target quad whose corners are the images of q's corners, possibly rotated
// by 180 degrees; -1 if none.
int find_image(const CoveringMap& f, int q, int* rotation) {
  const Surface& s = *f.source;
  const Surface& t = *f.target;
  std::array<int, 4> im;
  for (int c = 0; c < 4; ++c) im[c] = f.vertex_map[s.vertex(q, c)];
  auto matches = [&](int Q) {
    for (int rot : {0, 2}) {
      bool ok = true;
      for (int c = 0; c < 4 && ok; ++c) ok = t.vertex(Q, c + rot) == im[c];
      if (ok) {
        if (rotation) *rotation = rot;
        return true;
      }
    }
    return false;
  };
  if (!f.quad_map.empty()) {
    int Q = f.quad_map[q];
    return Q >= 0 && matches(Q) ? Q : -1;
  }
  for (auto cr : t.star(im[0]))
    if (matches(cr.q)) return cr.q;
  return -1;
}

bool is_target_edge(const Surface& t, int u, int w) {
  for (auto cr : t.star(u))
    if (t.vertex(cr.q, cr.c + 1) == w || t.vertex(cr.q, cr.c + 3) == w) return true;
  return false;
}

}  // namespace

int quad_image(const CoveringMap& f, int q) {
  if (biconstant_on(f, q)) return -1;
  return find_image(f, q, nullptr);
}

ValidationReport validate_map(const CoveringMap& f) {
  ValidationReport r;
  const Surface& s = *f.source;
  const Surface& t = *f.target;
  if (static_cast<int>(f.vertex_map.size()) != s.num_vertices()) {
    r.issues.push_back({"id", {}, "vertex map has the wrong length"});
    return r;
  }
  for (int v = 0; v < s.num_vertices(); ++v) {
    int w = f.vertex_map[v];
    if (w < 0 || w >= t.num_vertices()) {
      r.issues.push_back({"id", {v}, "vertex maps outside the target"});
      return r;
    }
    if (s.is_black(v) != t.is_black(w)) r.issues.push_back({"color", {v}, "map does not preserve colors"});
  }
  for (int q = 0; q < s.num_quads(); ++q) {
    if (biconstant_on(f, q)) {
      int b = f.vertex_map[s.vertex(q, kBm)], w = f.vertex_map[s.vertex(q, kWm)];
      if (!is_target_edge(t, b, w))
        r.issues.push_back({"star-condition", {q}, "biconstant quad does not map to an edge"});
      continue;
    }
    int Q = find_image(f, q, nullptr);
    if (Q < 0) {
      r.issues.push_back({"star-condition", {q}, "quad maps neither onto a quad nor onto an edge"});
      continue;
    }
    if (std::abs(s.rho(q) - t.rho(Q)) > 1e-9 * std::abs(t.rho(Q)))
      r.issues.push_back({"cauchy-riemann", {q, Q}, "rho differs from that of the image quad"});
  }
  return r;
}

int branch_vertex(const CoveringMap& f, int v) {
  const Surface& s = *f.source;
  const Surface& t = *f.target;
  const int tv = f.vertex_map[v];
  const auto& tstar = t.star(tv);
  const int deg = static_cast<int>(tstar.size());
  int count = 0, last = -1, first = -1;
  for (auto cr : s.star(v)) {
    if (biconstant_on(f, cr.q)) continue;
    int rot = 0;
    int Q = find_image(f, cr.q, &rot);
    if (Q < 0) throw Error("map-invalid", "quad " + std::to_string(cr.q) + " has no image");
    CornerRef img{Q, (cr.c + rot) & 3};
    int pos = static_cast<int>(std::find(tstar.begin(), tstar.end(), img) - tstar.begin());
    if (pos == deg) throw Error("map-invalid", "image corner is not in the target star");
    if (last >= 0 && pos != (last + 1) % deg)
      throw Error("map-invalid", "star of vertex " + std::to_string(v) + " does not wrap consistently");
    if (first < 0) first = pos;
    last = pos;
    ++count;
  }
  if (count == 0) return 0;
  if (count % deg != 0 || (last + 1) % deg != first)
    throw Error("map-invalid", "star of vertex " + std::to_string(v) + " does not close up");
  return count / deg;
}

int sheet_count(const CoveringMap& f) {
  const Surface& s = *f.source;
  const Surface& t = *f.target;
  std::vector<int> fiber(t.num_vertices(), 0), quads(t.num_quads(), 0);
  for (int v = 0; v < s.num_vertices(); ++v) fiber[f.vertex_map[v]] += branch_vertex(f, v);
  for (int q = 0; q < s.num_quads(); ++q) {
    int Q = quad_image(f, q);
    if (Q >= 0) ++quads[Q];
  }
  const int N = fiber.empty() ? 0 : fiber[0];
  for (int w = 0; w < t.num_vertices(); ++w)
    if (fiber[w] != N) throw Error("map-invalid", "fiber sums differ between target vertices");
  for (int Q = 0; Q < t.num_quads(); ++Q)
    if (quads[Q] != N) throw Error("map-invalid", "preimage quad counts differ from the fiber sum");
  return N;
}

BranchReport check_riemann_hurwitz(const CoveringMap& f) {
  const Surface& s = *f.source;
  const Surface& t = *f.target;
  BranchReport r;
  r.wrap.resize(s.num_vertices());
  r.quad_branch.resize(s.num_quads());
  for (int v = 0; v < s.num_vertices(); ++v) {
    r.wrap[v] = branch_vertex(f, v);
    r.total_branching += r.wrap[v] - 1;
  }
  for (int q = 0; q < s.num_quads(); ++q) {
    r.quad_branch[q] = biconstant_on(f, q) ? 1 : 0;
    r.total_branching += r.quad_branch[q];
  }
  r.sheets = sheet_count(f);
  std::vector<char> hit(t.num_vertices(), 0);
  for (int w : f.vertex_map) hit[w] = 1;
  r.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  r.genus = s.genus();
  r.target_genus = t.genus();
  r.residual = 2 * r.genus - (2 * r.sheets * (r.target_genus - 1) + 2 + r.total_branching);
  std::ostringstream os;
  os << r.genus << " = " << r.sheets << "*(" << r.target_genus << "-1)+1+" << r.total_branching
     << "/2 " << (r.residual == 0 ? "OK" : "FAIL");
  r.identity = os.str();
  return r;
}

CoverData gen_cube_double_cover_coarse() {
  CoverData d;
  d.base = gen_cube(1);
  Surface base(d.base);
  // Cut along the four z-parallel edges; crossing one from an x-face switches
  // the sheet.
  auto z_parallel = [&](int q, int sd) {
    // Unit cube ids follow lexicographic (x, y, z): id = 4x + 2y + z.
    int u = d.base.quads[q][sd], w = d.base.quads[q][(sd + 1) & 3];
    return (u ^ w) == 1;
  };
  auto x_face = [&](int q) {
    int x = d.base.quads[q][0] >> 2;
    for (int v : d.base.quads[q])
      if ((v >> 2) != x) return false;
    return true;
  };
  QuadComplex& c = d.total;
  c.color = d.base.color;
  for (int sheet = 0; sheet < 2; ++sheet)
    for (int q = 0; q < d.base.num_quads(); ++q) {
      c.quads.push_back(d.base.quads[q]);
      c.rho.push_back(d.base.rho[q]);
      std::array<int, 4> lab;
      for (int sd = 0; sd < 4; ++sd) {
        int e = base.edge_of(q, sd);
        int swap = z_parallel(q, sd) && x_face(q) ? 1 : 0;
        lab[sd] = 2 * e + (sheet ^ swap);
      }
      c.side_edge.push_back(lab);
      d.quad_map.push_back(q);
    }
  d.vertex_map.resize(8);
  for (int v = 0; v < 8; ++v) {
    d.vertex_map[v] = v;
    d.special.push_back(v);
  }
  return d;
}

CoverData gen_cube_double_cover() {
  CoverData coarse = gen_cube_double_cover_coarse();
  Surface total(coarse.total), base(coarse.base);
  Subdivision st = subdivide3(total), sb = subdivide3(base);
  CoverData d;
  d.total = st.complex;
  d.base = sb.complex;
  d.vertex_map.assign(d.total.num_vertices(), -1);
  for (int q = 0; q < coarse.total.num_quads(); ++q) {
    int bq = coarse.quad_map[q];
    for (int k = 0; k < 16; ++k) {
      int& slot = d.vertex_map[st.grid[q][k]];
      if (slot >= 0 && slot != sb.grid[bq][k]) throw Error("internal", "inconsistent cover map");
      slot = sb.grid[bq][k];
    }
    for (int k = 0; k < 9; ++k) d.quad_map.push_back(9 * bq + k);
  }
  d.special = coarse.special;  // old vertices keep their ids
  return d;
}

CoverData gen_torus_double_cover() {
  CoverData d;
  d.total = gen_torus(8, 4, cplx(0, 0.5));
  d.base = gen_torus(4, 4, cplx(0, 1));
  d.vertex_map.resize(32);
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 8; ++j) d.vertex_map[k * 8 + j] = k * 4 + j % 4;
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 8; ++j) d.quad_map.push_back(k * 4 + j % 4);
  return d;
}

}  // namespace drs
