#include "drs/geometry.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace drs {

RhombicRealization realize_rhombic(const QuadComplex& c, double tol) {
  RhombicRealization r;
  for (int q = 0; q < c.num_quads(); ++q)
    if (std::abs(c.rho[q].imag()) > tol * std::abs(c.rho[q])) r.non_real.push_back(q);

  if (r.non_real.empty()) {
    for (int q = 0; q < c.num_quads(); ++q) {
      double alpha = 2.0 * std::atan(c.rho[q].real());
      double h = std::cos(alpha / 2), w = std::sin(alpha / 2);
      r.rhombi.push_back({cplx(-h, 0), cplx(0, -w), cplx(h, 0), cplx(0, w)});
      r.black_angle.push_back(alpha);
    }
    r.status = RhombicRealization::rhombic;
    return r;
  }
  if (r.non_real.size() == 1) {
    QuadChart ch = quad_chart(c, r.non_real[0]);
    auto sq = [&](int i, int j) { return std::norm(ch.z[j] - ch.z[i]); };
    r.alternating_sum = sq(0, 1) - sq(1, 2) + sq(2, 3) - sq(3, 0);
    r.status = RhombicRealization::obstructed;
    std::ostringstream os;
    os << "quad " << r.non_real[0]
       << " is the only one with non-orthogonal diagonals; its alternating squared side sum "
       << r.alternating_sum << " cannot vanish";
    r.reason = os.str();
    return r;
  }
  r.status = RhombicRealization::undetermined;
  r.reason = std::to_string(r.non_real.size()) + " quads with non-real rho; no certificate";
  return r;
}

TriMesh parse_obj(const std::string& text) {
  TriMesh m;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      std::array<double, 3> p{};
      if (!(ls >> p[0] >> p[1] >> p[2]))
        throw Error("parse", "obj line " + std::to_string(lineno) + ": bad vertex");
      m.pos.push_back(p);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) {
        int i = std::stoi(tok.substr(0, tok.find('/')));
        idx.push_back(i < 0 ? static_cast<int>(m.pos.size()) + i : i - 1);
      }
      if (idx.size() != 3)
        throw Error("parse", "obj line " + std::to_string(lineno) + ": only triangles are supported");
      m.tris.push_back({idx[0], idx[1], idx[2]});
    }
  }
  for (auto& t : m.tris)
    for (int i : t)
      if (i < 0 || i >= static_cast<int>(m.pos.size()))
        throw Error("parse", "obj face references a missing vertex");
  return m;
}

TriMesh regular_tetrahedron() {
  TriMesh m;
  m.pos = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  m.tris = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return m;
}

TriMesh torus_mesh(int nu, int nv, double R, double r) {
  if (nu < 3 || nv < 4 || nv % 2) throw Error("bad-argument", "torus mesh needs nu >= 3 and even nv >= 4");
  // Odd rings are turned by half a step; an unstaggered grid has cyclic
  // quads, which puts every diagonal exactly on the Delaunay boundary.
  TriMesh m;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      double u = 2 * kPi * (i + 0.5 * (j % 2)) / nu, v = 2 * kPi * j / nv;
      m.pos.push_back({(R + r * std::cos(v)) * std::cos(u), (R + r * std::cos(v)) * std::sin(u),
                       r * std::sin(v)});
    }
  auto id = [&](int i, int j) { return ((i % nu + nu) % nu) * nv + (j % nv + nv) % nv; };
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      if (j % 2 == 0) {
        m.tris.push_back({a, b, d});
        m.tris.push_back({b, c, d});
      } else {
        m.tris.push_back({a, b, c});
        m.tris.push_back({a, c, d});
      }
    }
  return m;
}

DelaunayQuads delaunay_voronoi(const TriMesh& mesh) {
  const int V = static_cast<int>(mesh.pos.size()), T = static_cast<int>(mesh.tris.size());
  auto sub = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return std::array<double, 3>{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
  };
  auto dot = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  auto norm_cross = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double x = a[1] * b[2] - a[2] * b[1], y = a[2] * b[0] - a[0] * b[2], z = a[0] * b[1] - a[1] * b[0];
    return std::sqrt(x * x + y * y + z * z);
  };
  // Directed edge (i, j) -> (triangle, opposite vertex).
  std::map<std::pair<int, int>, std::pair<int, int>> half;
  for (int t = 0; t < T; ++t)
    for (int k = 0; k < 3; ++k) {
      int i = mesh.tris[t][k], j = mesh.tris[t][(k + 1) % 3], o = mesh.tris[t][(k + 2) % 3];
      if (!half.emplace(std::pair{i, j}, std::pair{t, o}).second)
        throw Error("malformed-surface", "mesh edge used twice in the same direction");
    }
  DelaunayQuads out;
  QuadComplex& c = out.complex;
  c.color.assign(V, Color::black);
  c.color.resize(V + T, Color::white);
  auto cot_at = [&](int o, int i, int j) {
    auto a = sub(mesh.pos[i], mesh.pos[o]), b = sub(mesh.pos[j], mesh.pos[o]);
    return dot(a, b) / norm_cross(a, b);
  };
  int edge_id = 0;
  for (auto& [ij, left] : half) {
    auto [i, j] = ij;
    if (i > j) continue;
    auto it = half.find({j, i});
    if (it == half.end()) throw Error("malformed-surface", "mesh has a boundary edge");
    auto right = it->second;
    double rho = 0.5 * (cot_at(left.second, i, j) + cot_at(right.second, i, j));
    if (!(rho > 0))
      throw Error("non-delaunay", "edge " + std::to_string(edge_id) + " (" + std::to_string(i) +
                                      "," + std::to_string(j) + ") violates the Delaunay condition");
    c.quads.push_back({i, V + right.first, j, V + left.first});
    c.rho.push_back(rho);
    out.edges.push_back({i, j});
    ++edge_id;
  }
  return out;
}

}  // namespace drs
