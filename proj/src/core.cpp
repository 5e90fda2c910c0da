#include "drs/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace drs {

namespace {

struct Gluing {
  std::vector<std::array<CornerRef, 4>> adj;
  std::vector<std::array<int, 4>> edge;
  int num_edges = 0;
};

std::pair<int, int> side_ends(const QuadComplex& c, int q, int s) {
  return {c.quads[q][s], c.quads[q][(s + 1) & 3]};
}

// Pairs every side with its opposite side. Problems are appended to `issues`;
// unmatched entries keep q = -1.
Gluing glue(const QuadComplex& c, std::vector<Issue>& issues) {
  const int F = c.num_quads();
  Gluing g;
  g.adj.assign(F, {});
  g.edge.assign(F, {-1, -1, -1, -1});

  // Key: explicit label if present, otherwise the unordered vertex pair.
  using Key = std::pair<long long, long long>;
  std::map<Key, std::vector<CornerRef>> groups;
  const bool labelled = !c.side_edge.empty();
  for (int q = 0; q < F; ++q) {
    for (int s = 0; s < 4; ++s) {
      auto [u, v] = side_ends(c, q, s);
      Key k = labelled ? Key{c.side_edge[q][s], -1}
                       : Key{std::min(u, v), std::max(u, v)};
      groups[k].push_back({q, s});
    }
  }
  for (auto& [key, refs] : groups) {
    if (refs.size() != 2) {
      Issue is{"unmatched-side", {}, ""};
      for (auto r : refs) is.ids.push_back(r.q);
      std::ostringstream os;
      os << "edge shared by " << refs.size() << " quad sides (need 2)";
      is.message = os.str();
      issues.push_back(is);
      continue;
    }
    auto [a, b] = std::pair{refs[0], refs[1]};
    auto ea = side_ends(c, a.q, a.c);
    auto eb = side_ends(c, b.q, b.c);
    if (ea.first != eb.second || ea.second != eb.first) {
      issues.push_back({"orientation", {a.q, b.q},
                        "shared edge traversed in the same direction"});
      continue;
    }
    g.adj[a.q][a.c] = b;
    g.adj[b.q][b.c] = a;
    g.edge[a.q][a.c] = g.num_edges;
    g.edge[b.q][b.c] = g.num_edges;
    ++g.num_edges;
  }
  return g;
}

CornerRef star_next(const Gluing& g, CornerRef cr) {
  CornerRef n = g.adj[cr.q][(cr.c + 3) & 3];
  return n;  // the vertex sits at corner n.c of n.q
}

}  // namespace

bool ValidationReport::fatal() const {
  return std::any_of(issues.begin(), issues.end(),
                     [](const Issue& i) { return i.kind != "strong-regularity"; });
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) {
    os << i.kind << ":";
    for (int id : i.ids) os << " " << id;
    if (!i.message.empty()) os << " (" << i.message << ")";
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const QuadComplex& c) {
  ValidationReport r;
  const int V = c.num_vertices(), F = c.num_quads();
  if (static_cast<int>(c.rho.size()) != F) {
    r.issues.push_back({"id", {}, "rho count differs from quad count"});
    return r;
  }
  if (!c.side_edge.empty() && static_cast<int>(c.side_edge.size()) != F) {
    r.issues.push_back({"id", {}, "side label count differs from quad count"});
    return r;
  }
  for (int q = 0; q < F; ++q) {
    for (int v : c.quads[q]) {
      if (v < 0 || v >= V) {
        r.issues.push_back({"id", {q}, "corner references unknown vertex"});
        return r;
      }
    }
  }
  if (V == 0 || F == 0) {
    r.issues.push_back({"id", {}, "empty complex"});
    return r;
  }

  for (int q = 0; q < F; ++q) {
    const auto& Q = c.quads[q];
    if (!c.is_black(Q[0]) || !c.is_black(Q[2]) || c.is_black(Q[1]) || c.is_black(Q[3]))
      r.issues.push_back({"bipartite", {q}, "corner colors do not alternate b,w,b,w"});
    if (Q[0] == Q[2] || Q[1] == Q[3])
      r.issues.push_back({"degenerate-quad", {q}, "diagonal with equal endpoints"});
    if (!(c.rho[q].real() > 0.0) || !std::isfinite(c.rho[q].imag()))
      r.issues.push_back({"rho-positivity", {q}, "Re rho must be positive"});
  }

  Gluing g = glue(c, r.issues);
  bool glued = std::none_of(r.issues.begin(), r.issues.end(), [](const Issue& i) {
    return i.kind == "unmatched-side" || i.kind == "orientation";
  });

  std::vector<std::vector<CornerRef>> corners(V);
  for (int q = 0; q < F; ++q)
    for (int k = 0; k < 4; ++k) corners[c.quads[q][k]].push_back({q, k});
  for (int v = 0; v < V; ++v)
    if (corners[v].empty()) r.issues.push_back({"id", {v}, "isolated vertex"});

  if (glued) {
    for (int v = 0; v < V; ++v) {
      if (corners[v].empty()) continue;
      CornerRef start = corners[v][0], cur = start;
      std::size_t n = 0;
      do {
        cur = star_next(g, cur);
        ++n;
      } while (!(cur == start) && n <= corners[v].size());
      if (n != corners[v].size())
        r.issues.push_back({"non-manifold-vertex", {v}, "star is not a single disk"});
    }

    std::vector<int> seen(F, 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (int s = 0; s < 4; ++s) {
        int n = g.adj[q][s].q;
        if (!seen[n]) seen[n] = 1, stack.push_back(n);
      }
    }
    if (std::count(seen.begin(), seen.end(), 0) > 0)
      r.issues.push_back({"disconnected", {}, "quads form several components"});

    // Strong regularity: two quads meet in nothing, one vertex, or one edge.
    std::map<std::pair<int, int>, std::set<int>> shared_v, shared_e;
    for (int v = 0; v < V; ++v)
      for (auto a : corners[v])
        for (auto b : corners[v])
          if (a.q <= b.q && !(a == b)) shared_v[{a.q, b.q}].insert(v);
    for (int q = 0; q < F; ++q)
      for (int s = 0; s < 4; ++s) {
        int n = g.adj[q][s].q;
        shared_e[{std::min(q, n), std::max(q, n)}].insert(g.edge[q][s]);
      }
    for (auto& [pr, vs] : shared_v) {
      auto it = shared_e.find(pr);
      std::size_t ne = it == shared_e.end() ? 0 : it->second.size();
      bool bad = pr.first == pr.second ? true
                 : ne == 0             ? vs.size() > 1
                                       : (ne > 1 || vs.size() != 2);
      if (bad)
        r.issues.push_back({"strong-regularity", {pr.first, pr.second},
                            "quads share more than one vertex or edge"});
    }
    for (auto& [pr, es] : shared_e)
      if (pr.first == pr.second && !shared_v.count(pr))
        r.issues.push_back({"strong-regularity", {pr.first, pr.second},
                            "quad glued to itself"});
  }

  if ((V - F) % 2 != 0 || (2 - V + F) < 0)
    r.issues.push_back({"id", {}, "Euler characteristic is not that of a closed orientable surface"});
  return r;
}

Surface::Surface(QuadComplex c) : c_(std::move(c)) {
  report_ = validate(c_);
  if (report_.fatal()) throw Error("malformed-surface", report_.summary());
  std::vector<Issue> scratch;
  Gluing g = glue(c_, scratch);
  adj_ = std::move(g.adj);
  edge_ = std::move(g.edge);
  genus_ = drs::genus(c_);

  star_.assign(c_.num_vertices(), {});
  std::vector<CornerRef> first(c_.num_vertices());
  for (int q = c_.num_quads() - 1; q >= 0; --q)
    for (int k = 3; k >= 0; --k) first[c_.quads[q][k]] = {q, k};
  for (int v = 0; v < c_.num_vertices(); ++v) {
    CornerRef cur = first[v];
    do {
      star_[v].push_back(cur);
      cur = adj_[cur.q][(cur.c + 3) & 3];
    } while (!(cur == first[v]));
  }
}

int genus(const QuadComplex& c) {
  int chi = c.num_vertices() - c.num_quads();
  if (chi % 2 != 0 || chi > 2)
    throw Error("malformed-surface", "|V| - |F| = " + std::to_string(chi) +
                                         " is not 2 - 2g for any genus");
  return (2 - chi) / 2;
}

double intersection_angle(cplx rho) {
  return std::acos(std::clamp((cplx(0, 1) * rho / std::abs(rho)).real(), -1.0, 1.0));
}

QuadChart quad_chart(const QuadComplex& c, int q) {
  if (q < 0 || q >= c.num_quads()) throw Error("id", "no quad " + std::to_string(q));
  const cplx r = c.rho[q], I(0, 1);
  return {q, {cplx(-1, 0), -I * r, cplx(1, 0), I * r}, intersection_angle(r)};
}

VertexChart vertex_chart(const Surface& s, int v) {
  const auto& st = s.star(v);
  const int k = static_cast<int>(st.size());
  if (k < 3)
    throw Error("malformed-surface", "vertex chart needs degree >= 3 at vertex " +
                                         std::to_string(v));
  const cplx I(0, 1);
  // Rotate so Q_1 is the star entry with the smallest quad id.
  int off = 0;
  for (int i = 1; i < k; ++i)
    if (st[i].q < st[off].q) off = i;
  std::vector<CornerRef> ring(k);
  for (int i = 0; i < k; ++i) ring[i] = st[(off + i) % k];

  // Per-quad ratio relating the diagonal through v to the other one, so that
  // opposite - v = -i sigma (n2 - n1) where n1, n2 follow v counterclockwise.
  auto sigma = [&](CornerRef cr) {
    cplx r = s.rho(cr.q);
    return s.is_black(v) ? 1.0 / r : r;
  };
  const double phi1 = intersection_angle(sigma(ring[0]));
  const double theta = std::min(phi1, kPi - phi1) / 2.0;
  const double alpha = (kPi + theta) / (k - 1);

  // n[i] is the neighbor after v in ring[i] (corner c+1); the neighbor
  // before v in ring[i] (corner c+3) is n[i+1]. Quads 1..k-1 are similar
  // copies of the auxiliary quad with neighbors -1, 1 and angle alpha at v;
  // ring[0] closes the fan with the remaining angle pi - theta.
  std::vector<cplx> n(k);
  n[1] = cplx(1, 0);
  const double cot = 1.0 / std::tan(alpha);
  for (int i = 1; i < k; ++i) {
    cplx sg = sigma(ring[i]);
    double m2 = std::norm(sg);
    double t = (cot * sg.real() + std::sqrt(cot * cot * sg.real() * sg.real() + m2)) / m2;
    cplx x = t * I * sg;
    n[(i + 1) % k] = n[i] / (cplx(-1, 0) - x) * (cplx(1, 0) - x);
  }

  VertexChart vc;
  vc.vertex = v;
  vc.star = ring;
  vc.z.resize(k);
  vc.angle.resize(k);
  for (int i = 0; i < k; ++i) {
    cplx n1 = n[i], n2 = n[(i + 1) % k];
    int c = ring[i].c;
    vc.z[i][c] = 0.0;
    vc.z[i][(c + 1) & 3] = n1;
    vc.z[i][(c + 2) & 3] = -I * sigma(ring[i]) * (n2 - n1);
    vc.z[i][(c + 3) & 3] = n2;
    double ang = std::arg(n2 / n1);
    if (ang <= 0) ang += 2 * kPi;
    vc.angle[i] = ang;
  }
  return vc;
}

MedialGraph medial_graph(const Surface& s) {
  MedialGraph m;
  const int F = s.num_quads(), V = s.num_vertices();
  m.num_vertices = s.num_edges();
  m.ends.resize(4 * F);
  m.edge_color.resize(4 * F);
  for (int q = 0; q < F; ++q)
    for (int c = 0; c < 4; ++c) {
      m.ends[4 * q + c] = {s.edge_of(q, c + 3), s.edge_of(q, c)};
      m.edge_color[4 * q + c] = medial_edge_color(c);
    }
  m.num_vertex_faces = V;
  m.faces.resize(V + F);
  for (int v = 0; v < V; ++v)
    for (auto cr : s.star(v)) m.faces[v].push_back({4 * cr.q + cr.c, -1});
  for (int q = 0; q < F; ++q)
    for (int c = 0; c < 4; ++c) m.faces[V + q].push_back({4 * q + c, +1});
  return m;
}

Subdivision subdivide3(const Surface& s) {
  const QuadComplex& in = s.complex();
  const int F = in.num_quads(), V = in.num_vertices(), E = s.num_edges();
  Subdivision out;
  QuadComplex& c = out.complex;
  c.color = in.color;
  for (int v = 0; v < V; ++v) out.origin.push_back({Subdivision::Origin::old_vertex, v});

  // Side points: two per edge class, indexed from the canonical side (the
  // smaller (q, s) of the pair).
  std::vector<std::array<int, 2>> side_pt(E, {-1, -1});
  auto canonical = [&](int q, int sd) {
    CornerRef o = s.across(q, sd);
    return (q < o.q || (q == o.q && sd < o.c));
  };
  for (int q = 0; q < F; ++q)
    for (int sd = 0; sd < 4; ++sd) {
      if (!canonical(q, sd)) continue;
      int e = s.edge_of(q, sd);
      for (int t = 1; t <= 2; ++t) {
        side_pt[e][t - 1] = c.num_vertices();
        // Along side sd from corner sd; corner sd has color parity sd.
        bool black = ((sd + t) % 2) == 0;
        c.color.push_back(black ? Color::black : Color::white);
        out.origin.push_back({Subdivision::Origin::side_point, q, sd, t});
      }
    }
  auto side_vertex = [&](int q, int sd, int t) {
    int e = s.edge_of(q, sd);
    return canonical(q, sd) ? side_pt[e][t - 1] : side_pt[e][2 - t];
  };

  // Grid (i, j), i along bm->wm, j along bm->wp.
  for (int q = 0; q < F; ++q) {
    std::array<std::array<int, 4>, 4> id{};
    const auto& Q = in.quads[q];
    id[0][0] = Q[kBm];
    id[3][0] = Q[kWm];
    id[3][3] = Q[kBp];
    id[0][3] = Q[kWp];
    for (int t = 1; t <= 2; ++t) {
      id[t][0] = side_vertex(q, 0, t);      // bm -> wm
      id[3][t] = side_vertex(q, 1, t);      // wm -> bp
      id[3 - t][3] = side_vertex(q, 2, t);  // bp -> wp
      id[0][3 - t] = side_vertex(q, 3, t);  // wp -> bm
    }
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        id[i][j] = c.num_vertices();
        c.color.push_back((i + j) % 2 == 0 ? Color::black : Color::white);
        out.origin.push_back({Subdivision::Origin::interior, q, i, j});
      }
    auto& gq = out.grid.emplace_back();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) gq[4 * i + j] = id[i][j];
    const cplx r = in.rho[q];
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        if ((i + j) % 2 == 0) {
          c.quads.push_back({id[i][j], id[i + 1][j], id[i + 1][j + 1], id[i][j + 1]});
          c.rho.push_back(r);
        } else {
          c.quads.push_back({id[i + 1][j], id[i + 1][j + 1], id[i][j + 1], id[i][j]});
          c.rho.push_back(1.0 / r);
        }
      }
  }
  return out;
}

}  // namespace drs
