#include "drs/homology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace drs {

int step_from(const Surface& s, MedialStep st) {
  return st.dir > 0 ? s.edge_of(st.q, st.c + 3) : s.edge_of(st.q, st.c);
}

int step_to(const Surface& s, MedialStep st) {
  return st.dir > 0 ? s.edge_of(st.q, st.c) : s.edge_of(st.q, st.c + 3);
}

bool is_closed_walk(const Surface& s, const MedialWalk& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (step_to(s, w[i]) != step_from(s, w[(i + 1) % w.size()])) return false;
  return true;
}

MedialWalk reversed(const MedialWalk& w) {
  MedialWalk r(w.rbegin(), w.rend());
  for (auto& st : r) st.dir = -st.dir;
  return r;
}

MedialWalk cancel_backtracks(MedialWalk w) {
  MedialWalk out;
  for (auto st : w) {
    if (!out.empty() && out.back().q == st.q && out.back().c == st.c &&
        out.back().dir == -st.dir)
      out.pop_back();
    else
      out.push_back(st);
  }
  return out;
}

BlackWhiteChains black_white(const Surface& s, const MedialWalk& w) {
  BlackWhiteChains ch{std::vector<int>(s.num_quads()), std::vector<int>(s.num_quads())};
  for (auto st : w) {
    switch (st.c & 3) {
      case 0: ch.white[st.q] -= st.dir; break;
      case 1: ch.black[st.q] += st.dir; break;
      case 2: ch.white[st.q] += st.dir; break;
      case 3: ch.black[st.q] -= st.dir; break;
    }
  }
  return ch;
}

std::vector<int> chain_boundary(const Surface& s, const std::vector<int>& chain, Color color) {
  std::vector<int> bd(s.num_vertices());
  const int lo = color == Color::black ? kBm : kWm;
  for (int q = 0; q < s.num_quads(); ++q) {
    bd[s.vertex(q, lo + 2)] += chain[q];
    bd[s.vertex(q, lo)] -= chain[q];
  }
  return bd;
}

int intersection_number(const BlackWhiteChains& x, const BlackWhiteChains& y) {
  // Black diagonal (b- -> b+) crossed by the white one (w- -> w+) from right
  // to left counts +1. Using B(x) and W(y) is legitimate because both are
  // homologous to x and y and meet only at quad centers.
  int n = 0;
  for (std::size_t q = 0; q < x.black.size(); ++q) n += x.black[q] * y.white[q];
  return n;
}

std::vector<std::vector<int>> intersection_matrix(const std::vector<const Cycle*>& cycles) {
  const std::size_t n = cycles.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = intersection_number(cycles[i]->chains, cycles[j]->chains);
  return m;
}

namespace {

// Walk state: sitting on the medial vertex of side c of q with the black
// endpoint of that side at corner c (so c is even).
struct State {
  int q, c;
};

class WalkBuilder {
 public:
  explicit WalkBuilder(const Surface& s) : s_(s), pos_(s.num_quads()) {
    for (int v = 0; v < s.num_vertices(); ++v) {
      const auto& st = s.star(v);
      for (int i = 0; i < static_cast<int>(st.size()); ++i) pos_[st[i].q][st[i].c] = i;
    }
  }

  // Normalized state for the medial vertex on side `side` of q.
  State normalize(int q, int side) const {
    side &= 3;
    if (side % 2 == 0) return {q, side};
    CornerRef o = s_.across(q, side);
    return {o.q, o.c};
  }

  // Walk around the black vertex of `from` to reach `to`, shorter way round.
  void rotate(State& cur, State to, MedialWalk& out) const {
    int v = s_.vertex(cur.q, cur.c);
    const int k = static_cast<int>(s_.star(v).size());
    int i = pos_[cur.q][cur.c], j = pos_[to.q][to.c];
    int ccw = ((j - i) % k + k) % k;
    if (ccw <= k - ccw) {
      for (int t = 0; t < ccw; ++t) {
        out.push_back({cur.q, cur.c, -1});
        CornerRef n = s_.across(cur.q, cur.c + 3);
        cur = {n.q, n.c};
      }
    } else {
      for (int t = 0; t < k - ccw; ++t) {
        CornerRef n = s_.across(cur.q, cur.c);
        out.push_back({n.q, (n.c + 1) & 3, +1});
        cur = {n.q, (n.c + 1) & 3};
      }
    }
  }

  // Follow the black diagonal of q in direction dir.
  void traverse(State& cur, int q, int dir, MedialWalk& out) const {
    State start{q, dir > 0 ? kBm : kBp};
    rotate(cur, start, out);
    int corner = dir > 0 ? kWm : kWp;
    out.push_back({q, corner, +1});
    cur = normalize(q, corner);
  }

  MedialWalk walk(State base, const std::vector<std::pair<int, int>>& path) const {
    MedialWalk out;
    State cur = base;
    for (auto [q, d] : path) traverse(cur, q, d, out);
    rotate(cur, base, out);
    return cancel_backtracks(out);
  }

 private:
  const Surface& s_;
  std::vector<std::array<int, 4>> pos_;
};

using IVec = std::vector<long long>;

long long form(const IVec& x, const IVec& y, const std::vector<std::vector<int>>& M) {
  long long r = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i])
      for (std::size_t j = 0; j < y.size(); ++j) r += x[i] * M[i][j] * y[j];
  return r;
}

void axpy(IVec& y, long long a, const IVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Canonical symplectic basis of the lattice with Gram matrix M (antisymmetric,
// unimodular). Returns pairs (a_i, b_i) with a_i . b_j = delta_ij.
std::vector<std::pair<IVec, IVec>> symplectic_reduce(const std::vector<std::vector<int>>& M) {
  const std::size_t n = M.size();
  std::vector<IVec> pool;
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    pool.push_back(e);
  }
  std::vector<std::pair<IVec, IVec>> out;
  while (!pool.empty()) {
    IVec a = pool.front();
    pool.erase(pool.begin());
    // Euclid on the pairings a . y until a single partner remains.
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        long long v = std::llabs(form(a, pool[i], M));
        if (v && (best < 0 || v < std::llabs(form(a, pool[best], M)))) best = static_cast<int>(i);
      }
      if (best < 0) throw Error("homology", "intersection form is degenerate");
      long long pb = form(a, pool[best], M);
      bool reduced = true;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (static_cast<int>(i) == best) continue;
        long long pi = form(a, pool[i], M);
        if (pi == 0) continue;
        axpy(pool[i], -(pi / pb), pool[best]);
        if (form(a, pool[i], M) != 0) reduced = false;
      }
      if (!reduced) continue;
      if (std::llabs(pb) != 1) throw Error("homology", "intersection form is not unimodular");
      IVec b = pool[best];
      pool.erase(pool.begin() + best);
      if (pb < 0)
        for (auto& x : b) x = -x;
      for (auto& z : pool) {
        long long zb = form(z, b, M), za = form(z, a, M);
        axpy(z, -zb, a);
        axpy(z, za, b);
      }
      out.push_back({a, b});
      break;
    }
  }
  return out;
}

MedialWalk combine(const std::vector<MedialWalk>& gens, const IVec& coef) {
  MedialWalk w;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const MedialWalk piece = coef[i] >= 0 ? gens[i] : reversed(gens[i]);
    for (long long t = 0; t < std::llabs(coef[i]); ++t) w.insert(w.end(), piece.begin(), piece.end());
  }
  return cancel_backtracks(w);
}

}  // namespace

HomologyBasis homology_basis(const Surface& s) {
  HomologyBasis h;
  h.genus = s.genus();
  const int F = s.num_quads(), V = s.num_vertices();

  // Base point: start of the medial edge at the smallest-id vertex of quad 0.
  int c0 = 0;
  for (int c = 1; c < 4; ++c)
    if (s.vertex(0, c) < s.vertex(0, c0)) c0 = c;
  WalkBuilder wb(s);
  State base = wb.normalize(0, c0 + 3);
  h.base_point = s.edge_of(base.q, base.c);
  h.base_black = s.vertex(base.q, base.c);
  if (h.genus == 0) return h;

  // BFS tree on Γ.
  std::vector<int> parent_q(V, -1), parent_dir(V, 0), seen(V, 0);
  std::vector<char> in_tree(F, 0);
  std::deque<int> queue{h.base_black};
  seen[h.base_black] = 1;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    for (auto cr : s.star(b)) {
      int dir = cr.c == kBm ? +1 : -1;
      int o = s.vertex(cr.q, cr.c + 2);
      if (seen[o]) continue;
      seen[o] = 1;
      parent_q[o] = cr.q;
      parent_dir[o] = dir;
      in_tree[cr.q] = 1;
      queue.push_back(o);
    }
  }
  // Spanning tree of Γ* among the remaining quads.
  std::vector<char> in_cotree(F, 0), wseen(V, 0);
  int w0 = s.vertex(0, kWm);
  queue = {w0};
  wseen[w0] = 1;
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (auto cr : s.star(w)) {
      if (in_tree[cr.q]) continue;
      int o = s.vertex(cr.q, cr.c + 2);
      if (wseen[o]) continue;
      wseen[o] = 1;
      in_cotree[cr.q] = 1;
      queue.push_back(o);
    }
  }

  auto root_path = [&](int b) {
    std::vector<std::pair<int, int>> p;
    while (b != h.base_black) {
      p.push_back({parent_q[b], parent_dir[b]});
      b = s.vertex(parent_q[b], parent_dir[b] > 0 ? kBm : kBp);
    }
    std::reverse(p.begin(), p.end());
    return p;
  };

  std::vector<MedialWalk> gens;
  std::vector<Cycle> gcycles;
  for (int q = 0; q < F; ++q) {
    if (in_tree[q] || in_cotree[q]) continue;
    auto path = root_path(s.vertex(q, kBm));
    path.push_back({q, +1});
    auto back = root_path(s.vertex(q, kBp));
    for (auto it = back.rbegin(); it != back.rend(); ++it) path.push_back({it->first, -it->second});
    Cycle c;
    c.walk = wb.walk(base, path);
    c.chains = black_white(s, c.walk);
    gens.push_back(c.walk);
    gcycles.push_back(c);
  }
  if (static_cast<int>(gens.size()) != 2 * h.genus)
    throw Error("homology", "tree-cotree produced " + std::to_string(gens.size()) +
                                " generators for genus " + std::to_string(h.genus));

  std::vector<const Cycle*> ptrs;
  for (auto& c : gcycles) ptrs.push_back(&c);
  auto M = intersection_matrix(ptrs);
  auto pairs = symplectic_reduce(M);
  for (int k = 0; k < h.genus; ++k) {
    Cycle a, b;
    a.walk = combine(gens, pairs[k].first);
    b.walk = combine(gens, pairs[k].second);
    a.chains = black_white(s, a.walk);
    b.chains = black_white(s, b.walk);
    a.tag = 'a';
    b.tag = 'b';
    a.index = b.index = k;
    h.a.push_back(a);
    h.b.push_back(b);
  }
  std::vector<const Cycle*> all;
  for (auto& c : h.a) all.push_back(&c);
  for (auto& c : h.b) all.push_back(&c);
  h.intersection = intersection_matrix(all);
  return h;
}

HomologyBasis transform_basis(const Surface& s, const HomologyBasis& h, const IntMat& A,
                              const IntMat& B, const IntMat& C, const IntMat& D) {
  const int g = h.genus;
  HomologyBasis out = h;
  auto build = [&](const IntMat& X, const IntMat& Y, int k, char tag) {
    MedialWalk w;
    for (int j = 0; j < g; ++j) {
      for (int pass = 0; pass < 2; ++pass) {
        int coef = pass == 0 ? X[k][j] : Y[k][j];
        const MedialWalk& src = pass == 0 ? h.a[j].walk : h.b[j].walk;
        MedialWalk piece = coef >= 0 ? src : reversed(src);
        for (int t = 0; t < std::abs(coef); ++t) w.insert(w.end(), piece.begin(), piece.end());
      }
    }
    Cycle c;
    c.walk = cancel_backtracks(w);
    c.chains = black_white(s, c.walk);
    c.tag = tag;
    c.index = k;
    return c;
  };
  for (int k = 0; k < g; ++k) {
    out.a[k] = build(A, B, k, 'a');
    out.b[k] = build(C, D, k, 'b');
  }
  std::vector<const Cycle*> all;
  for (auto& c : out.a) all.push_back(&c);
  for (auto& c : out.b) all.push_back(&c);
  out.intersection = intersection_matrix(all);
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) {
      int want = (i < g && j == i + g) ? 1 : (j < g && i == j + g) ? -1 : 0;
      if (out.intersection[i][j] != want) throw Error("homology", "basis change is not symplectic");
    }
  return out;
}

cplx walk_integral(const DiamondForm& w, const MedialWalk& walk) {
  cplx sum = 0.0;
  for (auto st : walk) sum += static_cast<double>(st.dir) * edge_value(w, st.q, st.c);
  return sum;
}

cplx black_integral(const DiamondForm& w, const std::vector<int>& chain) {
  cplx sum = 0.0;
  for (std::size_t q = 0; q < chain.size(); ++q)
    if (chain[q]) sum += static_cast<double>(chain[q]) * w.black[q];
  return 2.0 * sum;
}

cplx white_integral(const DiamondForm& w, const std::vector<int>& chain) {
  cplx sum = 0.0;
  for (std::size_t q = 0; q < chain.size(); ++q)
    if (chain[q]) sum += static_cast<double>(chain[q]) * w.white[q];
  return 2.0 * sum;
}

PeriodReport periods(const Surface& s, const DiamondForm& w, const HomologyBasis& h,
                     double tol) {
  double worst = 0.0, scale = 1.0;
  for (int q = 0; q < s.num_quads(); ++q)
    scale = std::max({scale, std::abs(w.black[q]), std::abs(w.white[q])});
  for (int v = 0; v < s.num_vertices(); ++v)
    worst = std::max(worst, std::abs(vertex_circulation(s, w, v)));
  if (worst > tol * scale) {
    std::ostringstream os;
    os << "form is not closed: max vertex-face residual " << worst;
    throw Error("not-closed", os.str());
  }
  PeriodReport r;
  for (int k = 0; k < h.genus; ++k) {
    r.A.push_back(walk_integral(w, h.a[k].walk));
    r.B.push_back(walk_integral(w, h.b[k].walk));
    r.AB.push_back(black_integral(w, h.a[k].chains.black));
    r.AW.push_back(white_integral(w, h.a[k].chains.white));
    r.BB.push_back(black_integral(w, h.b[k].chains.black));
    r.BW.push_back(white_integral(w, h.b[k].chains.white));
  }
  return r;
}

double verify_rbi(const Surface& s, const DiamondForm& w1, const DiamondForm& w2,
                  const HomologyBasis& h) {
  PeriodReport p = periods(s, w1, h), q = periods(s, w2, h);
  cplx rhs = 0.0;
  for (int k = 0; k < h.genus; ++k) {
    rhs += 0.5 * (p.AB[k] * q.BW[k] - p.BB[k] * q.AW[k]);
    rhs += 0.5 * (p.AW[k] * q.BB[k] - p.BW[k] * q.AB[k]);
  }
  return std::abs(integral(wedge(s, w1, w2)) - rhs);
}

int path_end(const Surface& s, const GraphPath& p) {
  const int lo = p.color == Color::black ? kBm : kWm;
  int v = p.start;
  for (auto [q, d] : p.steps) {
    int from = s.vertex(q, d > 0 ? lo : lo + 2), to = s.vertex(q, d > 0 ? lo + 2 : lo);
    if (from != v) throw Error("bad-path", "graph path is not connected at quad " + std::to_string(q));
    v = to;
  }
  return v;
}

cplx integrate_graph_path(const Surface& s, const DiamondForm& w, const GraphPath& p) {
  if (p.start >= 0 && s.is_black(p.start) != (p.color == Color::black))
    throw Error("bad-path", "path start has the wrong color");
  path_end(s, p);
  cplx sum = 0.0;
  for (auto [q, d] : p.steps)
    sum += static_cast<double>(d) * (p.color == Color::black ? w.black[q] : w.white[q]);
  return 2.0 * sum;
}

std::optional<GraphPath> graph_path(const Surface& s, int from, int to,
                                    const std::vector<char>* blocked) {
  const Color col = s.is_black(from) ? Color::black : Color::white;
  if (s.is_black(to) != s.is_black(from)) throw Error("bad-path", "endpoints differ in color");
  const int lo = col == Color::black ? kBm : kWm;
  std::vector<int> pq(s.num_vertices(), -1), pd(s.num_vertices(), 0), seen(s.num_vertices(), 0);
  std::deque<int> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (auto cr : s.star(v)) {
      if (blocked && (*blocked)[cr.q]) continue;
      int o = s.vertex(cr.q, cr.c + 2);
      if (seen[o]) continue;
      seen[o] = 1;
      pq[o] = cr.q;
      pd[o] = cr.c == lo ? +1 : -1;
      queue.push_back(o);
    }
  }
  if (!seen[to]) return std::nullopt;
  GraphPath p{col, from, {}};
  for (int v = to; v != from;) {
    p.steps.push_back({pq[v], pd[v]});
    v = s.vertex(pq[v], pd[v] > 0 ? lo : lo + 2);
  }
  std::reverse(p.steps.begin(), p.steps.end());
  return p;
}

std::vector<char> crossed_quads(const Surface& s, const HomologyBasis& h, Color diag) {
  std::vector<char> out(s.num_quads(), 0);
  // A medial edge at a black corner runs parallel to the white diagonal and
  // therefore crosses the black one, and vice versa.
  const int parity = diag == Color::black ? 0 : 1;
  for (int i = 0; i < 2 * h.genus; ++i)
    for (auto st : h.cycle(i).walk)
      if ((st.c & 1) == parity) out[st.q] = 1;
  return out;
}

MedialWalk vertex_loop(const Surface& s, int q, int side) {
  MedialWalk w;
  int v = s.vertex(q, side);
  const std::size_t k = s.star(v).size();
  int cq = q, cc = side & 3;
  for (std::size_t t = 0; t < k; ++t) {
    w.push_back({cq, cc, -1});
    CornerRef n = s.across(cq, cc + 3);
    cq = n.q;
    cc = n.c;
  }
  return w;
}

MedialWalk quad_loop(int q, int side) {
  MedialWalk w;
  for (int t = 1; t <= 4; ++t) w.push_back({q, (side + t) & 3, +1});
  return w;
}

}  // namespace drs
