#include "drs/abel_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace drs {

namespace {

const cplx I(0, 1);

la::Vec zeros(int g) { return la::Vec::Zero(g); }

}  // namespace

la::Mat Lattice::generators() const {
  const int g = genus();
  la::Mat gen(g, 2 * g);
  gen << la::Mat::Identity(g, g), pi;
  return gen;
}

Reduction reduce(const Lattice& l, const la::Vec& v) {
  const int g = l.genus();
  const la::Mat gen = l.generators();
  Eigen::MatrixXd real(2 * g, 2 * g);
  real << gen.real(), gen.imag();
  Eigen::VectorXd rhs(2 * g);
  rhs << v.real(), v.imag();
  Eigen::VectorXd t = real.fullPivLu().solve(rhs);
  Reduction r;
  r.m.resize(g);
  r.n.resize(g);
  la::Vec k(2 * g);
  for (int i = 0; i < 2 * g; ++i) {
    long ki = std::lround(t(i));
    (i < g ? r.m[i] : r.n[i - g]) = ki;
    k(i) = static_cast<double>(ki);
    r.max_frac = std::max(r.max_frac, std::abs(t(i) - static_cast<double>(ki)));
  }
  r.rep = v - gen * k;
  return r;
}

bool lattice_equal(const Lattice& l, const la::Vec& a, const la::Vec& b, double tol) {
  return reduce(l, a - b).rep.norm() < tol;
}

Jacobians jacobians(const PeriodMatrices& pm) {
  // Column j of each generator block is the b_j-period vector of ω_1..ω_g.
  // Π is symmetric; Π^B and Π^W in general are not, hence the transposes.
  return {{pm.pi, 'L'}, {(pm.bw + pm.bb).transpose(), 'B'}, {(pm.ww + pm.wb).transpose(), 'W'}};
}

AbelJacobi::AbelJacobi(const Surface& s, const HomologyBasis& h, std::vector<DiamondForm> canonical,
                       const PeriodMatrices& pm)
    : s_(s), h_(h), w_(std::move(canonical)), jac_(jacobians(pm)) {}

la::Vec AbelJacobi::half_diagonal(int q, int v) const {
  la::Vec out = zeros(genus());
  int corner = -1;
  for (int c = 0; c < 4; ++c)
    if (s_.vertex(q, c) == v) corner = c;
  if (corner < 0) throw Error("id", "vertex " + std::to_string(v) + " is not a corner of quad " + std::to_string(q));
  const double sign = corner >= 2 ? 1.0 : -1.0;
  for (int k = 0; k < genus(); ++k)
    out(k) = sign * ((corner & 1) ? w_[k].white[q] : w_[k].black[q]);
  return out;
}

la::Vec AbelJacobi::chain_integral(const std::vector<int>& chain, Color color) const {
  la::Vec out = zeros(genus());
  for (int k = 0; k < genus(); ++k)
    out(k) = color == Color::black ? black_integral(w_[k], chain) : white_integral(w_[k], chain);
  return out;
}

std::vector<int> graph_path_chain(const Surface& s, const GraphPath& p) {
  std::vector<int> chain(s.num_quads());
  for (auto [q, d] : p.steps) chain[q] += d;
  return chain;
}

namespace {

AJValue vertex_map(const Surface& s, const AbelJacobi& aj, int base_q, int v, Color col) {
  if (s.is_black(v) != (col == Color::black))
    throw Error("color-mismatch", "vertex " + std::to_string(v) + " has the wrong color for this map");
  int b = s.vertex(base_q, col == Color::black ? kBm : kWm);
  auto path = graph_path(s, b, v);
  if (!path) throw Error("disconnected", "no path to vertex " + std::to_string(v));
  AJValue r;
  r.value = aj.half_diagonal(base_q, b) + aj.chain_integral(graph_path_chain(s, *path), col);
  r.lattice = col == Color::black ? 'B' : 'W';
  return r;
}

}  // namespace

AJValue AbelJacobi::black(int base_q, int v) const { return vertex_map(s_, *this, base_q, v, Color::black); }
AJValue AbelJacobi::white(int base_q, int v) const { return vertex_map(s_, *this, base_q, v, Color::white); }

AJValue AbelJacobi::black_quad(int base_q, int q) const {
  int b = s_.vertex(q, kBm);
  AJValue r = black(base_q, b);
  r.value -= half_diagonal(q, b);
  return r;
}

AJValue AbelJacobi::white_quad(int base_q, int q) const {
  int w = s_.vertex(q, kWm);
  AJValue r = white(base_q, w);
  r.value -= half_diagonal(q, w);
  return r;
}

AbelJacobi::QuadValue AbelJacobi::quad(int base_q, int q) const {
  const int g = genus();
  const int E = s_.num_edges();
  // BFS over medial vertices from side 0 of base_q to any side of q.
  std::vector<MedialStep> via(E);
  std::vector<char> seen(E, 0);
  std::vector<int> target_side(E, -1);
  for (int sd = 3; sd >= 0; --sd) target_side[s_.edge_of(q, sd)] = sd;
  const int x = s_.edge_of(base_q, 0);
  std::deque<int> queue{x};
  seen[x] = 1;
  int hit = -1;
  // Steps leaving each medial vertex.
  std::vector<std::vector<MedialStep>> out(E);
  for (int f = 0; f < s_.num_quads(); ++f)
    for (int c = 0; c < 4; ++c)
      for (int dir : {+1, -1}) {
        MedialStep st{f, c, dir};
        out[step_from(s_, st)].push_back(st);
      }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (target_side[u] >= 0) {
      hit = u;
      break;
    }
    for (auto st : out[u]) {
      int t = step_to(s_, st);
      if (seen[t]) continue;
      seen[t] = 1;
      via[t] = st;
      queue.push_back(t);
    }
  }
  if (hit < 0) throw Error("disconnected", "no medial path between the quads");
  QuadValue r;
  for (int u = hit; u != x;) {
    r.path.push_back(via[u]);
    u = step_from(s_, via[u]);
  }
  std::reverse(r.path.begin(), r.path.end());

  const int sd0 = 0, sd1 = target_side[hit];
  auto start_piece = [&](int f, int sd) {
    la::Vec v = zeros(g);
    for (int k = 0; k < g; ++k) v(k) = (edge_value(w_[k], f, sd) - edge_value(w_[k], f, sd + 1)) / 2.0;
    return v;
  };
  la::Vec along = zeros(g);
  for (int k = 0; k < g; ++k) along(k) = walk_integral(w_[k], r.path);
  r.value = start_piece(base_q, sd0) + along - start_piece(q, sd1);

  // Projections of the same path onto Γ and Γ*.
  auto endpoint = [&](int f, int sd, bool want_black) {
    int a = s_.vertex(f, sd), b = s_.vertex(f, sd + 1);
    return s_.is_black(a) == want_black ? a : b;
  };
  const BlackWhiteChains ch = black_white(s_, r.path);
  const int b0 = endpoint(base_q, sd0, true), b1 = endpoint(q, sd1, true);
  const int w0 = endpoint(base_q, sd0, false), w1 = endpoint(q, sd1, false);
  r.black = half_diagonal(base_q, b0) + chain_integral(ch.black, Color::black) - half_diagonal(q, b1);
  r.white = half_diagonal(base_q, w0) + chain_integral(ch.white, Color::white) - half_diagonal(q, w1);
  r.splitting_residual = (2.0 * r.value - r.black - r.white).cwiseAbs().maxCoeff();
  if (g == 0) r.splitting_residual = 0;
  return r;
}

double AbelJacobi::cr_residual(int base_q) const {
  const int g = genus(), V = s_.num_vertices(), F = s_.num_quads();
  if (g == 0) return 0.0;
  // Spanning trees of Γ and Γ* with values along the tree paths.
  std::vector<int> parent_q(V, -1), parent_d(V, 0);
  std::vector<la::Vec> value(V);
  for (Color col : {Color::black, Color::white}) {
    const int lo = col == Color::black ? kBm : kWm;
    const int root = s_.vertex(base_q, lo);
    value[root] = half_diagonal(base_q, root);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto cr : s_.star(v)) {
        int o = s_.vertex(cr.q, cr.c + 2);
        if (o == root || parent_q[o] >= 0) continue;
        parent_q[o] = cr.q;
        parent_d[o] = cr.c == lo ? +1 : -1;
        la::Vec step(g);
        for (int k = 0; k < g; ++k)
          step(k) = 2.0 * parent_d[o] * (col == Color::black ? w_[k].black[cr.q] : w_[k].white[cr.q]);
        value[o] = value[v] + step;
        queue.push_back(o);
      }
    }
  }
  for (int v = 0; v < V; ++v)
    if (value[v].size() == 0) throw Error("disconnected", "vertex " + std::to_string(v) + " is unreachable");

  auto add_tree_path = [&](std::vector<int>& chain, int v, int sign) {
    for (; parent_q[v] >= 0;) {
      int q = parent_q[v];
      chain[q] += sign * parent_d[v];
      int lo = s_.is_black(v) ? kBm : kWm;
      v = s_.vertex(q, parent_d[v] > 0 ? lo : lo + 2);
    }
  };
  // Lattice vector picked up by a closed chain, from its intersection numbers
  // with the basis; black chains pair with white projections and vice versa.
  auto loop_period = [&](const std::vector<int>& chain, Color col) {
    const la::Mat& pi = col == Color::black ? jac_.black.pi : jac_.white.pi;
    la::Vec out = zeros(g);
    for (int j = 0; j < g; ++j) {
      long dot_a = 0, dot_b = 0;  // chain . a_j, chain . b_j
      for (int q = 0; q < F; ++q) {
        if (col == Color::black) {
          dot_a += chain[q] * h_.a[j].chains.white[q];
          dot_b += chain[q] * h_.b[j].chains.white[q];
        } else {
          dot_a -= h_.a[j].chains.black[q] * chain[q];
          dot_b -= h_.b[j].chains.black[q] * chain[q];
        }
      }
      // [chain] = sum_j (chain . b_j) a_j - (chain . a_j) b_j
      for (int k = 0; k < g; ++k) out(k) += double(dot_b) * (j == k ? 1.0 : 0.0) - double(dot_a) * pi(k, j);
    }
    return out;
  };

  double worst = 0.0;
  for (int q = 0; q < F; ++q) {
    la::Vec delta[2];
    for (Color col : {Color::black, Color::white}) {
      const int lo = col == Color::black ? kBm : kWm;
      const int vm = s_.vertex(q, lo), vp = s_.vertex(q, lo + 2);
      std::vector<int> loop(F, 0);
      add_tree_path(loop, vm, +1);
      loop[q] += 1;
      add_tree_path(loop, vp, -1);
      // Tree values differ from the lifted ones by the period of the loop.
      delta[col == Color::black ? 0 : 1] = value[vp] - value[vm] + loop_period(loop, col);
    }
    const cplx rho = s_.rho(q);
    for (int k = 0; k < g; ++k) {
      double scale = std::max({1.0, std::abs(delta[0](k)), std::abs(delta[1](k))});
      worst = std::max(worst, std::abs(delta[1](k) - I * rho * delta[0](k)) / scale);
    }
  }
  return worst;
}

std::vector<int> AbelJacobi::common_zeros(double tol) const {
  std::vector<int> out;
  for (int q = 0; q < s_.num_quads(); ++q) {
    bool all = true;
    for (auto& w : w_) all = all && std::abs(w.black[q]) < tol && std::abs(w.white[q]) < tol;
    if (all) out.push_back(q);
  }
  return out;
}

}  // namespace drs
