#include "drs/generators.hpp"

#include <array>
#include <map>
#include <random>

namespace drs {

QuadComplex gen_torus(int m, int n, cplx tau, TorusGrid* grid) {
  if (m < 2 || n < 2) throw Error("bad-argument", "torus grid needs m, n >= 2");
  if (m % 2 || n % 2) throw Error("non-bipartite", "torus grid dimensions must be even");
  if (!(tau.imag() > 0)) throw Error("bad-argument", "Im tau must be positive");

  auto pos = [&](int j, int k) { return double(j) / m + double(k) / n * tau; };
  auto id = [&](int j, int k) { return ((k % n + n) % n) * m + ((j % m + m) % m); };
  // Grid edges: 2*id(j,k) runs (j,k)->(j+1,k), 2*id(j,k)+1 runs (j,k)->(j,k+1).
  auto hor = [&](int j, int k) { return 2 * id(j, k); };
  auto ver = [&](int j, int k) { return 2 * id(j, k) + 1; };

  QuadComplex c;
  c.color.resize(m * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < m; ++j)
      c.color[id(j, k)] = (j + k) % 2 == 0 ? Color::black : Color::white;
  if (grid) {
    grid->m = m;
    grid->n = n;
    grid->tau = tau;
    grid->z.resize(m * n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < m; ++j) grid->z[id(j, k)] = pos(j, k);
    grid->black_diag.clear();
  }
  const bool labels = m == 2 || n == 2;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < m; ++j) {
      std::array<std::array<int, 2>, 4> corner;
      std::array<int, 4> side;
      if ((j + k) % 2 == 0) {
        corner = {{{j, k}, {j + 1, k}, {j + 1, k + 1}, {j, k + 1}}};
        side = {hor(j, k), ver(j + 1, k), hor(j, k + 1), ver(j, k)};
      } else {
        corner = {{{j + 1, k}, {j + 1, k + 1}, {j, k + 1}, {j, k}}};
        side = {ver(j + 1, k), hor(j, k + 1), ver(j, k), hor(j, k)};
      }
      std::array<int, 4> q;
      std::array<cplx, 4> z;
      for (int t = 0; t < 4; ++t) {
        q[t] = id(corner[t][0], corner[t][1]);
        z[t] = pos(corner[t][0], corner[t][1]);
      }
      c.quads.push_back(q);
      c.rho.push_back(cplx(0, -1) * (z[kWp] - z[kWm]) / (z[kBp] - z[kBm]));
      if (labels) c.side_edge.push_back(side);
      if (grid) grid->black_diag.push_back(z[kBp] - z[kBm]);
    }
  return c;
}

QuadComplex gen_cube(int n) {
  if (n < 1) throw Error("bad-argument", "cube size must be positive");
  using P = std::array<int, 3>;
  auto on_surface = [&](const P& p) {
    for (int a : p)
      if (a == 0 || a == n) return true;
    return false;
  };
  std::map<P, int> ids;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      for (int z = 0; z <= n; ++z)
        if (on_surface({x, y, z})) ids.emplace(P{x, y, z}, 0);
  QuadComplex c;
  for (auto& [p, id] : ids) {
    id = c.num_vertices();
    c.color.push_back((p[0] + p[1] + p[2]) % 2 == 0 ? Color::black : Color::white);
  }
  // (fixed axis, fixed value, u axis, v axis) with u x v the outward normal.
  const int frames[6][4] = {{0, 0, 2, 1}, {0, n, 1, 2}, {1, 0, 0, 2},
                            {1, n, 2, 0}, {2, 0, 1, 0}, {2, n, 0, 1}};
  for (const auto& f : frames) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        P p{};
        p[f[0]] = f[1];
        p[f[2]] = i;
        p[f[3]] = j;
        P pu = p, puv = p, pv = p;
        pu[f[2]] += 1;
        puv[f[2]] += 1;
        puv[f[3]] += 1;
        pv[f[3]] += 1;
        int a = ids.at(p), b = ids.at(pu), cc = ids.at(puv), d = ids.at(pv);
        if (c.is_black(a))
          c.quads.push_back({a, b, cc, d});
        else
          c.quads.push_back({b, cc, d, a});
        c.rho.push_back(1.0);
      }
  }
  return c;
}

QuadComplex gen_pillow() {
  QuadComplex c;
  c.color = {Color::black, Color::white, Color::black, Color::white};
  c.quads = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  c.rho = {1.0, 1.0};
  return c;
}

void randomize_rho(QuadComplex& c, std::uint64_t seed, double re_lo, double re_hi,
                   double im_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(-im_max, im_max);
  for (auto& r : c.rho) r = cplx(re(rng), im(rng));
}

}  // namespace drs
