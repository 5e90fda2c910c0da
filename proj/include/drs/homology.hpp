#pragma once

#include <optional>
#include <vector>

#include "drs/calculus.hpp"
#include "drs/core.hpp"

namespace drs {

// Medial edge at corner c of quad q; dir = +1 follows the ccw boundary of F_Q.
struct MedialStep {
  int q = 0, c = 0, dir = 1;
  bool operator==(const MedialStep&) const = default;
};
using MedialWalk = std::vector<MedialStep>;

// Medial vertex (edge class) at the start / end of a step.
int step_from(const Surface& s, MedialStep st);
int step_to(const Surface& s, MedialStep st);
bool is_closed_walk(const Surface& s, const MedialWalk& w);
MedialWalk reversed(const MedialWalk& w);
// Removes immediate back-and-forth pairs.
MedialWalk cancel_backtracks(MedialWalk w);

// Signed quad coefficients: black[q] counts b- -> b+ traversals of the black
// diagonal of q, white[q] the w- -> w+ traversals of the white diagonal.
struct BlackWhiteChains {
  std::vector<int> black, white;
};

BlackWhiteChains black_white(const Surface& s, const MedialWalk& w);
// Boundary of the chain on Γ (resp. Γ*) as a vertex-indexed vector.
std::vector<int> chain_boundary(const Surface& s, const std::vector<int>& chain, Color color);

struct Cycle {
  MedialWalk walk;
  BlackWhiteChains chains;
  char tag = 'a';  // 'a' or 'b'
  int index = 0;
};

struct HomologyBasis {
  int genus = 0;
  int base_point = -1;    // medial vertex shared by all walks
  int base_black = -1;    // black endpoint of the base edge
  std::vector<Cycle> a, b;
  std::vector<std::vector<int>> intersection;  // over (a_1..a_g, b_1..b_g)

  const Cycle& cycle(int i) const { return i < genus ? a[i] : b[i - genus]; }
};

HomologyBasis homology_basis(const Surface& s);

int intersection_number(const BlackWhiteChains& x, const BlackWhiteChains& y);
std::vector<std::vector<int>> intersection_matrix(const std::vector<const Cycle*>& cycles);

// New basis a' = A a + B b, b' = C a + D b (integer g x g blocks, rows index
// the new cycles). The map must be symplectic.
using IntMat = std::vector<std::vector<int>>;
HomologyBasis transform_basis(const Surface& s, const HomologyBasis& h, const IntMat& A,
                              const IntMat& B, const IntMat& C, const IntMat& D);

cplx walk_integral(const DiamondForm& w, const MedialWalk& walk);
cplx black_integral(const DiamondForm& w, const std::vector<int>& chain);  // 2 sum
cplx white_integral(const DiamondForm& w, const std::vector<int>& chain);

struct PeriodReport {
  std::vector<cplx> A, B, AB, AW, BB, BW;  // by k
};

// Throws Error("not-closed") if ω is not closed at some vertex.
PeriodReport periods(const Surface& s, const DiamondForm& w, const HomologyBasis& h,
                     double tol = 1e-9);

double verify_rbi(const Surface& s, const DiamondForm& w1, const DiamondForm& w2,
                  const HomologyBasis& h);

// Path on Γ (black) or Γ* (white): consecutive diagonals, dir = +1 runs from
// the minus to the plus vertex.
struct GraphPath {
  Color color = Color::black;
  int start = -1;
  std::vector<std::pair<int, int>> steps;  // (quad, dir)
};

int path_end(const Surface& s, const GraphPath& p);
cplx integrate_graph_path(const Surface& s, const DiamondForm& w, const GraphPath& p);
// Shortest path between two vertices of one color, optionally avoiding quads.
std::optional<GraphPath> graph_path(const Surface& s, int from, int to,
                                    const std::vector<char>* blocked = nullptr);
// Quads whose diagonal of the given color is crossed by some basis walk.
std::vector<char> crossed_quads(const Surface& s, const HomologyBasis& h, Color diag);

// Closed walk around F_v (resp. F_Q) starting at the medial vertex on side
// `side` of quad q; used to reroute cycles inside their homology class.
MedialWalk vertex_loop(const Surface& s, int q, int side);
MedialWalk quad_loop(int q, int side);

}  // namespace drs
