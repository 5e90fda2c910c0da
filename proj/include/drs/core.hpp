#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace drs {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class Color : std::uint8_t { black, white };

// Thrown for malformed input and for violated preconditions. `kind` is a short
// machine-readable tag ("malformed-surface", "non-bipartite", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Corner c of a quad: 0 = b-, 1 = w-, 2 = b+, 3 = w+ (counterclockwise).
// Side s joins corner s to corner s+1.
enum Corner : int { kBm = 0, kWm = 1, kBp = 2, kWp = 3 };

struct QuadComplex {
  std::vector<Color> color;                 // indexed by vertex id
  std::vector<std::array<int, 4>> quads;    // (b-, w-, b+, w+) by quad id
  std::vector<cplx> rho;                    // by quad id
  // Optional explicit edge labels per side. Only needed when two quads are
  // glued along several edges with the same endpoints (multigraphs), where
  // matching sides by vertex pairs would be ambiguous.
  std::vector<std::array<int, 4>> side_edge;

  int num_vertices() const { return static_cast<int>(color.size()); }
  int num_quads() const { return static_cast<int>(quads.size()); }
  bool is_black(int v) const { return color[v] == Color::black; }
};

struct Issue {
  std::string kind;  // bipartite, degenerate-quad, unmatched-side, orientation,
                     // non-manifold-vertex, disconnected, rho-positivity,
                     // strong-regularity, id
  std::vector<int> ids;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;
  bool ok() const { return issues.empty(); }
  // Everything except strong regularity prevents building a Surface.
  bool fatal() const;
  std::string summary() const;
};

ValidationReport validate(const QuadComplex& c);

struct CornerRef {
  int q = -1;
  int c = -1;
  bool operator==(const CornerRef&) const = default;
};

// A complex together with its gluing data. All numerical algorithms work on
// Surface; construction throws Error when validate() reports a fatal issue.
class Surface {
 public:
  explicit Surface(QuadComplex c);

  const QuadComplex& complex() const { return c_; }
  int num_vertices() const { return c_.num_vertices(); }
  int num_quads() const { return c_.num_quads(); }
  int num_edges() const { return 2 * c_.num_quads(); }
  int genus() const { return genus_; }
  bool is_black(int v) const { return c_.is_black(v); }
  cplx rho(int q) const { return c_.rho[q]; }
  int vertex(int q, int corner) const { return c_.quads[q][corner & 3]; }

  // Side across side s of q, as (q', s').
  CornerRef across(int q, int s) const { return adj_[q][s & 3]; }
  // Edge class (= medial vertex) of side s of q.
  int edge_of(int q, int s) const { return edge_[q][s & 3]; }
  // Corners at v in counterclockwise order around v.
  const std::vector<CornerRef>& star(int v) const { return star_[v]; }
  const ValidationReport& report() const { return report_; }

 private:
  QuadComplex c_;
  ValidationReport report_;
  std::vector<std::array<CornerRef, 4>> adj_;
  std::vector<std::array<int, 4>> edge_;
  std::vector<std::vector<CornerRef>> star_;
  int genus_ = 0;
};

// 2 - 2g = |V| - |F|.
int genus(const QuadComplex& c);

struct QuadChart {
  int quad = -1;
  std::array<cplx, 4> z;  // positions of b-, w-, b+, w+
  double phi = 0.0;
};

QuadChart quad_chart(const QuadComplex& c, int q);
double intersection_angle(cplx rho);

struct VertexChart {
  int vertex = -1;
  std::vector<CornerRef> star;               // ccw
  std::vector<std::array<cplx, 4>> z;        // per star quad, by corner
  std::vector<double> angle;                 // interior angle at the center
};

VertexChart vertex_chart(const Surface& s, int v);

struct MedialGraph {
  int num_vertices = 0;                      // edge midpoints of the complex
  // Medial edge e = 4q + c sits at corner c of q; from/to in F_Q ccw order.
  std::vector<std::array<int, 2>> ends;
  std::vector<Color> edge_color;             // black if parallel to a black diagonal
  std::vector<std::vector<std::pair<int, int>>> faces;  // (edge, sign); V faces then F faces
  int num_vertex_faces = 0;
};

MedialGraph medial_graph(const Surface& s);

inline Color medial_edge_color(int corner) {
  return (corner & 1) ? Color::black : Color::white;
}

// Splits every quad into 3x3 quads using the affine image of the normalized
// chart. Provenance of new vertices is kept so maps can be lifted.
struct Subdivision {
  QuadComplex complex;
  struct Origin {
    enum Kind { old_vertex, side_point, interior } kind;
    int a = -1, b = -1, c = -1;  // vertex | (q, s, t) | (q, i, j)
  };
  std::vector<Origin> origin;
  // Per old quad, new vertex ids on the 4x4 grid, index 4*i + j with i along
  // b- -> w- and j along b- -> w+.
  std::vector<std::array<int, 16>> grid;
};

Subdivision subdivide3(const Surface& s);

}  // namespace drs
