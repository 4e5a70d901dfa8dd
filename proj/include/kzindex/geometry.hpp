#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kzindex/origami.hpp"
#include "kzindex/rational.hpp"
#include "kzindex/sl2.hpp"

namespace kz {

// Primitive integer direction, stored with q > 0, or q == 0 and p > 0.
struct Direction {
  int p = 1;
  int q = 0;

  // Normalises sign; throws InvalidDirection for (0,0) or non-primitive input.
  static Direction make(int p, int q);

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;
};

std::int64_t determinant(const Direction& u, const Direction& w);

struct SurfacePoint {
  int square = 0;
  Vec2 pos;

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

// Straight piece of a curve inside the closed unit square `square`.
struct Segment {
  int square = 0;
  Vec2 entry;
  Vec2 exit;
};

// Where a core curve came from: bottom row square of the cylinder in the
// sheared frame and the height of the curve inside that row. Used to move a
// core curve inside its cylinder when an intersection count is degenerate.
struct CoreAnchor {
  int sheared_square = 0;
  Rational height{1, 2};
};

struct GeodesicLoop {
  Direction dir;
  std::vector<Segment> segments;
  std::optional<CoreAnchor> anchor;

  // Sum of segment displacements.
  Vec2 holonomy() const;
};

struct SaddleConnection {
  SurfacePoint start;
  std::vector<Segment> segments;
  std::int64_t multiple = 0;  // holonomy == multiple * (p, q)
  int start_vertex = -1;      // index into the cone points
  int start_turn = -1;        // square whose lower-left sector holds the outgoing end
  int end_vertex = -1;
  int end_turn = -1;
  int cylinder_above = -1;    // filled by decompose()
  int cylinder_below = -1;
};

struct Cylinder {
  // Rows in the sheared frame, bottom to top, vertically aligned. Square ids
  // refer to the sheared origami.
  std::vector<std::vector<int>> rows;
  int circumference = 0;
  int height_rows = 0;
  int f = 0;  // combinatorial length
  int c = 0;  // combinatorial height
  GeodesicLoop core;
};

struct CylinderDecomposition {
  Direction direction;
  Mat2 shear;
  Origami sheared;
  std::vector<Cylinder> cylinders;
  std::vector<SaddleConnection> saddle_connections;
};

struct EdgeEnd {
  int edge = 0;
  bool outgoing = true;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct SeparatrixVertex {
  int cone_order = 0;
  std::vector<int> turns;            // squares in counter-clockwise order
  std::vector<EdgeEnd> cyclic_order;  // counter-clockwise
};

struct SeparatrixDiagram {
  Direction direction;
  std::vector<SeparatrixVertex> vertices;
  std::vector<SaddleConnection> edges;
};

// Maps points of act(m, o) back to o along the affine map with derivative m.
class ShearedFrame {
 public:
  ShearedFrame(const Origami& o, const Mat2& m);

  const Origami& original() const { return original_; }
  const Origami& sheared() const { return sheared_; }
  const Mat2& matrix() const { return matrix_; }

  SurfacePoint pull_back(SurfacePoint p) const;

 private:
  struct Step {
    bool is_t = false;
    std::int64_t t_power = 0;
    Letter s_letter = Letter::S;
    Origami before;
  };
  Origami original_;
  Origami sheared_;
  Mat2 matrix_;
  std::vector<Step> steps_;  // in order of application to the original
};

Mat2 shear_matrix(const Direction& dir);

CylinderDecomposition horizontal_decomposition(const Origami& o);
CylinderDecomposition decompose(const Origami& o, const Direction& dir);

// Closed geodesic in direction dir through p. Throws DegenerateConfiguration
// if the line runs into a cone point.
GeodesicLoop trace_loop(const Origami& o, SurfacePoint p, const Direction& dir);

// Core curve of the cylinder whose bottom row contains `sheared_square`,
// at `height` inside that row.
GeodesicLoop core_curve(const Origami& o, const Direction& dir, int sheared_square,
                        Rational height = Rational(1, 2));

std::vector<SaddleConnection> saddle_connections(const Origami& o, const Direction& dir);

// Separatrices traced directly on o, without the shear reduction.
std::vector<SaddleConnection> trace_separatrices(const Origami& o, const Direction& dir);

SeparatrixDiagram separatrix_diagram(const Origami& o, const Direction& dir);

// Orbits of "follow the edge to its end, then take the next edge end
// counter-clockwise at that vertex". Each orbit is the upper boundary of one
// cylinder, i.e. the cylinder lying to the right of the edges.
std::vector<std::vector<int>> trace_boundaries(const SeparatrixDiagram& diag);

// Points over the (1/|q|, 1/|p|) grid of the torus (1 in place of a zero
// component): for every square the grid points with coordinates in [0,1)^2,
// so d*|p|*|q| entries. Corners shared by several squares repeat.
std::vector<SurfacePoint> lattice_points(const Origami& o, const Direction& dir);

// Whether the point lies on the segment list (cone points count as lying on
// every saddle connection that ends there).
bool lies_on(const Origami& o, const SurfacePoint& p, const std::vector<Segment>& segments);

// Vertices are the cycles of corner_permutation, which steps
// counter-clockwise through the squares sharing a lower-left corner.
struct VertexData {
  std::vector<int> vertex_of_square;    // vertex at the lower-left corner
  std::vector<std::vector<int>> turns;  // per vertex, counter-clockwise
  std::vector<int> cone_index;          // per vertex, -1 for regular points
  int cone_count = 0;
};
VertexData vertex_data(const Origami& o);

}  // namespace kz
