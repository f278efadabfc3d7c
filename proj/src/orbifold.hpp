#ifndef SNAKECALC_ORBIFOLD_HPP
#define SNAKECALC_ORBIFOLD_HPP

#include "snakegraph.hpp"

#include <string>
#include <vector>

namespace snakecalc {

class orbifold_error : public std::runtime_error {
 public:
  explicit orbifold_error(const std::string& what) : std::runtime_error(what) {}
};

// One directed side traversal in a cell's counterclockwise boundary walk.
struct Step {
  int arc;
  bool fwd;
};

// Cells are ordinary triangles (3 steps) or pending digons (2 steps plus a
// pending arc attached at the corner between walk[1] and walk[0]). A digon
// behaves like two triangles (inner, outer, pending) glued over the fold;
// that cyclic order is also its contribution to the exchange matrix.
struct Cell {
  std::vector<Step> walk;
  int pending = -1;
  bool is_digon() const { return pending >= 0; }
};

struct Triangulation {
  int genus = 0;
  int orbifold_points = 0;
  std::vector<std::string> labels;   // arc ids 0..n-1, boundary segments after
  std::vector<bool> is_boundary;
  std::vector<bool> is_pending;
  std::vector<Cell> cells;
  VarTablePtr table;

  int arc_count() const;
  int id_of(const std::string& label) const;
  // Slots of an arc: (cell index, walk position); pending arcs have none.
  std::vector<std::pair<int, int>> slots(int arc) const;
  const Cell& digon_of_pending(int arc) const;
};

// The paper's standard triangulation family: genus g >= 1, c >= 1 orbifold
// points of weight 1/2, one boundary marked point. Arc labels 1..6 play the
// genus-one roles; extra orbifold points extend labels 7..4+2c; higher-genus
// arcs follow.
Triangulation standard_triangulation(int genus, int orbifold_points);

void validate(const Triangulation& t);

// Directed arc end at the marked point.
struct ArcEnd {
  int arc;
  bool head;
};

// A step of the loop around the boundary: the arc end crossed, plus the
// cell corner it crosses into (cell, in-arc, out-arc).
struct LinkStep {
  ArcEnd end;
  int cell_before;  // corner cell preceding this end in the walk
};

// Arc ends around the marked point, boundary to boundary. The essential
// loop around the boundary crosses exactly these, in this order.
std::vector<LinkStep> marked_point_link(const Triangulation& t);

struct Curve {
  enum class Kind { Arc, Loop, SemiClosed };
  Kind kind = Kind::Arc;
  std::vector<std::string> crossings;
  int start_cell = -1;  // cell before the first crossing; -1 = resolve if unambiguous
};

// A triangle the curve passes through, with entry/exit sides as indices
// into the counterclockwise side list (-1 at a curve start/end).
struct TrianglePass {
  std::array<std::string, 3> ccw;
  int in = -1, out = -1;
};

std::vector<TrianglePass> trace(const Triangulation& t, const Curve& c);

// Tile construction from the crossing data: one tile per crossed arc, edge
// labels read from the two triangles adjacent to the crossing.
SnakeGraph snake_graph_of(const Triangulation& t, const Curve& c);
BandGraph band_graph_of(const Triangulation& t, const Curve& c);

// Semi-closed loop (geodesic between two orbifold points): evaluated via the
// band graph of its small enclosing perturbation loop.
Curve perturbation_loop(const Triangulation& t, const Curve& semi_closed);
LaurentPoly semi_closed_expansion(const Triangulation& t, const Curve& semi_closed);

// Laurent value of any curve in its natural graph model.
LaurentPoly curve_value(const Triangulation& t, const Curve& c);

struct BasisElement {
  enum class Kind { Bangle, Band, Bracelet };
  Kind kind;
  std::vector<std::pair<std::string, int>> components;  // curve name, multiplicity
  LaurentPoly value;
};

BasisElement bangle(const Triangulation& t, const std::vector<std::pair<Curve, int>>& components,
                    const std::vector<std::string>& names);
// Chebyshev-style k-fold bracelet of a loop; y-hat is the product of the
// band graph's tile y-variables.
BasisElement bracelet(const Triangulation& t, const Curve& loop, int k, const std::string& name);
LaurentPoly bracelet_yhat(const Triangulation& t, const Curve& loop);

// The fixture curves of the paper for the standard triangulation:
// the essential loop L (from the link), the arcs U and V splitting it, and
// the closed curves X and Y from their middles.
struct StandardCurves {
  Curve L, U, V, X, Y;
};
StandardCurves standard_curves(const Triangulation& t);

}  // namespace snakecalc

#endif
