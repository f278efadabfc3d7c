#ifndef SNAKECALC_SNAKEGRAPH_HPP
#define SNAKECALC_SNAKEGRAPH_HPP

#include "laurent.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace snakecalc {

class graph_error : public std::runtime_error {
 public:
  explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

// Edge positions of a tile, counterclockwise from the bottom.
enum class Pos : std::uint8_t { S = 0, E = 1, N = 2, W = 3 };
enum class Dir : std::uint8_t { R, U };

char pos_char(Pos p);
Pos pos_from_char(char c);

struct Tile {
  std::string label;                 // crossed arc; names the tile's x-weight and y-variable
  std::array<std::string, 4> edge;   // labels indexed by Pos
  bool pending = false;              // crossing of a pending arc (doubled side labels)

  const std::string& at(Pos p) const { return edge[static_cast<std::size_t>(p)]; }
  std::string& at(Pos p) { return edge[static_cast<std::size_t>(p)]; }
};

// A snake graph: tiles glued left-to-right / bottom-to-top along `shape`.
// The degenerate case of a single labeled edge is carried by `trivial_edge`
// with an empty tile list.
struct SnakeGraph {
  std::vector<Tile> tiles;
  std::vector<Dir> shape;                        // size tiles.size()-1 (empty otherwise)
  std::optional<std::string> trivial_edge;

  bool is_trivial() const { return trivial_edge.has_value(); }
  std::size_t tile_count() const { return tiles.size(); }
};

// Band graph: a snake graph whose first-tile entry edge is identified with
// the last-tile exit edge. For an odd number of tiles the identification
// transposes the tile (S<->W, E<->N); this is forced by the alternating
// tile orientations and is derived, not chosen.
struct BandGraph {
  SnakeGraph base;
  Pos glue_first;  // S or W edge of tile 1
  Pos glue_last;   // N or E edge of the last tile

  bool glue_transposed() const { return base.tiles.size() % 2 == 1; }
};

// Concrete planar realization: indexed vertices and labeled edges.
// For bands the glue identifications are already applied.
struct GraphGeometry {
  struct Edge {
    int v1, v2;          // vertex ids, v1 < v2
    std::string label;
    int tile1 = -1, tile2 = -1;  // incident tiles (-1 if none); glue edge has both ends
    Pos pos1 {}, pos2 {};        // position within each incident tile
    bool is_glue = false;
  };
  std::vector<std::pair<int, int>> vertex_coords;  // id -> (x, y); glued vertices share an id
  std::vector<Edge> edges;                         // indexed tile-by-tile S,E,N,W, dedup to lower index
  std::vector<std::vector<int>> vertex_edges;      // incidence
  // Side attribution for the two glued vertex classes (band only):
  // edge -> which copy it touched, used by the good-matching filter.
  int glued_u = -1, glued_v = -1;
  std::vector<std::array<int, 2>> glue_side;       // per edge: side at u / at v (0 none, 1 first-tile copy, 2 last-tile copy)
};

using Matching = std::vector<int>;  // sorted edge indices

// Enumeration plus the height data every caller needs. `heights[i][t]` is
// the number of times tile t is enclosed between matching i and the minimal
// matching; the minimal matching has the all-zero vector.
struct MatchingTable {
  GraphGeometry geom;
  std::vector<Matching> matchings;            // deterministic: lex order on edge index sets
  std::vector<std::vector<int>> heights;      // per matching, per tile
  std::size_t minimal_index = 0;
};

GraphGeometry build_geometry(const SnakeGraph& g);
GraphGeometry build_geometry(const BandGraph& g);

// Structural validation; throws graph_error naming the first violation.
void validate(const SnakeGraph& g);
void validate(const BandGraph& g);

// All perfect matchings of a snake graph (lex order on edge index sets).
std::vector<Matching> enumerate_matchings(const SnakeGraph& g);
// All good matchings of a band graph (same order).
std::vector<Matching> enumerate_good_matchings(const BandGraph& g);

MatchingTable analyze(const SnakeGraph& g);
MatchingTable analyze(const BandGraph& g);

Matching minimal_matching(const SnakeGraph& g);

LaurentPoly weight_monomial(const VarTablePtr& table, const GraphGeometry& geom, const Matching& m);
LaurentPoly height_monomial(const VarTablePtr& table, const SnakeGraph& g, const Matching& m);
LaurentPoly height_monomial(const VarTablePtr& table, const BandGraph& g, const Matching& m);

// Matching-weighted Laurent expansion: sum of weight * height over all
// (good) matchings, divided by the crossing monomial of the tile labels.
LaurentPoly expansion(const VarTablePtr& table, const SnakeGraph& g);
LaurentPoly expansion(const VarTablePtr& table, const BandGraph& g);

// x-variable of an arc/boundary label ("4" -> x4).
LaurentPoly label_x(const VarTablePtr& table, const std::string& label);
LaurentPoly label_y(const VarTablePtr& table, const std::string& label);

}  // namespace snakecalc

#endif
