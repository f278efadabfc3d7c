#include "snakegraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace snakecalc {

char pos_char(Pos p) {
  switch (p) {
    case Pos::S: return 'S';
    case Pos::E: return 'E';
    case Pos::N: return 'N';
    case Pos::W: return 'W';
  }
  return '?';
}

Pos pos_from_char(char c) {
  switch (c) {
    case 'S': return Pos::S;
    case 'E': return Pos::E;
    case 'N': return Pos::N;
    case 'W': return Pos::W;
  }
  throw graph_error(std::string("bad edge position '") + c + "'");
}

namespace {

struct Coord {
  int x, y;
  auto operator<=>(const Coord&) const = default;
};

// Tile origins along the snake.
std::vector<Coord> tile_origins(const SnakeGraph& g) {
  std::vector<Coord> o;
  o.reserve(g.tiles.size());
  Coord c{0, 0};
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    o.push_back(c);
    if (j + 1 < g.tiles.size()) {
      if (g.shape.at(j) == Dir::R)
        ++c.x;
      else
        ++c.y;
    }
  }
  return o;
}

// Endpoints of a tile edge, ordered (low/left first).
std::pair<Coord, Coord> edge_coords(Coord o, Pos p) {
  switch (p) {
    case Pos::S: return {{o.x, o.y}, {o.x + 1, o.y}};
    case Pos::E: return {{o.x + 1, o.y}, {o.x + 1, o.y + 1}};
    case Pos::N: return {{o.x, o.y + 1}, {o.x + 1, o.y + 1}};
    case Pos::W: return {{o.x, o.y}, {o.x, o.y + 1}};
  }
  throw graph_error("bad pos");
}

constexpr Pos kAllPos[4] = {Pos::S, Pos::E, Pos::N, Pos::W};

Pos exit_pos(Dir d) { return d == Dir::R ? Pos::E : Pos::N; }
Pos entry_pos(Dir d) { return d == Dir::R ? Pos::W : Pos::S; }

GraphGeometry build_geometry_impl(const SnakeGraph& g, const BandGraph* band) {
  GraphGeometry geom;
  if (g.is_trivial()) {
    geom.vertex_coords = {{0, 0}, {1, 0}};
    geom.edges.push_back({0, 1, *g.trivial_edge, -1, -1, Pos::S, Pos::S, false});
    geom.vertex_edges = {{0}, {0}};
    return geom;
  }
  auto origins = tile_origins(g);

  // Vertex identification map for the band glue.
  std::map<Coord, Coord> ident;
  std::pair<Coord, Coord> glue_last_cc{}, glue_first_cc{};
  if (band) {
    const int d = static_cast<int>(g.tiles.size());
    glue_last_cc = edge_coords(origins.back(), band->glue_last);
    glue_first_cc = edge_coords(origins.front(), band->glue_first);
    // Pairing of endpoints across the glue; see BandGraph note. With the
    // last edge's endpoints listed (low,left first) and likewise the first
    // edge's, the pairing is order-preserving in all four cases.
    (void)d;
    ident[glue_last_cc.first] = glue_first_cc.first;
    ident[glue_last_cc.second] = glue_first_cc.second;
  }
  auto canon = [&](Coord c) {
    auto it = ident.find(c);
    return it == ident.end() ? c : it->second;
  };

  std::map<Coord, int> vid;
  auto vertex = [&](Coord c) {
    c = canon(c);
    auto it = vid.find(c);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(geom.vertex_coords.size());
    vid.emplace(c, id);
    geom.vertex_coords.emplace_back(c.x, c.y);
    return id;
  };
  // Edges are identified by their original coordinates: gluing merges the
  // two glue copies only. Small bands are honest multigraphs, so vertex
  // pairs cannot serve as edge keys.
  auto ckey = [](std::pair<Coord, Coord> cc) {
    return cc.first < cc.second ? cc : std::make_pair(cc.second, cc.first);
  };
  std::map<std::pair<Coord, Coord>, int> eid;
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    for (Pos p : kAllPos) {
      auto cc = edge_coords(origins[j], p);
      int va = vertex(cc.first), vb = vertex(cc.second);
      auto key = ckey(cc);
      if (band && key == ckey(glue_last_cc)) key = ckey(glue_first_cc);
      auto it = eid.find(key);
      if (it == eid.end()) {
        int id = static_cast<int>(geom.edges.size());
        eid.emplace(key, id);
        geom.edges.push_back({std::min(va, vb), std::max(va, vb), g.tiles[j].at(p),
                              static_cast<int>(j), -1, p, p, false});
      } else {
        auto& e = geom.edges[it->second];
        if (e.tile2 == -1 && e.tile1 != static_cast<int>(j)) {
          e.tile2 = static_cast<int>(j);
          e.pos2 = p;
        }
        if (e.label != g.tiles[j].at(p))
          throw graph_error("edge label mismatch between tiles " + std::to_string(e.tile1) +
                            " and " + std::to_string(j));
      }
    }
  }
  geom.vertex_edges.assign(geom.vertex_coords.size(), {});
  for (std::size_t i = 0; i < geom.edges.size(); ++i) {
    geom.vertex_edges[geom.edges[i].v1].push_back(static_cast<int>(i));
    geom.vertex_edges[geom.edges[i].v2].push_back(static_cast<int>(i));
  }

  if (band) {
    // Locate the (merged) glue edge and record side attribution at the two
    // glued vertex classes.
    int u = vid.at(canon(glue_last_cc.first));
    int v = vid.at(canon(glue_last_cc.second));
    geom.glued_u = u;
    geom.glued_v = v;
    geom.glue_side.assign(geom.edges.size(), {0, 0});
    Coord u1 = canon(glue_first_cc.first), v1 = canon(glue_first_cc.second);
    auto side_of = [&](Coord orig, Coord cls1) { return orig == cls1 ? 1 : 2; };
    // Re-walk tile edges to see which copy each incident edge used.
    for (std::size_t j = 0; j < g.tiles.size(); ++j) {
      for (Pos p : kAllPos) {
        auto cc = edge_coords(origins[j], p);
        auto key = ckey(cc);
        if (key == ckey(glue_last_cc)) key = ckey(glue_first_cc);
        int id = eid.at(key);
        if (geom.edges[id].is_glue) continue;
        for (Coord orig : {cc.first, cc.second}) {
          Coord cc = canon(orig);
          int w = vid.at(cc);
          if (w == u) {
            int s = side_of(orig, u1);
            auto& slot = geom.glue_side[id][0];
            if (slot == 0)
              slot = s;
            else if (slot != s)
              slot = 3;  // touches both copies: only the glue edge may do this
          } else if (w == v) {
            int s = side_of(orig, v1);
            auto& slot = geom.glue_side[id][1];
            if (slot == 0)
              slot = s;
            else if (slot != s)
              slot = 3;
          }
        }
      }
    }
    // Mark the glue edge (both copies collapsed onto one id).
    auto it = eid.find(ckey(glue_first_cc));
    if (it == eid.end()) throw graph_error("band glue edge missing after identification");
    geom.edges[it->second].is_glue = true;
    geom.glue_side[it->second] = {0, 0};
  }
  return geom;
}

void enumerate_rec(const GraphGeometry& geom, std::vector<char>& covered, int n_covered,
                   std::vector<int>& current, std::vector<Matching>& out) {
  if (n_covered == static_cast<int>(covered.size())) {
    Matching m = current;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  int v = 0;
  while (covered[v]) ++v;
  for (int e : geom.vertex_edges[v]) {
    const auto& ed = geom.edges[e];
    int w = ed.v1 == v ? ed.v2 : ed.v1;
    if (w == v || covered[w]) continue;  // self-loops cannot occur
    covered[v] = covered[w] = 1;
    current.push_back(e);
    enumerate_rec(geom, covered, n_covered + 2, current, out);
    current.pop_back();
    covered[v] = covered[w] = 0;
  }
}

std::vector<Matching> enumerate_on(const GraphGeometry& geom) {
  std::vector<char> covered(geom.vertex_coords.size(), 0);
  std::vector<int> current;
  std::vector<Matching> out;
  enumerate_rec(geom, covered, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_good(const GraphGeometry& geom, const Matching& m) {
  if (geom.glued_u < 0) return true;
  int glue = -1;
  for (std::size_t i = 0; i < geom.edges.size(); ++i)
    if (geom.edges[i].is_glue) glue = static_cast<int>(i);
  if (std::binary_search(m.begin(), m.end(), glue)) return true;
  int su = 0, sv = 0;
  for (int e : m) {
    if (geom.glue_side[e][0] != 0) su = geom.glue_side[e][0];
    if (geom.glue_side[e][1] != 0) sv = geom.glue_side[e][1];
  }
  if (su == 0 || sv == 0 || su == 3 || sv == 3)
    throw graph_error("good-matching side attribution failed");
  return su == sv;
}

// Tile edge ids in geometry terms.
std::array<int, 4> tile_edge_ids(const GraphGeometry& geom, int tile) {
  std::array<int, 4> ids{-1, -1, -1, -1};
  for (std::size_t i = 0; i < geom.edges.size(); ++i) {
    const auto& e = geom.edges[i];
    if (e.tile1 == tile) ids[static_cast<std::size_t>(e.pos1)] = static_cast<int>(i);
    if (e.tile2 == tile) ids[static_cast<std::size_t>(e.pos2)] = static_cast<int>(i);
  }
  for (int id : ids)
    if (id < 0) throw graph_error("tile with missing edge");
  return ids;
}

// Relative heights via the twist graph. Twisting the horizontal pair {S,N}
// of tile t into {E,W} raises the height at t when t is even (0-based) and
// lowers it when t is odd; tile orientations alternate along the snake.
void compute_heights(const SnakeGraph& g, MatchingTable& table) {
  const std::size_t n = table.matchings.size();
  const std::size_t nt = g.tiles.size();
  if (nt == 0) {  // trivial edge graph: single matching, no tiles
    table.heights.assign(n, {});
    table.minimal_index = 0;
    return;
  }
  std::vector<std::array<int, 4>> tedges(nt);
  for (std::size_t t = 0; t < nt; ++t) tedges[t] = tile_edge_ids(table.geom, static_cast<int>(t));

  std::map<Matching, int> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(table.matchings[i], static_cast<int>(i));

  std::vector<std::vector<int>> h(n);
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  h[0].assign(nt, 0);
  seen[0] = 1;
  q.push(0);
  auto contains = [](const Matching& m, int e) { return std::binary_search(m.begin(), m.end(), e); };
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    const Matching& m = table.matchings[i];
    for (std::size_t t = 0; t < nt; ++t) {
      const auto& te = tedges[t];
      int S = te[0], E = te[1], N = te[2], W = te[3];
      bool horiz = contains(m, S) && contains(m, N);
      bool vert = contains(m, E) && contains(m, W);
      if (!horiz && !vert) continue;
      Matching other = m;
      auto drop = [&](int e) { other.erase(std::find(other.begin(), other.end(), e)); };
      if (horiz) {
        drop(S);
        drop(N);
        other.push_back(E);
        other.push_back(W);
      } else {
        drop(E);
        drop(W);
        other.push_back(S);
        other.push_back(N);
      }
      std::sort(other.begin(), other.end());
      auto it = index.find(other);
      if (it == index.end()) continue;  // not a (good) matching of this graph
      int raise = (t % 2 == 0) ? 1 : -1;  // horiz -> vert
      int delta = horiz ? raise : -raise;
      std::vector<int> hj = h[i];
      hj[t] += delta;
      if (!seen[it->second]) {
        h[it->second] = std::move(hj);
        seen[it->second] = 1;
        q.push(it->second);
      } else if (h[it->second] != hj) {
        throw graph_error("inconsistent height assignment (twist monodromy)");
      }
    }
  }
  for (char s : seen)
    if (!s) throw graph_error("twist graph of matchings is not connected");
  // Normalize so the unique minimal matching sits at height zero.
  std::vector<int> low(nt, INT32_MAX);
  for (const auto& v : h)
    for (std::size_t t = 0; t < nt; ++t) low[t] = std::min(low[t], v[t]);
  int minimal = -1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < nt; ++t) h[i][t] -= low[t];
    if (std::all_of(h[i].begin(), h[i].end(), [](int x) { return x == 0; })) {
      if (minimal >= 0) throw graph_error("two matchings of height one");
      minimal = static_cast<int>(i);
    }
  }
  if (minimal < 0) throw graph_error("no matching of height one (matchings do not form a lattice)");
  table.heights = std::move(h);
  table.minimal_index = static_cast<std::size_t>(minimal);
}

}  // namespace

GraphGeometry build_geometry(const SnakeGraph& g) { return build_geometry_impl(g, nullptr); }

GraphGeometry build_geometry(const BandGraph& g) { return build_geometry_impl(g.base, &g); }

void validate(const SnakeGraph& g) {
  if (g.is_trivial()) {
    if (!g.tiles.empty()) throw graph_error("trivial edge graph must have no tiles");
    if (g.trivial_edge->empty()) throw graph_error("trivial edge graph needs a label");
    return;
  }
  if (g.tiles.empty()) throw graph_error("snake graph needs at least one tile");
  if (g.shape.size() + 1 != g.tiles.size())
    throw graph_error("shape length must be tile count minus one");
  for (std::size_t j = 0; j + 1 < g.tiles.size(); ++j) {
    Pos out = exit_pos(g.shape[j]);
    Pos in = entry_pos(g.shape[j]);
    if (g.tiles[j].at(out) != g.tiles[j + 1].at(in))
      throw graph_error("interior edge labels disagree between tiles " + std::to_string(j + 1) +
                        " and " + std::to_string(j + 2) + ": '" + g.tiles[j].at(out) + "' vs '" +
                        g.tiles[j + 1].at(in) + "'");
  }
  for (std::size_t j = 0; j < g.tiles.size(); ++j) {
    const Tile& t = g.tiles[j];
    if (t.pending) {
      if (t.at(Pos::S) != t.at(Pos::N) || t.at(Pos::E) != t.at(Pos::W))
        throw graph_error("pending tile " + std::to_string(j + 1) +
                          " must carry doubled opposite edge labels");
    }
  }
}

void validate(const BandGraph& g) {
  validate(g.base);
  if (g.base.is_trivial() || g.base.tiles.size() < 2)
    throw graph_error("band graph needs at least two tiles");
  if (g.glue_first != Pos::S && g.glue_first != Pos::W)
    throw graph_error("band glue on first tile must be S or W");
  if (g.glue_last != Pos::N && g.glue_last != Pos::E)
    throw graph_error("band glue on last tile must be N or E");
  // Parity forces the relative placement of the two glue copies.
  bool odd = g.glue_transposed();
  Pos expect = g.glue_last == Pos::E ? (odd ? Pos::S : Pos::W) : (odd ? Pos::W : Pos::S);
  if (g.glue_first != expect)
    throw graph_error("band glue placement inconsistent with tile parity");
  const std::string& a = g.base.tiles.front().at(g.glue_first);
  const std::string& b = g.base.tiles.back().at(g.glue_last);
  if (a != b) throw graph_error("glued edges carry different labels: '" + a + "' vs '" + b + "'");
}

std::vector<Matching> enumerate_matchings(const SnakeGraph& g) {
  validate(g);
  return enumerate_on(build_geometry(g));
}

std::vector<Matching> enumerate_good_matchings(const BandGraph& g) {
  validate(g);
  GraphGeometry geom = build_geometry(g);
  std::vector<Matching> all = enumerate_on(geom);
  std::vector<Matching> good;
  for (auto& m : all)
    if (is_good(geom, m)) good.push_back(std::move(m));
  return good;
}

MatchingTable analyze(const SnakeGraph& g) {
  validate(g);
  MatchingTable t;
  t.geom = build_geometry(g);
  t.matchings = enumerate_on(t.geom);
  compute_heights(g, t);
  return t;
}

MatchingTable analyze(const BandGraph& g) {
  validate(g);
  MatchingTable t;
  t.geom = build_geometry(g);
  auto all = enumerate_on(t.geom);
  for (auto& m : all)
    if (is_good(t.geom, m)) t.matchings.push_back(std::move(m));
  compute_heights(g.base, t);
  return t;
}

Matching minimal_matching(const SnakeGraph& g) {
  MatchingTable t = analyze(g);
  return t.matchings[t.minimal_index];
}

LaurentPoly label_x(const VarTablePtr& table, const std::string& label) {
  return LaurentPoly::x_var(table, table->x_index("x" + label));
}

LaurentPoly label_y(const VarTablePtr& table, const std::string& label) {
  return LaurentPoly::y_var(table, table->y_index("y" + label));
}

LaurentPoly weight_monomial(const VarTablePtr& table, const GraphGeometry& geom, const Matching& m) {
  ExpVec e = ExpVec::zero(table->size());
  for (int idx : m) e.xe[table->x_index("x" + geom.edges[idx].label)] += 1;
  return LaurentPoly::monomial(table, std::move(e));
}

namespace {

LaurentPoly height_from_table(const VarTablePtr& table, const std::vector<Tile>& tiles,
                              const MatchingTable& t, const Matching& m) {
  auto it = std::lower_bound(t.matchings.begin(), t.matchings.end(), m);
  if (it == t.matchings.end() || *it != m) throw graph_error("not a matching of this graph");
  const auto& h = t.heights[static_cast<std::size_t>(it - t.matchings.begin())];
  ExpVec e = ExpVec::zero(table->size());
  for (std::size_t i = 0; i < tiles.size(); ++i)
    e.ye[table->y_index("y" + tiles[i].label)] += h[i];
  return LaurentPoly::monomial(table, std::move(e));
}

LaurentPoly expansion_from_table(const VarTablePtr& table, const std::vector<Tile>& tiles,
                                 const MatchingTable& t) {
  LaurentPoly num = LaurentPoly::zero(table);
  for (std::size_t i = 0; i < t.matchings.size(); ++i) {
    ExpVec e = ExpVec::zero(table->size());
    for (int idx : t.matchings[i]) e.xe[table->x_index("x" + t.geom.edges[idx].label)] += 1;
    for (std::size_t j = 0; j < tiles.size(); ++j)
      e.ye[table->y_index("y" + tiles[j].label)] += t.heights[i][j];
    num = num + LaurentPoly::monomial(table, std::move(e));
  }
  ExpVec cross = ExpVec::zero(table->size());
  for (const auto& tile : tiles) cross.xe[table->x_index("x" + tile.label)] += 1;
  return num.div_monomial(cross);
}

}  // namespace

LaurentPoly height_monomial(const VarTablePtr& table, const SnakeGraph& g, const Matching& m) {
  return height_from_table(table, g.tiles, analyze(g), m);
}

LaurentPoly height_monomial(const VarTablePtr& table, const BandGraph& g, const Matching& m) {
  return height_from_table(table, g.base.tiles, analyze(g), m);
}

LaurentPoly expansion(const VarTablePtr& table, const SnakeGraph& g) {
  if (g.is_trivial()) return label_x(table, *g.trivial_edge);
  return expansion_from_table(table, g.tiles, analyze(g));
}

LaurentPoly expansion(const VarTablePtr& table, const BandGraph& g) {
  return expansion_from_table(table, g.base.tiles, analyze(g));
}

}  // namespace snakecalc
