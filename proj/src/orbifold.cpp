#include "orbifold.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace snakecalc {

int Triangulation::arc_count() const {
  int n = 0;
  for (bool b : is_boundary)
    if (!b) ++n;
  return n;
}

int Triangulation::id_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw orbifold_error("unknown arc label: " + label);
}

std::vector<std::pair<int, int>> Triangulation::slots(int arc) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t k = 0; k < cells[c].walk.size(); ++k)
      if (cells[c].walk[k].arc == arc) out.emplace_back(static_cast<int>(c), static_cast<int>(k));
  return out;
}

const Cell& Triangulation::digon_of_pending(int arc) const {
  for (const auto& c : cells)
    if (c.pending == arc) return c;
  throw orbifold_error("no digon for pending arc " + labels.at(arc));
}

namespace {

VarTablePtr make_table(const std::vector<std::string>& labels) {
  std::vector<std::string> xs, ys;
  for (const auto& l : labels) {
    xs.push_back("x" + l);
    ys.push_back("y" + l);
  }
  return std::make_shared<VarTable>(std::move(xs), std::move(ys));
}

}  // namespace

Triangulation standard_triangulation(int genus, int orbifold_points) {
  if (genus < 1 || orbifold_points < 1)
    throw orbifold_error("standard triangulation needs genus >= 1 and >= 1 orbifold point");
  const int g = genus, c = orbifold_points;
  const int n = 6 * g + 2 * c - 2;

  Triangulation t;
  t.genus = g;
  t.orbifold_points = c;
  for (int i = 1; i <= n; ++i) t.labels.push_back(std::to_string(i));
  t.labels.push_back("B");
  t.is_boundary.assign(n + 1, false);
  t.is_boundary[n] = true;
  t.is_pending.assign(n + 1, false);

  auto id = [&](int label1based) { return label1based - 1; };
  const int B = n;

  // Pending arcs 6, 8, ..., 4+2c; walls 7, 9, ..., 3+2c between chained digons.
  std::vector<int> pend(c), wall(std::max(0, c - 1));
  for (int k = 0; k < c; ++k) {
    pend[k] = id(6 + 2 * k);
    t.is_pending[pend[k]] = true;
  }
  for (int k = 0; k + 1 < c; ++k) wall[k] = id(7 + 2 * k);

  // Handle arcs: handle 1 uses (2,1) with diagonals 4, 3; later handles take
  // four fresh labels each, then the fan chords, then the digon anchor.
  int next = 4 + 2 * c + 1;
  std::vector<int> ha{-1, id(2)}, hb{-1, id(1)}, hd1{-1, id(4)}, hd2{-1, id(3)};
  for (int k = 2; k <= g; ++k) {
    ha.push_back(id(next++));
    hb.push_back(id(next++));
    hd1.push_back(id(next++));
    hd2.push_back(id(next++));
  }
  std::vector<int> fan;  // 2g-3 chords from the base corner of the inner polygon
  for (int i = 0; i < 2 * g - 3; ++i) fan.push_back(id(next++));
  int anchor = id(3);
  if (g >= 2) anchor = id(next++);  // second digon side parallel to arc 5
  if (next - 1 != n) throw orbifold_error("label layout error");

  for (int k = 1; k <= g; ++k) {
    t.cells.push_back({{{ha[k], true}, {hb[k], true}, {hd1[k], false}}, -1});
    t.cells.push_back({{{ha[k], false}, {hb[k], false}, {hd2[k], false}}, -1});
  }
  t.cells.push_back({{{id(4), true}, {id(5), true}, {B, true}}, -1});
  // Inner polygon fan (genus >= 2): sides 3, d1_2, d2_2, ..., d1_g, d2_g
  // triangulated from the corner shared with arcs 3 and 5.
  if (g >= 2) {
    std::vector<int> sides;
    sides.push_back(id(3));
    for (int k = 2; k <= g; ++k) {
      sides.push_back(hd1[k]);
      sides.push_back(hd2[k]);
    }
    std::vector<int> chords = fan;
    chords.push_back(anchor);
    int prev = sides[0];
    for (std::size_t i = 0; i < chords.size(); ++i) {
      t.cells.push_back({{{prev, true}, {sides[i + 1], true}, {chords[i], false}}, -1});
      prev = chords[i];
    }
  }
  // Chain of pending digons between arc 5 and the anchor.
  for (int k = 1; k <= c; ++k) {
    int inner = (k < c) ? wall[k - 1] : anchor;
    int outer = (k == 1) ? id(5) : wall[k - 2];
    t.cells.push_back({{{inner, true}, {outer, false}}, pend[k - 1]});
  }

  t.table = make_table(t.labels);
  validate(t);
  return t;
}

void validate(const Triangulation& t) {
  const int m = static_cast<int>(t.labels.size());
  std::vector<int> fwd(m, 0), rev(m, 0), pend_spur(m, 0);
  for (const auto& cell : t.cells) {
    if (cell.is_digon()) {
      if (cell.walk.size() != 2) throw orbifold_error("digon must have two sides");
      ++pend_spur[cell.pending];
    } else if (cell.walk.size() != 3) {
      throw orbifold_error("triangle must have three sides");
    }
    for (const auto& s : cell.walk) (s.fwd ? fwd : rev)[s.arc] += 1;
  }
  for (int a = 0; a < m; ++a) {
    if (t.is_pending[a]) {
      if (fwd[a] != 0 || rev[a] != 0 || pend_spur[a] != 1)
        throw orbifold_error("pending arc " + t.labels[a] + " must appear as exactly one spur");
    } else if (t.is_boundary[a]) {
      if (fwd[a] + rev[a] != 1)
        throw orbifold_error("boundary segment " + t.labels[a] + " must bound one cell");
    } else {
      if (fwd[a] != 1 || rev[a] != 1)
        throw orbifold_error("arc " + t.labels[a] +
                             " must be traversed once in each direction, got " +
                             std::to_string(fwd[a]) + "/" + std::to_string(rev[a]));
    }
  }
  // The arc count of the family.
  int arcs = t.arc_count();
  if (t.genus > 0 && arcs != 6 * t.genus + 2 * t.orbifold_points - 2)
    throw orbifold_error("arc count mismatch");
  // The link walk must sweep every marked-point corner exactly once.
  marked_point_link(t);
}

std::vector<LinkStep> marked_point_link(const Triangulation& t) {
  // Corners of each cell walk, with the pending spur inserted between
  // walk[1] and walk[0]. A corner is (arrival end, departure end); the O
  // corner between the two spur copies is skipped by never reaching it.
  struct Corner {
    int cell;
    ArcEnd in, out;
  };
  std::vector<Corner> corners;
  auto arrival = [](const Step& s) { return ArcEnd{s.arc, s.fwd}; };    // fwd arrives at head
  auto departure = [](const Step& s) { return ArcEnd{s.arc, !s.fwd}; };  // fwd departs from tail
  for (std::size_t ci = 0; ci < t.cells.size(); ++ci) {
    const Cell& cell = t.cells[ci];
    std::vector<Step> walk = cell.walk;
    if (cell.is_digon()) {
      walk.push_back({cell.pending, true});
      walk.push_back({cell.pending, false});
    }
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const Step& a = walk[k];
      const Step& b = walk[(k + 1) % walk.size()];
      corners.push_back({static_cast<int>(ci), arrival(a), departure(b)});
    }
  }
  auto at_marked_point = [&](const Corner& c) {
    // The O corner is the one between the two pending spur copies.
    return !(t.is_pending[c.in.arc] && t.is_pending[c.out.arc] && c.in.head && c.out.head);
  };
  auto key = [](const ArcEnd& e) { return e.arc * 2 + (e.head ? 1 : 0); };
  std::map<int, int> arrival_corner;
  int marked_corners = 0;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (!at_marked_point(corners[i])) continue;
    ++marked_corners;
    if (!arrival_corner.emplace(key(corners[i].in), static_cast<int>(i)).second)
      throw orbifold_error("arc end with two arrival corners");
  }
  // Start just inside the boundary: the corner that follows the boundary
  // segment's head.
  int boundary = -1;
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    if (t.is_boundary[i]) boundary = static_cast<int>(i);
  if (boundary < 0) throw orbifold_error("no boundary segment");
  auto it = arrival_corner.find(key({boundary, true}));
  if (it == arrival_corner.end()) throw orbifold_error("boundary head corner missing");

  std::vector<LinkStep> link;
  int corner = it->second;
  int guard = 0;
  while (true) {
    if (++guard > 10000) throw orbifold_error("link walk does not close");
    ArcEnd e = corners[corner].out;
    if (e.arc == boundary) break;  // reached the other side of the boundary
    link.push_back({e, corners[corner].cell});
    auto next = arrival_corner.find(key(e));
    if (next == arrival_corner.end()) throw orbifold_error("dangling arc end in link walk");
    corner = next->second;
  }
  // Every marked-point corner must be swept exactly once: ends = corners - 1.
  if (static_cast<int>(link.size()) + 1 != marked_corners)
    throw orbifold_error("marked point link is disconnected (triangulation has extra vertices)");
  return link;
}

namespace {

std::array<std::string, 3> digon_ccw(const Triangulation& t, const Cell& cell) {
  return {t.labels[cell.walk[0].arc], t.labels[cell.walk[1].arc], t.labels[cell.pending]};
}

std::array<std::string, 3> triangle_ccw(const Triangulation& t, const Cell& cell) {
  return {t.labels[cell.walk[0].arc], t.labels[cell.walk[1].arc], t.labels[cell.walk[2].arc]};
}

int index_in(const std::array<std::string, 3>& ccw, const std::string& label) {
  for (int i = 0; i < 3; ++i)
    if (ccw[i] == label) return i;
  return -1;
}

struct TraceState {
  int cell = -1;
  int in_arc = -1;  // arc we crossed to get here (pending while inside a digon)
};

}  // namespace

std::vector<TrianglePass> trace(const Triangulation& t, const Curve& c) {
  if (c.crossings.empty()) throw orbifold_error("curve crosses nothing");
  std::vector<int> arcs;
  for (const auto& l : c.crossings) {
    int a = t.id_of(l);
    if (t.is_boundary[a]) throw orbifold_error("curve cannot cross the boundary");
    arcs.push_back(a);
  }

  auto resolve_start = [&]() -> int {
    if (c.start_cell >= 0) return c.start_cell;
    // The cell before the first crossing. For loops it is the wrap cell;
    // for arcs the start triangle. Unambiguous when only one candidate works.
    std::vector<int> candidates;
    if (t.is_pending[arcs[0]]) {
      for (std::size_t ci = 0; ci < t.cells.size(); ++ci)
        if (t.cells[ci].pending == arcs[0]) candidates.push_back(static_cast<int>(ci));
    } else {
      for (auto [ci, k] : t.slots(arcs[0])) candidates.push_back(ci);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.size() == 1) return candidates[0];
    if (c.kind == Curve::Kind::Loop && arcs.size() >= 2) {
      // The wrap cell must contain the last crossing too.
      std::vector<int> ok;
      for (int ci : candidates) {
        const Cell& cell = t.cells[ci];
        for (const auto& s : cell.walk)
          if (s.arc == arcs.back()) ok.push_back(ci);
        if (cell.is_digon() && cell.pending == arcs.back()) ok.push_back(ci);
      }
      if (ok.size() == 1) return ok[0];
    }
    throw orbifold_error("ambiguous start cell; specify one");
  };

  TraceState st;
  st.cell = resolve_start();
  if (c.kind == Curve::Kind::Loop) st.in_arc = arcs.back();

  std::vector<TrianglePass> passes;
  auto pass_for = [&](const Cell& cell, int in_arc, int out_arc) {
    std::array<std::string, 3> ccw =
        cell.is_digon() ? digon_ccw(t, cell) : triangle_ccw(t, cell);
    TrianglePass p;
    p.ccw = ccw;
    p.in = in_arc < 0 ? -1 : index_in(ccw, t.labels[in_arc]);
    p.out = out_arc < 0 ? -1 : index_in(ccw, t.labels[out_arc]);
    if (in_arc >= 0 && p.in < 0) throw orbifold_error("entry side not on cell");
    if (out_arc >= 0 && p.out < 0) throw orbifold_error("exit side not on cell");
    if (in_arc >= 0 && out_arc >= 0 && p.in == p.out)
      throw orbifold_error("curve U-turns against side " + t.labels[in_arc]);
    return p;
  };

  for (std::size_t j = 0; j < arcs.size(); ++j) {
    const Cell& cell = t.cells[st.cell];
    int a = arcs[j];
    bool on_cell = false;
    for (const auto& s : cell.walk) on_cell |= (s.arc == a);
    bool is_spur = cell.is_digon() && cell.pending == a;
    if (!on_cell && !is_spur)
      throw orbifold_error("crossing " + t.labels[a] + " is not a side of the current cell");
    passes.push_back(pass_for(cell, st.in_arc, a));
    if (is_spur) {
      st.in_arc = a;  // crossed the pending arc: same digon, other sheet
      continue;
    }
    // Move to the other slot of a.
    auto sl = t.slots(a);
    if (sl.size() != 2) throw orbifold_error("arc " + t.labels[a] + " has no opposite side");
    int other = sl[0].first == st.cell && sl[1].first != st.cell ? sl[1].first
               : sl[1].first == st.cell && sl[0].first != st.cell ? sl[0].first
                                                                  : -1;
    if (other < 0) {
      // Both slots in one cell cannot happen for non-pending arcs here.
      throw orbifold_error("cannot resolve crossing of " + t.labels[a]);
    }
    st.cell = other;
    st.in_arc = a;
  }

  if (c.kind == Curve::Kind::Loop) {
    // Closure: the final state must sit in the wrap cell we started from.
    if (st.cell != resolve_start())
      throw orbifold_error("loop does not close up");
  } else {
    passes.push_back(pass_for(t.cells[st.cell], st.in_arc, -1));
  }
  return passes;
}

namespace {

// Cyclic order of pass sides under the tile's drawn orientation.
bool cyclic_match(const std::array<std::string, 3>& ccw, int sigma, const std::string& a,
                  const std::string& b, const std::string& c) {
  std::array<std::string, 3> seq = ccw;
  if (sigma < 0) std::swap(seq[0], seq[2]);  // reversal of a 3-cycle
  for (int r = 0; r < 3; ++r) {
    if (seq[r] == a && seq[(r + 1) % 3] == b && seq[(r + 2) % 3] == c) return true;
  }
  return false;
}

std::string third_side(const TrianglePass& p) {
  for (int i = 0; i < 3; ++i)
    if (i != p.in && i != p.out) return p.ccw[i];
  throw orbifold_error("degenerate pass");
}

int sigma_of(std::size_t tile1based) { return tile1based % 2 == 1 ? -1 : +1; }

// (q, r) with sigma-oriented cyclic order (pivot, q, r).
std::pair<std::string, std::string> flanks(const std::array<std::string, 3>& ccw, int sigma,
                                           const std::string& pivot) {
  std::array<std::string, 3> seq = ccw;
  if (sigma < 0) std::swap(seq[0], seq[2]);
  for (int r = 0; r < 3; ++r)
    if (seq[r] == pivot) return {seq[(r + 1) % 3], seq[(r + 2) % 3]};
  throw orbifold_error("pivot not on pass");
}

struct BuiltGraph {
  std::vector<Tile> tiles;
  std::vector<Dir> shape;   // includes the wrap direction last for loops
  Pos first_entry = Pos::S;  // loops: position of the glue copy on tile 1
};

// Shared tile-placement engine. `passes` holds one pass per gap: for arcs,
// d+1 passes with open ends; for loops, d passes with passes[0] the wrap.
BuiltGraph build_tiles(const Triangulation& t, const std::vector<TrianglePass>& passes,
                       const std::vector<std::string>& crossing_labels, bool loop) {
  const std::size_t d = crossing_labels.size();
  auto pass_before = [&](std::size_t j) -> const TrianglePass& {  // 1-based tile j
    return loop ? passes[(j - 1) % d] : passes[j - 1];
  };
  auto pass_after = [&](std::size_t j) -> const TrianglePass& {
    return loop ? passes[j % d] : passes[j];
  };
  auto tau = [&](std::size_t j) -> const std::string& {  // cyclic for loops
    return crossing_labels[(j - 1) % d];
  };

  BuiltGraph out;
  out.tiles.resize(d);
  std::vector<Dir> dir(d + 1, Dir::R);  // dir[j]: step after tile j (wrap for j=d)
  std::size_t dmax = loop ? d : d - 1;
  for (std::size_t j = 1; j <= dmax; ++j) {
    const TrianglePass& p = pass_after(j);
    std::string e = third_side(p);
    int sigma = sigma_of(j);
    if (cyclic_match(p.ccw, sigma, tau(j), e, tau(j + 1)))
      dir[j] = Dir::R;
    else if (cyclic_match(p.ccw, sigma, tau(j), tau(j + 1), e))
      dir[j] = Dir::U;
    else
      throw orbifold_error("pass sides do not close around tile " + std::to_string(j));
  }

  for (std::size_t j = 1; j <= d; ++j) {
    Tile& tile = out.tiles[j - 1];
    tile.label = tau(j);
    tile.pending = t.is_pending[t.id_of(tile.label)];
    // Entry half.
    if (j == 1) {
      auto [q, r] = flanks(pass_before(1).ccw, sigma_of(1), tau(1));
      tile.at(Pos::W) = q;
      tile.at(Pos::S) = r;
      if (loop) {
        // The wrap edge lands on S or W of tile 1; the alternating tile
        // orientations force its placement relative to the wrap direction
        // (transposed when the tile count is odd).
        std::string e = third_side(pass_before(1));
        out.first_entry = (tile.at(Pos::W) == e) ? Pos::W : Pos::S;
        Pos expect = (dir[d] == Dir::R) ? Pos::W : Pos::S;
        if (d % 2 == 1) expect = (expect == Pos::W) ? Pos::S : Pos::W;
        if (out.first_entry != expect)
          throw orbifold_error("band wrap placement inconsistent with tile parity");
      }
    } else {
      const TrianglePass& p = pass_before(j);
      Dir din = dir[j - 1];
      Pos entry = (din == Dir::R) ? Pos::W : Pos::S;
      Pos other = (entry == Pos::W) ? Pos::S : Pos::W;
      tile.at(entry) = third_side(p);
      tile.at(other) = tau(j - 1);
    }
    // Exit half.
    if (!loop && j == d) {
      auto [q, r] = flanks(pass_after(d).ccw, sigma_of(d), tau(d));
      tile.at(Pos::E) = q;
      tile.at(Pos::N) = r;
    } else {
      const TrianglePass& p = pass_after(j);
      Pos exit = (dir[j] == Dir::R) ? Pos::E : Pos::N;
      Pos other = (exit == Pos::E) ? Pos::N : Pos::E;
      tile.at(exit) = third_side(p);
      tile.at(other) = tau(j + 1);
    }
  }
  out.shape.assign(dir.begin() + 1, dir.begin() + static_cast<long>(dmax) + 1);
  return out;
}

}  // namespace

SnakeGraph snake_graph_of(const Triangulation& t, const Curve& c) {
  if (c.kind != Curve::Kind::Arc) throw orbifold_error("snake_graph_of expects an arc");
  // An arc of the triangulation itself: the trivial one-edge graph.
  if (c.crossings.empty()) throw orbifold_error("arc with no crossings; use a trivial edge graph");
  auto passes = trace(t, c);
  BuiltGraph b = build_tiles(t, passes, c.crossings, false);
  SnakeGraph g;
  g.tiles = std::move(b.tiles);
  g.shape = std::move(b.shape);
  validate(g);
  return g;
}

BandGraph band_graph_of(const Triangulation& t, const Curve& c) {
  if (c.kind != Curve::Kind::Loop) throw orbifold_error("band_graph_of expects a loop");
  if (c.crossings.size() < 2) throw orbifold_error("loop must cross at least twice");
  auto passes = trace(t, c);
  BuiltGraph b = build_tiles(t, passes, c.crossings, true);
  BandGraph band;
  band.base.tiles = std::move(b.tiles);
  band.base.shape.assign(b.shape.begin(), b.shape.end() - 1);
  band.glue_last = (b.shape.back() == Dir::R) ? Pos::E : Pos::N;
  band.glue_first = b.first_entry;
  validate(band);
  return band;
}

Curve perturbation_loop(const Triangulation& t, const Curve& semi_closed) {
  if (semi_closed.kind != Curve::Kind::SemiClosed)
    throw orbifold_error("perturbation_loop expects a semi-closed curve");
  // Walk the chain of digons the geodesic passes through; the enclosing loop
  // crosses the pending arc at each end once and every wall twice.
  if (semi_closed.crossings.empty())
    throw orbifold_error("semi-closed loop must cross at least one wall");
  int start = semi_closed.start_cell;
  if (start < 0) {
    int w0 = t.id_of(semi_closed.crossings.front());
    auto sl = t.slots(w0);
    for (auto [ci, k] : sl)
      if (t.cells[ci].is_digon()) {
        start = ci;
        break;
      }
  }
  if (start < 0 || !t.cells[start].is_digon())
    throw orbifold_error("semi-closed loop must start at an orbifold point (digon cell)");
  // Follow the walls to the final digon.
  int cell = start;
  for (const auto& l : semi_closed.crossings) {
    int a = t.id_of(l);
    bool on_cell = false;
    for (const auto& s : t.cells[cell].walk) on_cell |= (s.arc == a);
    if (!on_cell) throw orbifold_error("wall " + l + " does not bound the current digon");
    auto sl = t.slots(a);
    cell = sl[0].first == cell ? sl[1].first : sl[0].first;
  }
  if (!t.cells[cell].is_digon())
    throw orbifold_error("semi-closed loop must end at an orbifold point (digon cell)");
  Curve loop;
  loop.kind = Curve::Kind::Loop;
  loop.crossings.push_back(t.labels[t.cells[start].pending]);
  for (const auto& l : semi_closed.crossings) loop.crossings.push_back(l);
  loop.crossings.push_back(t.labels[t.cells[cell].pending]);
  for (auto it = semi_closed.crossings.rbegin(); it != semi_closed.crossings.rend(); ++it)
    loop.crossings.push_back(*it);
  loop.start_cell = start;
  return loop;
}

LaurentPoly semi_closed_expansion(const Triangulation& t, const Curve& semi_closed) {
  return expansion(t.table, band_graph_of(t, perturbation_loop(t, semi_closed)));
}

LaurentPoly curve_value(const Triangulation& t, const Curve& c) {
  switch (c.kind) {
    case Curve::Kind::Arc: return expansion(t.table, snake_graph_of(t, c));
    case Curve::Kind::Loop: return expansion(t.table, band_graph_of(t, c));
    case Curve::Kind::SemiClosed: return semi_closed_expansion(t, c);
  }
  throw orbifold_error("bad curve kind");
}

BasisElement bangle(const Triangulation& t, const std::vector<std::pair<Curve, int>>& components,
                    const std::vector<std::string>& names) {
  BasisElement e{BasisElement::Kind::Bangle, {}, LaurentPoly::one(t.table)};
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& [curve, mult] = components[i];
    if (mult < 0) throw orbifold_error("negative multiplicity");
    LaurentPoly v = curve_value(t, curve);
    for (int k = 0; k < mult; ++k) e.value = e.value * v;
    e.components.emplace_back(i < names.size() ? names[i] : "?", mult);
  }
  return e;
}

LaurentPoly bracelet_yhat(const Triangulation& t, const Curve& loop) {
  BandGraph b = band_graph_of(t, loop);
  ExpVec e = ExpVec::zero(t.table->size());
  for (const auto& tile : b.base.tiles) e.ye[t.table->y_index("y" + tile.label)] += 1;
  return LaurentPoly::monomial(t.table, std::move(e));
}

BasisElement bracelet(const Triangulation& t, const Curve& loop, int k, const std::string& name) {
  if (k < 1) throw orbifold_error("bracelet multiplicity must be >= 1");
  LaurentPoly z = curve_value(t, loop);
  LaurentPoly yhat = bracelet_yhat(t, loop);
  LaurentPoly tk_prev = z;                                  // T_1
  LaurentPoly tk = z * z - LaurentPoly::constant(t.table, 2) * yhat;  // T_2
  LaurentPoly result = k == 1 ? tk_prev : tk;
  for (int i = 3; i <= k; ++i) {
    LaurentPoly next = z * tk - yhat * tk_prev;
    tk_prev = tk;
    tk = next;
    result = tk;
  }
  BasisElement e{BasisElement::Kind::Bracelet, {{name, k}}, result};
  return e;
}

StandardCurves standard_curves(const Triangulation& t) {
  auto link = marked_point_link(t);
  StandardCurves sc;
  sc.L.kind = Curve::Kind::Loop;
  for (const auto& step : link) sc.L.crossings.push_back(t.labels[step.end.arc]);
  // The loop's wrap pass runs through the boundary triangle.
  for (std::size_t ci = 0; ci < t.cells.size(); ++ci)
    for (const auto& s : t.cells[ci].walk)
      if (t.is_boundary[s.arc]) sc.L.start_cell = static_cast<int>(ci);

  if (sc.L.crossings.front() != "4" || sc.L.crossings.back() != "5")
    throw orbifold_error("unexpected link layout");
  // U runs between the two ends of arc 4, V between the ends of arc 5.
  std::size_t second4 = 0;
  for (std::size_t i = 1; i < link.size(); ++i)
    if (t.labels[link[i].end.arc] == "4") {
      second4 = i;
      break;
    }
  sc.U.kind = Curve::Kind::Arc;
  sc.U.start_cell = link[0].cell_before;
  for (std::size_t i = 0; i <= second4; ++i) sc.U.crossings.push_back(t.labels[link[i].end.arc]);
  sc.V.kind = Curve::Kind::Arc;
  sc.V.start_cell = link[second4 + 1].cell_before;
  for (std::size_t i = second4 + 1; i < link.size(); ++i)
    sc.V.crossings.push_back(t.labels[link[i].end.arc]);

  // X and Y close up the middles of U and V; the wrap cell is the corner
  // cell just after the dropped first crossing.
  sc.X.kind = Curve::Kind::Loop;
  sc.X.crossings.assign(sc.U.crossings.begin() + 1, sc.U.crossings.end() - 1);
  sc.X.start_cell = link[1].cell_before;
  sc.Y.kind = Curve::Kind::Loop;
  sc.Y.crossings.assign(sc.V.crossings.begin() + 1, sc.V.crossings.end() - 1);
  sc.Y.start_cell = link[second4 + 2].cell_before;
  return sc;
}

}  // namespace snakecalc
