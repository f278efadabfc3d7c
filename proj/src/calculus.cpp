#include "calculus.hpp"

#include "cluster.hpp"  // exact_div

#include <chrono>
#include <set>

namespace snakecalc {

const GraphAny& GraphBundle::get(const std::string& name) const {
  auto it = graphs.find(name);
  if (it == graphs.end()) throw calculus_error("unknown graph: " + name);
  return it->second;
}

LaurentPoly GraphBundle::value(const std::string& name) const {
  auto c = cache_.find(name);
  if (c != cache_.end()) return c->second;
  const GraphAny& g = get(name);
  LaurentPoly v = std::holds_alternative<SnakeGraph>(g)
                      ? expansion(table, std::get<SnakeGraph>(g))
                      : expansion(table, std::get<BandGraph>(g));
  cache_.emplace(name, v);
  return v;
}

void GraphBundle::put(const std::string& name, GraphAny g) {
  graphs[name] = std::move(g);
  cache_.erase(name);
}

LaurentPoly term_value(const GraphBundle& b, const Term& t) {
  LaurentPoly v = LaurentPoly::parse(b.table, t.y);
  if (!v.is_monomial() || v.monomial_coefficient() != 1)
    throw calculus_error("term coefficient must be a y-monomial with coefficient one");
  const ExpVec& e = v.monomial_exponent();
  for (auto x : e.xe)
    if (x != 0) throw calculus_error("term coefficient must be a pure y-monomial");
  for (const auto& f : t.factors) v = v * b.value(f);
  return v;
}

LaurentPoly side_value(const GraphBundle& b, const std::vector<Term>& side) {
  LaurentPoly v = LaurentPoly::zero(b.table);
  for (const auto& t : side) v = v + term_value(b, t);
  return v;
}

VerifyResult verify(const GraphBundle& b, const Identity& id) {
  LaurentPoly diff = side_value(b, id.lhs) - side_value(b, id.rhs);
  if (!id.specialize.empty()) {
    std::map<std::string, LaurentPoly> images;
    for (const auto& [var, img] : id.specialize)
      images.emplace(var, LaurentPoly::parse(b.table, img));
    diff = diff.substitute(images);
  }
  VerifyResult r;
  r.ok = diff.is_zero();
  if (!r.ok) {
    const auto& [e, c] = *diff.terms().rbegin();
    r.counterexample = LaurentPoly::monomial(b.table, e, c).to_string();
  }
  return r;
}

bool SuiteReport::all_ok() const {
  for (const auto& l : lines)
    if (!l.ok) return false;
  return true;
}

std::string SuiteReport::to_text() const {
  std::string out;
  for (const auto& l : lines) {
    out += (l.ok ? "ok   " : "FAIL ") + l.name + "  (" + std::to_string(l.millis) + " ms)";
    if (!l.ok) out += "  surviving monomial: " + l.counterexample;
    out += "\n";
  }
  out += all_ok() ? "all " + std::to_string(lines.size()) + " identities verified\n"
                  : "verification FAILED\n";
  return out;
}

SuiteReport verify_suite(const GraphBundle& b, const std::vector<Identity>& ids) {
  SuiteReport rep;
  for (const auto& id : ids) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyResult r = verify(b, id);
    auto t1 = std::chrono::steady_clock::now();
    rep.lines.push_back({id.name, r.ok,
                         std::chrono::duration<double, std::milli>(t1 - t0).count(),
                         r.counterexample});
  }
  return rep;
}

namespace {

// Constructive operations are self-certifying: the produced identity is
// verified against a bundle extended with the new graphs before returning.
void certify(const GraphBundle& b, const GraftResult& r) {
  GraphBundle ext;
  ext.table = b.table;
  ext.graphs = b.graphs;
  for (const auto& [name, g] : r.new_graphs) ext.put(name, g);
  VerifyResult v = verify(ext, r.identity);
  if (!v.ok)
    throw calculus_error("constructed identity " + r.identity.name +
                         " failed verification: " + v.counterexample);
}

// Try to write p as a y-monomial (coefficient one) times q.
std::optional<LaurentPoly> as_y_multiple(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  ExpVec diff = p.leading_exponent() - q.leading_exponent();
  for (auto x : diff.xe)
    if (x != 0) return std::nullopt;
  if (!diff.ye_nonnegative()) return std::nullopt;
  LaurentPoly y = LaurentPoly::monomial(p.table(), diff);
  if (y * q == p) return y;
  return std::nullopt;
}

Tile transpose_tile(const Tile& t) {
  Tile out = t;
  std::swap(out.at(Pos::S), out.at(Pos::W));
  std::swap(out.at(Pos::E), out.at(Pos::N));
  return out;
}

Dir flip_dir(Dir d) { return d == Dir::R ? Dir::U : Dir::R; }

// Tile orientations alternate along a snake, so a sub-chain starting at an
// odd offset must be transposed to stand on its own.
SnakeGraph transpose_graph(const SnakeGraph& g) {
  SnakeGraph out;
  for (const auto& t : g.tiles) out.tiles.push_back(transpose_tile(t));
  for (Dir d : g.shape) out.shape.push_back(flip_dir(d));
  return out;
}

SnakeGraph drop_first(const SnakeGraph& g) {
  SnakeGraph out;
  if (g.tiles.size() <= 1) return out;
  out.tiles.assign(g.tiles.begin() + 1, g.tiles.end());
  out.shape.assign(g.shape.begin() + 1, g.shape.end());
  return transpose_graph(out);
}

SnakeGraph drop_last(const SnakeGraph& g) {
  SnakeGraph out;
  if (g.tiles.size() <= 1) return out;
  out.tiles.assign(g.tiles.begin(), g.tiles.end() - 1);
  out.shape.assign(g.shape.begin(), g.shape.end() - 1);
  return out;
}

}  // namespace

GraftResult graft(const GraphBundle& b, const std::string& n1, const std::string& n2,
                  const std::string& at) {
  const GraphAny& a1 = b.get(n1);
  const GraphAny& a2 = b.get(n2);

  // Band grafted with a trivial edge on one of its tile labels.
  if (std::holds_alternative<BandGraph>(a1) && std::holds_alternative<SnakeGraph>(a2) &&
      std::get<SnakeGraph>(a2).is_trivial()) {
    const BandGraph& band = std::get<BandGraph>(a1);
    if (*std::get<SnakeGraph>(a2).trivial_edge != at)
      throw calculus_error("edge factor label must match the grafting label");
    const std::size_t d = band.base.tiles.size();
    int idx = -1;
    for (std::size_t j = 0; j < d; ++j)
      if (band.base.tiles[j].label == at) {
        if (idx >= 0) throw calculus_error("pattern not supported: label crossed twice");
        idx = static_cast<int>(j);
      }
    if (idx < 0) throw calculus_error("no graftable tile with label " + at);
    // Cut the band open at that tile and remove it. On the periodic strip
    // the second period is transposed when the tile count is odd, and the
    // extracted chain is normalized so its first tile has even parity.
    std::vector<Dir> cyc = band.base.shape;
    cyc.push_back(band.glue_last == Pos::E ? Dir::R : Dir::U);  // wrap step
    const bool oddband = d % 2 == 1;
    const bool renorm = (idx + 1) % 2 == 1;
    SnakeGraph cut;
    for (std::size_t s = 1; s < d; ++s) {
      std::size_t q = static_cast<std::size_t>(idx) + s;
      Tile tl = band.base.tiles[q % d];
      bool tr = (q >= d && oddband) != renorm;
      cut.tiles.push_back(tr ? transpose_tile(tl) : tl);
      if (s + 1 < d) {
        Dir dd = cyc[q % d];
        if ((q >= d && oddband) != renorm) dd = flip_dir(dd);
        cut.shape.push_back(dd);
      }
    }
    validate(cut);
    LaurentPoly lhs = b.value(n1) * b.value(n2);
    LaurentPoly cutv = expansion(b.table, cut);
    // Solve lhs = y * cut + residual-monomial.
    for (const auto& [le, lc] : lhs.terms()) {
      ExpVec ye = le - cutv.leading_exponent();
      bool purey = true;
      for (auto x : ye.xe) purey &= (x == 0);
      if (!purey || !ye.ye_nonnegative()) continue;
      LaurentPoly y = LaurentPoly::monomial(b.table, ye);
      LaurentPoly rest = lhs - y * cutv;
      if (rest.is_monomial() && rest.monomial_coefficient() == 1 &&
          rest.monomial_exponent().ye_nonnegative()) {
        GraftResult out;
        std::string cut_name = n1 + "_cut_" + at;
        out.new_graphs.emplace_back(cut_name, cut);
        Term lt{"1", {n1, n2}};
        Term t1{y.to_string(), {cut_name}};
        // Residual monomial as a product of trivial edges.
        Term t2{"1", {}};
        ExpVec re = rest.monomial_exponent();
        ExpVec ypart = ExpVec::zero(b.table->size());
        ypart.ye = re.ye;
        t2.y = LaurentPoly::monomial(b.table, ypart).to_string();
        for (std::size_t i = 0; i < re.xe.size(); ++i) {
          if (re.xe[i] < 0) throw calculus_error("pattern not supported: residual denominator");
          for (int q = 0; q < re.xe[i]; ++q) {
            std::string lbl = b.table->x_names()[i].substr(1);
            std::string ename = "edge_" + lbl;
            SnakeGraph e;
            e.trivial_edge = lbl;
            out.new_graphs.emplace_back(ename, e);
            t2.factors.push_back(ename);
          }
        }
        out.identity.name = n1 + "_graft_" + at;
        out.identity.lhs = {lt};
        out.identity.rhs = {t1, t2};
        certify(b, out);
        return out;
      }
    }
    throw calculus_error("pattern not supported: band-edge grafting does not resolve");
  }

  if (!std::holds_alternative<SnakeGraph>(a1) || !std::holds_alternative<SnakeGraph>(a2))
    throw calculus_error("graft expects two snake graphs or a band and an edge");
  const SnakeGraph& g1 = std::get<SnakeGraph>(a1);
  const SnakeGraph& g2 = std::get<SnakeGraph>(a2);

  // Degenerate: grafting a trivial edge onto a graph collapses.
  if (g1.is_trivial() || g2.is_trivial()) {
    GraftResult out;
    out.identity.name = n1 + "_graft_" + n2;
    out.identity.lhs = {Term{"1", {n1, n2}}};
    out.identity.rhs = {Term{"1", {n1, n2}}};
    return out;
  }

  // The grafting edge sits on the exit half of g1's last tile and the entry
  // half of g2's first tile, in compatible positions. Appending g2 after an
  // odd number of tiles transposes it.
  SnakeGraph g2n = (g1.tiles.size() % 2 == 1) ? transpose_graph(g2) : g2;
  const Tile& t1 = g1.tiles.back();
  const Tile& t2 = g2n.tiles.front();
  Dir join;
  if (t1.at(Pos::N) == at && t2.at(Pos::S) == at)
    join = Dir::U;
  else if (t1.at(Pos::E) == at && t2.at(Pos::W) == at)
    join = Dir::R;
  else
    throw calculus_error("no graftable edge with label " + at);

  SnakeGraph joined;
  joined.tiles = g1.tiles;
  joined.tiles.insert(joined.tiles.end(), g2n.tiles.begin(), g2n.tiles.end());
  joined.shape = g1.shape;
  joined.shape.push_back(join);
  joined.shape.insert(joined.shape.end(), g2n.shape.begin(), g2n.shape.end());
  validate(joined);

  SnakeGraph c1 = drop_last(g1), c2 = drop_first(g2n);
  LaurentPoly lhs = b.value(n1) * b.value(n2);
  LaurentPoly rest = lhs - expansion(b.table, joined) * label_x(b.table, at);
  // Remainder = monomial * product of the complementary pieces; single-tile
  // factors leave an empty piece and the monomial may carry x-variables,
  // realized as trivial edge factors.
  LaurentPoly comp = LaurentPoly::one(b.table);
  if (!c1.tiles.empty()) comp = comp * expansion(b.table, c1);
  if (!c2.tiles.empty()) comp = comp * expansion(b.table, c2);
  LaurentPoly q(b.table);
  try {
    q = exact_div(rest, comp);
  } catch (const cluster_error&) {
    throw calculus_error("pattern not supported: grafting remainder does not factor");
  }
  if (!q.is_monomial() || q.monomial_coefficient() != 1 || !q.monomial_exponent().ye_nonnegative())
    throw calculus_error("pattern not supported: grafting remainder does not factor");
  const ExpVec& qe = q.monomial_exponent();
  for (auto xe : qe.xe)
    if (xe < 0) throw calculus_error("pattern not supported: grafting remainder denominator");

  GraftResult out;
  std::string jn = n1 + "_" + n2, cn1 = n1 + "_minus_last", cn2 = n2 + "_minus_first";
  std::string en = "edge_" + at;
  SnakeGraph e;
  e.trivial_edge = at;
  out.new_graphs.emplace_back(jn, joined);
  out.new_graphs.emplace_back(en, e);
  Term remainder{"1", {}};
  ExpVec ypart = ExpVec::zero(b.table->size());
  ypart.ye = qe.ye;
  remainder.y = LaurentPoly::monomial(b.table, ypart).to_string();
  if (!c1.tiles.empty()) {
    out.new_graphs.emplace_back(cn1, c1);
    remainder.factors.push_back(cn1);
  }
  if (!c2.tiles.empty()) {
    out.new_graphs.emplace_back(cn2, c2);
    remainder.factors.push_back(cn2);
  }
  for (std::size_t i = 0; i < qe.xe.size(); ++i)
    for (int k = 0; k < qe.xe[i]; ++k) {
      std::string lbl = b.table->x_names()[i].substr(1);
      SnakeGraph te;
      te.trivial_edge = lbl;
      out.new_graphs.emplace_back("edge_" + lbl, te);
      remainder.factors.push_back("edge_" + lbl);
    }
  out.identity.name = n1 + "_graft_" + n2 + "_at_" + at;
  out.identity.lhs = {Term{"1", {n1, n2}}};
  out.identity.rhs = {Term{"1", {jn, en}}, remainder};
  certify(b, out);
  return out;
}

GraftResult self_graft(const GraphBundle& b, const std::string& n, const std::string& at) {
  const GraphAny& a = b.get(n);
  if (!std::holds_alternative<SnakeGraph>(a))
    throw calculus_error("self_graft expects a snake graph");
  const SnakeGraph& g = std::get<SnakeGraph>(a);
  if (g.is_trivial() || g.tiles.size() < 3)
    throw calculus_error("no self-graftable locus in " + n);
  // Both copies of the label on the outer halves of the end tiles.
  Pos first_pos, last_pos;
  if (g.tiles.front().at(Pos::W) == at)
    first_pos = Pos::W;
  else if (g.tiles.front().at(Pos::S) == at)
    first_pos = Pos::S;
  else
    throw calculus_error("no self-graftable locus in " + n);
  if (g.tiles.back().at(Pos::N) == at)
    last_pos = Pos::N;
  else if (g.tiles.back().at(Pos::E) == at)
    last_pos = Pos::E;
  else
    throw calculus_error("no self-graftable locus in " + n);

  BandGraph band;
  band.base = g;
  band.glue_first = first_pos;
  band.glue_last = last_pos;
  validate(band);  // rejects placements inconsistent with tile parity

  LaurentPoly rest = (b.value(n) - expansion(b.table, band)) * label_x(b.table, at);
  SnakeGraph c1 = drop_last(g), c2 = drop_first(g);
  auto y = as_y_multiple(rest, expansion(b.table, c1) * expansion(b.table, c2));
  if (!y)
    throw calculus_error(
        "pattern not supported: self-grafting remainder does not factor into the "
        "complementary pair");

  GraftResult out;
  std::string bn = n + "_band", cn1 = n + "_minus_last", cn2 = n + "_minus_first";
  std::string en = "edge_" + at;
  SnakeGraph e;
  e.trivial_edge = at;
  out.new_graphs.emplace_back(bn, band);
  out.new_graphs.emplace_back(cn1, c1);
  out.new_graphs.emplace_back(cn2, c2);
  out.new_graphs.emplace_back(en, e);
  out.identity.name = n + "_selfgraft_" + at;
  out.identity.lhs = {Term{"1", {n, en}}};
  out.identity.rhs = {Term{"1", {bn, en}}, Term{y->to_string(), {cn1, cn2}}};
  certify(b, out);
  return out;
}

}  // namespace snakecalc
