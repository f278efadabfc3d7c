#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace snakecalc {

namespace {

json tiles_to_json(const std::vector<Tile>& tiles) {
  json arr = json::array();
  for (const auto& t : tiles) {
    json jt;
    jt["label"] = t.label;
    jt["edges"] = {{"S", t.at(Pos::S)}, {"E", t.at(Pos::E)}, {"N", t.at(Pos::N)}, {"W", t.at(Pos::W)}};
    if (t.pending) jt["pending"] = true;
    arr.push_back(jt);
  }
  return arr;
}

std::vector<Tile> tiles_from_json(const json& arr) {
  std::vector<Tile> tiles;
  for (const auto& jt : arr) {
    Tile t;
    t.label = jt.at("label").get<std::string>();
    const auto& ed = jt.at("edges");
    t.at(Pos::S) = ed.at("S").get<std::string>();
    t.at(Pos::E) = ed.at("E").get<std::string>();
    t.at(Pos::N) = ed.at("N").get<std::string>();
    t.at(Pos::W) = ed.at("W").get<std::string>();
    t.pending = jt.value("pending", false);
    tiles.push_back(std::move(t));
  }
  return tiles;
}

std::string shape_string(const std::vector<Dir>& shape) {
  std::string s;
  for (Dir d : shape) s += (d == Dir::R ? 'R' : 'U');
  return s;
}

std::vector<Dir> shape_from_string(const std::string& s) {
  std::vector<Dir> shape;
  for (char c : s) {
    if (c == 'R')
      shape.push_back(Dir::R);
    else if (c == 'U')
      shape.push_back(Dir::U);
    else
      throw graph_error("bad shape character");
  }
  return shape;
}

}  // namespace

json to_json(const SnakeGraph& g) {
  json j;
  if (g.is_trivial()) {
    j["kind"] = "edge";
    j["label"] = *g.trivial_edge;
    return j;
  }
  j["kind"] = "snake";
  j["tiles"] = tiles_to_json(g.tiles);
  j["shape"] = shape_string(g.shape);
  return j;
}

json to_json(const BandGraph& g) {
  json j;
  j["kind"] = "band";
  j["tiles"] = tiles_to_json(g.base.tiles);
  j["shape"] = shape_string(g.base.shape);
  j["glue"] = {{"first", std::string(1, pos_char(g.glue_first))},
               {"last", std::string(1, pos_char(g.glue_last))}};
  return j;
}

json graph_to_json(const GraphAny& g) {
  return std::holds_alternative<SnakeGraph>(g) ? to_json(std::get<SnakeGraph>(g))
                                               : to_json(std::get<BandGraph>(g));
}

GraphAny graph_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "edge") {
    SnakeGraph g;
    g.trivial_edge = j.at("label").get<std::string>();
    validate(g);
    return g;
  }
  if (kind == "snake") {
    SnakeGraph g;
    g.tiles = tiles_from_json(j.at("tiles"));
    g.shape = shape_from_string(j.at("shape").get<std::string>());
    validate(g);
    return g;
  }
  if (kind == "band") {
    BandGraph g;
    g.base.tiles = tiles_from_json(j.at("tiles"));
    g.base.shape = shape_from_string(j.at("shape").get<std::string>());
    g.glue_first = pos_from_char(j.at("glue").at("first").get<std::string>().at(0));
    g.glue_last = pos_from_char(j.at("glue").at("last").get<std::string>().at(0));
    validate(g);
    return g;
  }
  throw graph_error("unknown graph kind: " + kind);
}

json bundle_to_json(const GraphBundle& b) {
  json j;
  j["x_vars"] = b.table->x_names();
  j["y_vars"] = b.table->y_names();
  json graphs = json::object();
  for (const auto& [name, g] : b.graphs) graphs[name] = graph_to_json(g);
  j["graphs"] = graphs;
  return j;
}

GraphBundle bundle_from_json(const json& j) {
  GraphBundle b;
  b.table = std::make_shared<VarTable>(j.at("x_vars").get<std::vector<std::string>>(),
                                       j.at("y_vars").get<std::vector<std::string>>());
  for (const auto& [name, jg] : j.at("graphs").items()) b.put(name, graph_from_json(jg));
  return b;
}

json to_json(const Identity& id) {
  json j;
  j["name"] = id.name;
  auto side = [](const std::vector<Term>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(json{{"y", t.y}, {"factors", t.factors}});
    return arr;
  };
  j["lhs"] = side(id.lhs);
  j["rhs"] = side(id.rhs);
  if (!id.specialize.empty()) j["specialize"] = id.specialize;
  return j;
}

Identity identity_from_json(const json& j) {
  Identity id;
  id.name = j.at("name").get<std::string>();
  auto side = [](const json& arr) {
    std::vector<Term> ts;
    for (const auto& jt : arr)
      ts.push_back(Term{jt.at("y").get<std::string>(),
                        jt.at("factors").get<std::vector<std::string>>()});
    return ts;
  };
  id.lhs = side(j.at("lhs"));
  id.rhs = side(j.at("rhs"));
  if (j.contains("specialize"))
    id.specialize = j.at("specialize").get<std::map<std::string, std::string>>();
  return id;
}

json to_json(const Triangulation& t) {
  json j;
  j["genus"] = t.genus;
  j["orbifold_points"] = t.orbifold_points;
  json arcs = json::array(), boundary = json::array(), pending = json::array();
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (t.is_boundary[i])
      boundary.push_back(t.labels[i]);
    else
      arcs.push_back(t.labels[i]);
    if (t.is_pending[i]) pending.push_back(t.labels[i]);
  }
  j["arcs"] = arcs;
  j["boundary"] = boundary;
  j["pending"] = pending;
  json triangles = json::array(), digons = json::array();
  auto step_json = [&](const Step& s) {
    return json{{"side", t.labels[s.arc]}, {"fwd", s.fwd}};
  };
  for (const auto& cell : t.cells) {
    json walk = json::array();
    for (const auto& s : cell.walk) walk.push_back(step_json(s));
    if (cell.is_digon())
      digons.push_back(json{{"walk", walk}, {"pending", t.labels[cell.pending]}});
    else
      triangles.push_back(json{{"walk", walk}});
  }
  j["triangles"] = triangles;
  j["digons"] = digons;
  return j;
}

Triangulation triangulation_from_json(const json& j) {
  Triangulation t;
  t.genus = j.value("genus", 0);
  t.orbifold_points = j.value("orbifold_points", 0);
  for (const auto& a : j.at("arcs")) t.labels.push_back(a.get<std::string>());
  std::size_t n_arcs = t.labels.size();
  for (const auto& a : j.at("boundary")) t.labels.push_back(a.get<std::string>());
  t.is_boundary.assign(t.labels.size(), false);
  for (std::size_t i = n_arcs; i < t.labels.size(); ++i) t.is_boundary[i] = true;
  t.is_pending.assign(t.labels.size(), false);
  for (const auto& p : j.at("pending")) t.is_pending[t.id_of(p.get<std::string>())] = true;
  auto read_walk = [&](const json& arr) {
    std::vector<Step> walk;
    for (const auto& js : arr)
      walk.push_back(Step{t.id_of(js.at("side").get<std::string>()), js.at("fwd").get<bool>()});
    return walk;
  };
  for (const auto& jt : j.at("triangles")) t.cells.push_back({read_walk(jt.at("walk")), -1});
  for (const auto& jd : j.at("digons"))
    t.cells.push_back({read_walk(jd.at("walk")), t.id_of(jd.at("pending").get<std::string>())});
  std::vector<std::string> xs, ys;
  for (const auto& l : t.labels) {
    xs.push_back("x" + l);
    ys.push_back("y" + l);
  }
  t.table = std::make_shared<VarTable>(std::move(xs), std::move(ys));
  validate(t);
  return t;
}

json to_json(const Curve& c) {
  json j;
  switch (c.kind) {
    case Curve::Kind::Arc: j["kind"] = "arc"; break;
    case Curve::Kind::Loop: j["kind"] = "loop"; break;
    case Curve::Kind::SemiClosed: j["kind"] = "semi_closed"; break;
  }
  j["crossings"] = c.crossings;
  if (c.start_cell >= 0) j["start_cell"] = c.start_cell;
  return j;
}

Curve curve_from_json(const json& j) {
  Curve c;
  std::string k = j.at("kind").get<std::string>();
  if (k == "arc")
    c.kind = Curve::Kind::Arc;
  else if (k == "loop")
    c.kind = Curve::Kind::Loop;
  else if (k == "semi_closed")
    c.kind = Curve::Kind::SemiClosed;
  else
    throw orbifold_error("unknown curve kind: " + k);
  c.crossings = j.at("crossings").get<std::vector<std::string>>();
  c.start_cell = j.value("start_cell", -1);
  return c;
}

json to_json(const Seed& s) {
  json j;
  j["mutable"] = s.mutable_labels;
  j["frozen"] = s.frozen_labels;
  j["B"] = s.B;
  j["d"] = s.d;
  j["principal"] = s.principal;
  json cluster = json::array();
  for (const auto& v : s.cluster) cluster.push_back(v.to_string());
  j["cluster"] = cluster;
  return j;
}

Seed seed_from_json(const json& j) {
  Seed s;
  s.mutable_labels = j.at("mutable").get<std::vector<std::string>>();
  s.frozen_labels = j.at("frozen").get<std::vector<std::string>>();
  std::vector<std::string> xs, ys;
  for (const auto& l : s.mutable_labels) {
    xs.push_back("x" + l);
    ys.push_back("y" + l);
  }
  for (const auto& l : s.frozen_labels) {
    xs.push_back("x" + l);
    ys.push_back("y" + l);
  }
  s.table = std::make_shared<VarTable>(std::move(xs), std::move(ys));
  s.B = j.at("B").get<std::vector<std::vector<int>>>();
  s.d = j.at("d").get<std::vector<int>>();
  s.principal = j.value("principal", true);
  for (const auto& c : j.at("cluster"))
    s.cluster.push_back(LaurentPoly::parse(s.table, c.get<std::string>()));
  validate(s);
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace snakecalc
