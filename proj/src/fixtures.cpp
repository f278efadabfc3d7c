#include "fixtures.hpp"

#include "cluster.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>

namespace snakecalc {

namespace fs = std::filesystem;

LaurentPoly section4_ytilde(const Triangulation& t, const LaurentPoly& uv) {
  std::size_t bi = t.table->x_index("xB");
  LaurentPoly b0(t.table);
  for (const auto& [e, c] : uv.terms())
    if (e.xe[bi] == 0) b0 = b0 + LaurentPoly::monomial(t.table, e, c);
  LaurentPoly den = label_y(t.table, "5") * label_x(t.table, "4") * label_x(t.table, "5");
  LaurentPoly yt = b0.div_monomial(den.monomial_exponent());
  if (!yt.is_monomial() || yt.monomial_coefficient() != 1)
    throw calculus_error("section-4 ytilde is not a coefficient-one monomial");
  for (auto x : yt.monomial_exponent().xe)
    if (x != 0) throw calculus_error("section-4 ytilde is not a pure y-monomial");
  return yt;
}

namespace {

Curve arc_curve(std::initializer_list<const char*> cr, int start) {
  Curve c{Curve::Kind::Arc, {}, start};
  for (auto* s : cr) c.crossings.push_back(s);
  return c;
}

Curve loop_curve(std::initializer_list<const char*> cr, int start) {
  Curve c{Curve::Kind::Loop, {}, start};
  for (auto* s : cr) c.crossings.push_back(s);
  return c;
}

void add_edges(GraphBundle& b, std::initializer_list<const char*> labels) {
  for (auto* l : labels) {
    SnakeGraph e;
    e.trivial_edge = l;
    b.put(std::string("edge_") + l, e);
  }
}

std::string ystr(const LaurentPoly& p) { return p.to_string(); }

// The section-4 resolution identity UV = L*B + (y4 X B + x5)(y5 Y B + y5 yt x4),
// expanded into terms, verified after specializing B -> 1.
Identity section4_identity(const Triangulation& t, GraphBundle& b, const std::string& name,
                           LaurentPoly& ytilde_out) {
  StandardCurves sc = standard_curves(t);
  b.put("U", snake_graph_of(t, sc.U));
  b.put("V", snake_graph_of(t, sc.V));
  b.put("L", band_graph_of(t, sc.L));
  b.put("X", band_graph_of(t, sc.X));
  b.put("Y", band_graph_of(t, sc.Y));
  add_edges(b, {"B", "4", "5"});
  LaurentPoly uv = b.value("U") * b.value("V");
  LaurentPoly yt = section4_ytilde(t, uv);
  ytilde_out = yt;
  LaurentPoly y4 = label_y(t.table, "4"), y5 = label_y(t.table, "5");
  Identity id;
  id.name = name;
  id.lhs = {Term{"1", {"U", "V"}}};
  id.rhs = {Term{"1", {"L", "edge_B"}},
            Term{ystr(y4 * y5), {"X", "Y", "edge_B", "edge_B"}},
            Term{ystr(y4 * y5 * yt), {"X", "edge_B", "edge_4"}},
            Term{ystr(y5), {"edge_5", "Y", "edge_B"}},
            Term{ystr(y5 * yt), {"edge_4", "edge_5"}}};
  id.specialize = {{"xB", "1"}};
  return id;
}

}  // namespace

PaperSuite build_paper_suite() {
  PaperSuite suite;
  auto note_graph = [&](const std::string& bundle, const std::string& name,
                        const std::string& prov, const std::string& note) {
    suite.manifest.push_back({name, "graph", bundle, prov, note});
  };
  auto note_identity = [&](const std::string& name, const std::string& prov,
                           const std::string& note) {
    suite.manifest.push_back({name, "identity", "", prov, note});
  };

  // ---- genus 1, one orbifold point: the Figure 5/7/8-9 material ----
  {
    Triangulation t = standard_triangulation(1, 1);
    const int T1 = 0, T2 = 1, TB = 2, DG = 3;
    std::map<std::string, Curve> cur;
    StandardCurves sc = standard_curves(t);
    cur["U"] = sc.U;
    cur["V"] = sc.V;
    cur["L"] = sc.L;
    cur["X"] = sc.X;
    cur["Y"] = sc.Y;
    cur["K"] = arc_curve({"4", "2", "1", "4", "5", "6", "3", "2", "1", "3", "5"}, TB);
    cur["S"] = arc_curve({"4", "2", "1"}, TB);
    cur["T"] = arc_curve({"6", "3", "2", "1", "3", "5"}, DG);
    cur["C"] = arc_curve({"1", "3", "5"}, T1);
    cur["D"] = arc_curve({"4", "2"}, TB);
    cur["E"] = arc_curve({"1", "3", "5", "4", "2"}, T1);
    cur["F"] = loop_curve({"1", "3", "5", "4"}, T1);
    cur["G"] = arc_curve({"5", "3", "1", "2"}, TB);
    cur["H"] = arc_curve({"3", "5", "4"}, T2);
    cur["T5"] = arc_curve({"5"}, TB);
    cur["M"] = arc_curve({"4", "2", "3", "6"}, TB);
    cur["N"] = arc_curve({"1", "3", "5", "4", "2", "3", "6"}, T1);
    cur["I"] = loop_curve({"2", "4", "5", "6", "3"}, T2);
    cur["Q"] = arc_curve({"1", "3", "6", "3", "2", "4"}, T1);
    cur["R"] = arc_curve({"4", "5", "6", "3"}, T1);
    cur["P"] = arc_curve({"4", "1", "3", "6", "3"}, TB);
    cur["G36"] = arc_curve({"3", "6"}, T2);
    cur["pending_flip"] = arc_curve({"6"}, DG);

    GraphBundle b;
    b.table = t.table;
    for (const auto& [name, c] : cur) {
      if (c.kind == Curve::Kind::Loop)
        b.put(name, band_graph_of(t, c));
      else
        b.put(name, snake_graph_of(t, c));
    }
    add_edges(b, {"B", "1", "2", "4", "5"});

    const std::string bun = "g1c1";
    note_graph(bun, "U", "PAPER", "Fig. 3/5 first factor, tiles [4,2,1,4]");
    note_graph(bun, "V", "PAPER", "Fig. 3/5 second factor, tiles [5,6,3,2,1,3,5]");
    note_graph(bun, "K", "PAPER", "Fig. 5 line 1, the 11-tile grafting of U and V at B");
    note_graph(bun, "S", "PAPER", "Fig. 5 line 1 remainder, tiles [4,2,1]");
    note_graph(bun, "T", "PAPER", "Fig. 5 line 1 remainder, tiles [6,3,2,1,3,5]");
    note_graph(bun, "L", "PAPER", "Fig. 5 line 2, band graph of the loop around the boundary");
    note_graph(bun, "X", "PAPER", "Fig. 5 box X, band graph on tiles [1,2]");
    note_graph(bun, "Y", "PAPER", "Fig. 5 box Y, band graph on tiles [6,3,2,1,3]");
    note_graph(bun, "C", "PAPER", "Fig. 7/9 line 1 factor, tiles [1,3,5]");
    note_graph(bun, "D", "PAPER", "Fig. 7 line 1 factor, tiles [4,2]");
    note_graph(bun, "E", "PAPER", "Fig. 7 line 1, tiles [1,3,5,4,2]");
    note_graph(bun, "F", "PAPER", "Fig. 7 line 2, band graph on tiles [1,3,5,4]");
    note_graph(bun, "G", "PAPER", "Fig. 7 line 2, tiles [5,3,1,2]");
    note_graph(bun, "H", "PAPER", "Fig. 7 line 3, tiles [3,5,4]");
    note_graph(bun, "T5", "PAPER", "Fig. 7 line 3, single tile [5]");
    note_graph(bun, "M", "PAPER", "Fig. 9 line 1 factor, tiles [4,2,3,6]");
    note_graph(bun, "N", "PAPER", "Fig. 9 line 1, tiles [1,3,5,4,2,3,6]");
    note_graph(bun, "I", "PAPER", "Fig. 9 line 2, band graph on tiles [2,4,5,6,3]");
    note_graph(bun, "Q", "PAPER", "Fig. 9 line 2, tiles [1,3,6,3,2,4]");
    note_graph(bun, "R", "PAPER", "Fig. 9 line 3, tiles [4,5,6,3]");
    note_graph(bun, "P", "PAPER", "Fig. 9 line 3, tiles [4,1,3,6,3]");
    note_graph(bun, "G36", "PAPER", "Fig. 9 line 1 remainder, tiles [3,6]");
    note_graph(bun, "pending_flip", "PAPER", "Fig. 1, snake graph of the pending arc flip");

    auto y = [&](const char* s) { return std::string("1*") + s; };
    std::vector<Identity> ids;
    ids.push_back({"fig5_line1",
                   {Term{"1", {"U", "V"}}},
                   {Term{"1", {"K", "edge_B"}}, Term{y("y5"), {"S", "T"}}},
                   {}});
    note_identity("fig5_line1", "PAPER", "grafting at B; holds with B formal");
    {
      LaurentPoly yt(t.table);
      Identity id = section4_identity(t, b, "fig5_line2", yt);
      LaurentPoly want = LaurentPoly::parse(t.table, "1*y1*y2*y3^2*y5*y6");
      if (!(yt == want)) throw calculus_error("genus-1 ytilde does not match the paper");
      ids.push_back(id);
      note_identity("fig5_line2", "PAPER",
                    "UV = L + (y4X+x5)(y5Y+y5*yt*x4) with yt = y1y2y3^2y5y6; the displayed "
                    "relation is not homogeneous in the boundary label, so it is verified "
                    "after specializing xB -> 1");
    }
    ids.push_back({"fig7_line1",
                   {Term{"1", {"C", "D"}}},
                   {Term{"1", {"E"}}, Term{y("y1*y3*y5"), {"edge_2", "edge_1"}}},
                   {{"xB", "1"}}});
    note_identity("fig7_line1", "PAPER",
                  "grafting at B; verified after xB -> 1 (not B-homogeneous)");
    ids.push_back({"fig7_line2",
                   {Term{"1", {"E"}}},
                   {Term{"1", {"F", "edge_1"}}, Term{y("y4"), {"G"}}},
                   {}});
    note_identity("fig7_line2", "PAPER", "smoothing of a self-crossing; holds with B formal");
    ids.push_back({"fig7_line3a",
                   {Term{"1", {"F", "edge_1"}}},
                   {Term{y("y1"), {"H"}}, Term{"1", {"edge_5"}}},
                   {}});
    note_identity("fig7_line3a", "PAPER", "grafting the band F with the edge 1");
    ids.push_back({"fig7_line3b",
                   {Term{"1", {"G"}}},
                   {Term{"1", {"X", "edge_B"}}, Term{y("y1*y2*y3"), {"T5"}}},
                   {}});
    note_identity("fig7_line3b", "PAPER", "self-grafting of G; holds with B formal");
    ids.push_back({"fig9_line1",
                   {Term{"1", {"C", "M"}}},
                   {Term{"1", {"N"}}, Term{y("y1*y3*y5"), {"edge_2", "G36"}}},
                   {{"xB", "1"}}});
    note_identity("fig9_line1", "PAPER",
                  "grafting at B; verified after xB -> 1 (not B-homogeneous)");
    ids.push_back({"fig9_line2",
                   {Term{"1", {"N"}}},
                   {Term{y("y1*y3"), {"I", "edge_2"}}, Term{"1", {"Q"}}},
                   {}});
    note_identity("fig9_line2", "DERIVED",
                  "self-grafting of N; the figure annotates N = I*e2 + y5*Q, the verified "
                  "coefficients under the uniform minimal-matching convention are "
                  "y1*y3 on I*e2 and 1 on Q (the intermediate curves are not simple, so "
                  "their normalization is conventional); discrepancy logged, not fixed");
    ids.push_back({"fig9_line3a",
                   {Term{"1", {"I", "edge_2"}}},
                   {Term{"1", {"R"}}, Term{y("y2*y3*y4*y5*y6"), {"edge_4"}}},
                   {}});
    note_identity("fig9_line3a", "DERIVED",
                  "grafting the band I with the edge 2; figure annotation y2*R + e4, "
                  "verified coefficients R + y2y3y4y5y6*e4 under the uniform convention");
    ids.push_back({"fig9_line3b",
                   {Term{"1", {"Q"}}},
                   {Term{y("y4"), {"Y", "edge_B"}}, Term{"1", {"P"}}},
                   {}});
    note_identity("fig9_line3b", "DERIVED",
                  "self-grafting of Q; figure annotation Y*B + y2*P, verified "
                  "coefficients y4*(Y*B) + P under the uniform convention");

    // Flip sequences of the fixture arcs, found once by breadth-first search
    // over the exchange graph (tools/find_flip_sequences) and frozen here;
    // each is re-verified against the snake-graph expansion below.
    suite.flip_sequences = {
        {"pending_flip", {{6}, 6}}, {"D", {{2, 4}, 4}},          {"C", {{1, 3, 5}, 5}},
        {"H", {{3, 4, 5}, 5}},      {"U", {{4, 1, 2}, 2}},       {"V", {{3, 5, 1, 6, 2, 3}, 3}},
    };
    Seed seed = seed_from_triangulation(t);
    for (const auto& [name, fs] : suite.flip_sequences) {
      std::vector<std::size_t> flips;
      for (int f : fs.flips) flips.push_back(static_cast<std::size_t>(f - 1));
      LaurentPoly v = variable_along(seed, flips, static_cast<std::size_t>(fs.variable - 1));
      if (!(v == b.value(name)))
        throw calculus_error("stored flip sequence for " + name +
                             " does not reproduce the snake-graph expansion");
      suite.manifest.push_back(
          {name + "_flips", "flip_sequence", bun, "DERIVED",
           "found by bounded breadth-first search over the exchange graph; reproduces the "
           "snake-graph expansion exactly"});
    }

    suite.triangulations.emplace(bun, t);
    suite.bundles.emplace(bun, std::move(b));
    suite.curves.emplace(bun, std::move(cur));
    for (auto& id : ids) suite.identities.emplace_back(bun, std::move(id));
  }

  // ---- section 4: arbitrary genus and several orbifold points ----
  for (auto [g, c] : {std::pair{2, 1}, std::pair{1, 2}}) {
    std::string bun = "g" + std::to_string(g) + "c" + std::to_string(c);
    Triangulation t = standard_triangulation(g, c);
    GraphBundle b;
    b.table = t.table;
    LaurentPoly yt(t.table);
    Identity id = section4_identity(t, b, "sec4_" + bun, yt);
    StandardCurves sc = standard_curves(t);
    std::map<std::string, Curve> cur{{"U", sc.U}, {"V", sc.V}, {"L", sc.L}, {"X", sc.X}, {"Y", sc.Y}};
    if (c >= 2) {
      Curve gamma{Curve::Kind::SemiClosed, {"7"}, -1};
      cur["gamma"] = gamma;
    }
    for (const auto& nm : {"U", "V", "L", "X", "Y"})
      note_graph(bun, nm, "DERIVED",
                 "standard-triangulation instance generated from the marked point link; the "
                 "paper draws the genus-1 case and describes the zig-zag extension");
    note_identity(id.name, "DERIVED",
                  "section-4 identity instance with computed yt = " + yt.to_string() +
                      "; verified after xB -> 1");
    suite.triangulations.emplace(bun, t);
    suite.bundles.emplace(bun, std::move(b));
    suite.curves.emplace(bun, std::move(cur));
    suite.identities.emplace_back(bun, std::move(id));
  }

  // Self-certification: every fixture identity must verify.
  for (const auto& [bun, id] : suite.identities) {
    VerifyResult r = verify(suite.bundles.at(bun), id);
    if (!r.ok)
      throw calculus_error("fixture identity " + id.name +
                           " does not verify; surviving monomial " + r.counterexample);
  }
  return suite;
}

void write_suite(const PaperSuite& suite, const std::string& dir) {
  fs::create_directories(fs::path(dir) / "identities");
  json manifest;
  manifest["entries"] = json::array();
  for (const auto& e : suite.manifest)
    manifest["entries"].push_back(json{{"name", e.name},
                                       {"kind", e.kind},
                                       {"bundle", e.bundle},
                                       {"provenance", e.provenance},
                                       {"note", e.note}});
  for (const auto& [key, b] : suite.bundles)
    write_file((fs::path(dir) / ("graphs_" + key + ".json")).string(),
               bundle_to_json(b).dump(1) + "\n");
  for (const auto& [key, t] : suite.triangulations)
    write_file((fs::path(dir) / ("triangulation_" + key + ".json")).string(),
               to_json(t).dump(1) + "\n");
  for (const auto& [key, cm] : suite.curves) {
    json j = json::object();
    for (const auto& [name, c] : cm) j[name] = to_json(c);
    write_file((fs::path(dir) / ("curves_" + key + ".json")).string(), j.dump(1) + "\n");
  }
  for (const auto& [key, id] : suite.identities) {
    json j = to_json(id);
    j["bundle"] = "graphs_" + key + ".json";
    write_file((fs::path(dir) / "identities" / (id.name + ".json")).string(), j.dump(1) + "\n");
  }
  if (!suite.flip_sequences.empty()) {
    json j = json::object();
    for (const auto& [name, fs2] : suite.flip_sequences)
      j[name] = json{{"flips", fs2.flips}, {"variable", fs2.variable}};
    write_file((fs::path(dir) / "flip_sequences_g1c1.json").string(), j.dump(1) + "\n");
  }
  write_file((fs::path(dir) / "manifest.json").string(), manifest.dump(1) + "\n");
}

Identity load_identity_file(const std::string& path, GraphBundle& bundle_out) {
  json j = json::parse(read_file(path));
  Identity id = identity_from_json(j);
  if (!j.contains("bundle")) throw calculus_error("identity file lacks a bundle reference");
  fs::path bp = fs::path(path).parent_path() / j.at("bundle").get<std::string>();
  if (!fs::exists(bp)) bp = fs::path(path).parent_path().parent_path() / j.at("bundle").get<std::string>();
  bundle_out = bundle_from_json(json::parse(read_file(bp.string())));
  return id;
}

VerifyResult verify_identity_file(const std::string& path) {
  GraphBundle b;
  Identity id = load_identity_file(path, b);
  return verify(b, id);
}

SuiteReport verify_suite_dir(const std::string& dir) {
  fs::path ids = fs::path(dir) / "identities";
  if (!fs::is_directory(ids)) ids = dir;  // allow pointing at the identities directly
  std::vector<std::string> files;
  for (const auto& e : fs::directory_iterator(ids))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  SuiteReport rep;
  std::map<std::string, GraphBundle> bundle_cache;
  for (const auto& f : files) {
    json j = json::parse(read_file(f));
    Identity id = identity_from_json(j);
    std::string bref = j.value("bundle", "");
    fs::path bp = fs::path(f).parent_path() / bref;
    if (!fs::exists(bp)) bp = fs::path(f).parent_path().parent_path() / bref;
    auto it = bundle_cache.find(bp.string());
    if (it == bundle_cache.end())
      it = bundle_cache.emplace(bp.string(), bundle_from_json(json::parse(read_file(bp.string())))).first;
    auto t0 = std::chrono::steady_clock::now();
    VerifyResult r = verify(it->second, id);
    auto t1 = std::chrono::steady_clock::now();
    rep.lines.push_back({id.name, r.ok,
                         std::chrono::duration<double, std::milli>(t1 - t0).count(),
                         r.counterexample});
  }
  return rep;
}

}  // namespace snakecalc
