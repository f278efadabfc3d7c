#include <doctest.h>

#include "orbifold.hpp"

using namespace snakecalc;

namespace {

std::string crossing_string(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& c : v) s += c + ",";
  return s;
}

std::string shape_string(const SnakeGraph& g) {
  std::string s;
  for (Dir d : g.shape) s += (d == Dir::R ? 'R' : 'U');
  return s;
}

}  // namespace

TEST_CASE("standard triangulation arc counts") {
  CHECK(standard_triangulation(1, 1).arc_count() == 6);
  CHECK(standard_triangulation(1, 3).arc_count() == 10);
  CHECK(standard_triangulation(2, 1).arc_count() == 12);
  for (int g = 1; g <= 3; ++g)
    for (int c = 1; c <= 4; ++c) {
      Triangulation t = standard_triangulation(g, c);  // validates internally
      CHECK(t.arc_count() == 6 * g + 2 * c - 2);
    }
  CHECK_THROWS_AS(standard_triangulation(0, 1), orbifold_error);
  CHECK_THROWS_AS(standard_triangulation(1, 0), orbifold_error);
}

TEST_CASE("the loop around the boundary crosses the arc ends in link order") {
  auto t = standard_triangulation(1, 1);
  auto link = marked_point_link(t);
  std::vector<std::string> seq;
  for (const auto& s : link) seq.push_back(t.labels[s.end.arc]);
  CHECK(crossing_string(seq) == "4,2,1,4,5,6,3,2,1,3,5,");
}

TEST_CASE("U graph matches the figure tile by tile") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  CHECK(crossing_string(sc.U.crossings) == "4,2,1,4,");
  auto U = snake_graph_of(t, sc.U);
  REQUIRE(U.tiles.size() == 4);
  CHECK(shape_string(U) == "RUR");
  CHECK(U.tiles[0].at(Pos::S) == "5");
  CHECK(U.tiles[0].at(Pos::W) == "B");
  CHECK(U.tiles[0].at(Pos::N) == "2");
  CHECK(U.tiles[0].at(Pos::E) == "1");
  CHECK(U.tiles[3].at(Pos::E) == "5");
  CHECK(U.tiles[3].at(Pos::N) == "B");
  CHECK(U.tiles[3].at(Pos::S) == "1");
}

TEST_CASE("V graph matches the figure") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  auto V = snake_graph_of(t, sc.V);
  REQUIRE(V.tiles.size() == 7);
  CHECK(shape_string(V) == "RURURU");
  CHECK(V.tiles[0].at(Pos::S) == "B");
  CHECK(V.tiles[1].pending);
  CHECK(V.tiles[1].label == "6");
  CHECK(V.tiles[6].at(Pos::N) == "B");
  CHECK(V.tiles[6].at(Pos::E) == "4");
}

TEST_CASE("band graphs of L, X, Y") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  auto L = band_graph_of(t, sc.L);
  CHECK(L.base.tiles.size() == 11);
  CHECK(shape_string(L.base) == "RURURURURU");
  CHECK(L.base.tiles.front().at(L.glue_first) == "B");
  auto X = band_graph_of(t, sc.X);
  CHECK(X.base.tiles.size() == 2);
  auto Y = band_graph_of(t, sc.Y);
  CHECK(Y.base.tiles.size() == 5);
  // Expansions stay fixed under rotating the crossing list (cut choice).
  Curve yrot{Curve::Kind::Loop, {"3", "2", "1", "3", "6"}, -1};
  CHECK(expansion(t.table, band_graph_of(t, yrot)) == expansion(t.table, Y));
}

TEST_CASE("zig-zag extension for several orbifold points") {
  auto t = standard_triangulation(1, 2);
  auto sc = standard_curves(t);
  CHECK(crossing_string(sc.U.crossings) == "4,2,1,4,");
  CHECK(crossing_string(sc.V.crossings) == "5,6,7,8,3,2,1,3,7,5,");
  auto V = snake_graph_of(t, sc.V);
  std::vector<std::string> labels;
  for (const auto& tl : V.tiles) labels.push_back(tl.label);
  CHECK(crossing_string(labels) == "5,6,7,8,3,2,1,3,7,5,");
}

TEST_CASE("direction reversal does not change the expansion") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  auto check_rev = [&](const Curve& c, int rev_start) {
    Curve r = c;
    std::reverse(r.crossings.begin(), r.crossings.end());
    r.start_cell = rev_start;
    CHECK(expansion(t.table, snake_graph_of(t, r)) ==
          expansion(t.table, snake_graph_of(t, c)));
  };
  check_rev(sc.U, 2);
  check_rev(sc.V, 2);
  Curve cfix{Curve::Kind::Arc, {"1", "3", "5"}, 0};
  check_rev(cfix, 2);
}

TEST_CASE("tracer rejects impossible curves") {
  auto t = standard_triangulation(1, 1);
  Curve boundary{Curve::Kind::Arc, {"B"}, 2};
  CHECK_THROWS_AS(trace(t, boundary), orbifold_error);
  Curve uturn{Curve::Kind::Arc, {"4", "4"}, 2};
  CHECK_THROWS_AS(trace(t, uturn), orbifold_error);
  Curve offcell{Curve::Kind::Arc, {"4", "6"}, 2};
  CHECK_THROWS_AS(trace(t, offcell), orbifold_error);
  Curve noloop{Curve::Kind::Loop, {"4", "2"}, 0};
  CHECK_THROWS_AS(trace(t, noloop), orbifold_error);
}

TEST_CASE("arcs of the triangulation expand to their own variable") {
  auto t = standard_triangulation(1, 1);
  Curve c{Curve::Kind::Arc, {}, -1};
  CHECK_THROWS_AS(snake_graph_of(t, c), orbifold_error);  // use a trivial edge instead
  SnakeGraph e;
  e.trivial_edge = "4";
  CHECK(expansion(t.table, e) == label_x(t.table, "4"));
}

TEST_CASE("semi-closed loop evaluated through its perturbation loop") {
  auto t = standard_triangulation(1, 2);
  Curve gamma{Curve::Kind::SemiClosed, {"7"}, -1};
  Curve loop = perturbation_loop(t, gamma);
  CHECK(crossing_string(loop.crossings) == "6,7,8,7,");
  LaurentPoly v = semi_closed_expansion(t, gamma);
  CHECK(v == expansion(t.table, band_graph_of(t, loop)));
  CHECK(v.is_positive());
  // Monomial denominator: no term has an x-exponent below the crossing
  // profile -(1,2,1) on arcs 6,7,8.
  std::size_t i6 = t.table->x_index("x6"), i7 = t.table->x_index("x7"),
              i8 = t.table->x_index("x8");
  for (const auto& [e, c] : v.terms()) {
    CHECK(e.xe[i6] >= -1);
    CHECK(e.xe[i7] >= -2);
    CHECK(e.xe[i8] >= -1);
  }
  Curve bad{Curve::Kind::SemiClosed, {"5"}, -1};
  CHECK_THROWS_AS(perturbation_loop(t, bad), orbifold_error);
}

TEST_CASE("bangles multiply component values") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  auto empty = bangle(t, {}, {});
  CHECK(empty.value == LaurentPoly::one(t.table));
  auto Lv = curve_value(t, sc.L);
  auto single = bangle(t, {{sc.L, 1}}, {"L"});
  CHECK(single.value == Lv);
  auto dbl = bangle(t, {{sc.L, 2}}, {"L"});
  CHECK(dbl.value == Lv * Lv);
}

TEST_CASE("bracelet recursion against the direct double-winding band graph") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  auto Lv = curve_value(t, sc.L);
  auto yhat = bracelet_yhat(t, sc.L);
  auto b1 = bracelet(t, sc.L, 1, "L");
  CHECK(b1.value == Lv);
  auto b2 = bracelet(t, sc.L, 2, "L");
  CHECK(b2.value == Lv * Lv - LaurentPoly::constant(t.table, 2) * yhat);
  // Brac_2(L) - Bangle{L,L} is -2 times a y-monomial.
  auto diff = b2.value - Lv * Lv;
  CHECK(diff == -(LaurentPoly::constant(t.table, 2) * yhat));
  // The recursion coefficient is pinned by the band graph of the loop that
  // winds around L twice.
  Curve twice{Curve::Kind::Loop, {}, sc.L.start_cell};
  for (int r = 0; r < 2; ++r)
    for (const auto& c : sc.L.crossings) twice.crossings.push_back(c);
  auto direct = expansion(t.table, band_graph_of(t, twice));
  CHECK(direct == b2.value);
  CHECK_THROWS_AS(bracelet(t, sc.L, 0, "L"), orbifold_error);
}

TEST_CASE("bracelet three-term recursion unrolls") {
  auto t = standard_triangulation(1, 1);
  auto sc = standard_curves(t);
  Curve x = sc.X;
  auto z = curve_value(t, x);
  auto yhat = bracelet_yhat(t, x);
  auto b3 = bracelet(t, x, 3, "X");
  auto expect = z * (z * z - LaurentPoly::constant(t.table, 2) * yhat) - yhat * z;
  CHECK(b3.value == expect);
}
