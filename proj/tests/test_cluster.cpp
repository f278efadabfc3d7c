#include <doctest.h>

#include "cluster.hpp"

#include <random>

using namespace snakecalc;

namespace {

Seed g1c1_seed() {
  static Triangulation t = standard_triangulation(1, 1);
  return seed_from_triangulation(t);
}

// Depth-first search over flip sequences for a cluster variable equal to the
// target polynomial; avoids undoing the previous flip.
bool find_variable(const Seed& s, const LaurentPoly& target, int depth,
                   std::vector<std::size_t>& seq, int last) {
  for (std::size_t k = 0; k < s.rank(); ++k) {
    if (s.cluster[k] == target) return true;
  }
  if (depth == 0) return false;
  for (std::size_t k = 0; k < s.rank(); ++k) {
    if (static_cast<int>(k) == last) continue;
    Seed next = mutate(s, k);
    seq.push_back(k);
    if (find_variable(next, target, depth - 1, seq, static_cast<int>(k))) return true;
    seq.pop_back();
  }
  return false;
}

}  // namespace

TEST_CASE("seed from the genus-1 triangulation") {
  Seed s = g1c1_seed();
  CHECK(s.rank() == 6);
  CHECK(s.frozen_labels == std::vector<std::string>{"B"});
  CHECK(s.d == std::vector<int>{1, 1, 1, 1, 1, 2});
  CHECK(db_skew_symmetric(s));
  // Handle arcs 1 and 2 bound two triangles with the same orientation.
  CHECK(s.B[1][0] == 2);
  CHECK(s.B[0][1] == -2);
  // Pending column is doubled, its row is not.
  CHECK(s.B[4][5] == 2);
  CHECK(s.B[2][5] == -2);
  CHECK(s.B[5][4] == -1);
  CHECK(s.B[5][2] == 1);
}

TEST_CASE("mutation is an involution") {
  Seed s = g1c1_seed();
  for (std::size_t k = 0; k < s.rank(); ++k) {
    Seed twice = mutate(mutate(s, k), k);
    CHECK(twice.B == s.B);
    for (std::size_t i = 0; i < s.rank(); ++i) CHECK(twice.cluster[i] == s.cluster[i]);
  }
  CHECK_THROWS_AS(mutate(s, 6), cluster_error);
}

TEST_CASE("rank-one seed exchange") {
  auto table = std::make_shared<VarTable>(std::vector<std::string>{"x1"},
                                          std::vector<std::string>{"y1"});
  Seed s;
  s.table = table;
  s.mutable_labels = {"1"};
  s.B = {{0}, {1}};  // B = (0) plus the principal coefficient row
  s.d = {1};
  s.cluster = {LaurentPoly::x_var(table, 0)};
  validate(s);
  Seed m = mutate(s, 0);
  auto x1 = LaurentPoly::x_var(table, 0);
  auto y1 = LaurentPoly::y_var(table, 0);
  CHECK(m.cluster[0] * x1 == y1 + LaurentPoly::one(table));
}

TEST_CASE("pending arc exchange reproduces the two-term relation") {
  Seed s = g1c1_seed();
  Seed m = mutate(s, 5);  // arc 6 is the pending direction
  auto t = s.table;
  auto x3 = label_x(t, "3"), x5 = label_x(t, "5"), x6 = label_x(t, "6");
  auto y6 = label_y(t, "6");
  CHECK(m.cluster[5] * x6 == y6 * x5 * x5 + x3 * x3);
  // With trivial coefficients this is x_tau x_tau' = x_a^2 + x_b^2.
  CHECK((m.cluster[5] * x6).trivial_coefficients() == x5 * x5 + x3 * x3);
}

TEST_CASE("dB skew-symmetry and the Laurent property on random sequences") {
  Seed s0 = g1c1_seed();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dir(0, s0.rank() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    Seed s = s0;
    int len = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) {
      s = mutate(s, dir(rng));  // throws on any inexact division
      CHECK(db_skew_symmetric(s));
    }
    for (const auto& v : s.cluster) CHECK(!v.is_zero());
  }
}

TEST_CASE("Laurent property for the other fixture seeds") {
  std::mt19937 rng(8);
  for (auto [g, c] : {std::pair{2, 1}, std::pair{1, 2}}) {
    Triangulation t = standard_triangulation(g, c);
    Seed s = seed_from_triangulation(t);
    std::uniform_int_distribution<std::size_t> dir(0, s.rank() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      Seed cur = s;
      for (int i = 0; i < 6; ++i) cur = mutate(cur, dir(rng));  // throws if not Laurent
      CHECK(db_skew_symmetric(cur));
    }
  }
}

TEST_CASE("coefficient specialization commutes with mutation") {
  Seed s = g1c1_seed();
  Seed triv = s;
  triv.principal = false;
  std::vector<std::size_t> flips{3, 0, 5, 2};
  Seed a = mutate_along(s, flips);
  Seed b = mutate_along(triv, flips);
  std::map<std::string, LaurentPoly> ones;
  for (const auto& y : s.table->y_names())
    ones.emplace(y, LaurentPoly::one(s.table));
  for (std::size_t i = 0; i < s.rank(); ++i)
    CHECK(a.cluster[i].substitute(ones) == b.cluster[i]);
}

TEST_CASE("variable_along") {
  Seed s = g1c1_seed();
  CHECK(variable_along(s, {}, 2) == label_x(s.table, "3"));
  CHECK_THROWS_AS(variable_along(s, {}, 9), cluster_error);
}

TEST_CASE("snake graph expansions agree with the mutation oracle") {
  Triangulation t = standard_triangulation(1, 1);
  Seed s = seed_from_triangulation(t);
  auto arc_value = [&](std::initializer_list<const char*> cr, int start) {
    Curve c{Curve::Kind::Arc, {}, start};
    for (auto* l : cr) c.crossings.push_back(l);
    return expansion(t.table, snake_graph_of(t, c));
  };
  std::vector<std::size_t> seq;
  SUBCASE("pending flip") {
    CHECK(find_variable(s, arc_value({"6"}, 3), 1, seq, -1));
  }
  SUBCASE("the arc D of Figure 7") {
    CHECK(find_variable(s, arc_value({"4", "2"}, 2), 2, seq, -1));
  }
  SUBCASE("the arc C of Figure 7") {
    CHECK(find_variable(s, arc_value({"1", "3", "5"}, 0), 3, seq, -1));
  }
  SUBCASE("the arc U") {
    CHECK(find_variable(s, arc_value({"4", "2", "1", "4"}, 2), 4, seq, -1));
  }
}
