// Bounded breadth-first search over the exchange graph for flip sequences
// reproducing the fixture arc expansions; the results are frozen in
// src/fixtures.cpp and re-verified on every fixture build.
#include "cluster.hpp"
#include <cstdio>
#include <set>
#include <queue>
using namespace snakecalc;
int main() {
  Triangulation t = standard_triangulation(1, 1);
  Seed s0 = seed_from_triangulation(t);
  auto arcv = [&](std::vector<std::string> cr, int st) {
    Curve c{Curve::Kind::Arc, std::move(cr), st};
    return expansion(t.table, snake_graph_of(t, c));
  };
  std::vector<std::pair<std::string, LaurentPoly>> targets;
  targets.emplace_back("pending", arcv({"6"}, 3));
  targets.emplace_back("D", arcv({"4", "2"}, 2));
  targets.emplace_back("C", arcv({"1", "3", "5"}, 0));
  targets.emplace_back("U", arcv({"4", "2", "1", "4"}, 2));
  targets.emplace_back("V", arcv({"5", "6", "3", "2", "1", "3", "5"}, 2));
  targets.emplace_back("H", arcv({"3", "5", "4"}, 1));
  struct Node { Seed s; std::vector<std::size_t> seq; };
  std::queue<Node> q;
  q.push({s0, {}});
  std::set<std::string> seen;
  int expanded = 0;
  while (!q.empty() && !targets.empty() && expanded < 60000) {
    Node n = q.front(); q.pop();
    if (n.seq.size() >= 7) continue;
    for (std::size_t k = 0; k < 6; ++k) {
      if (!n.seq.empty() && n.seq.back() == k) continue;
      Seed m = mutate(n.s, k);
      ++expanded;
      std::string key;
      { std::vector<std::string> vs; std::size_t tot = 0;
        for (auto& v : m.cluster) { vs.push_back(v.to_string()); tot += vs.back().size(); }
        std::sort(vs.begin(), vs.end());
        for (auto& v : vs) key += v + ";";
        if (tot > 20000) continue;
      }
      if (!seen.insert(key).second) continue;
      auto seq = n.seq; seq.push_back(k);
      for (auto it = targets.begin(); it != targets.end();) {
        bool hit = false;
        for (std::size_t j = 0; j < 6; ++j)
          if (m.cluster[j] == it->second) {
            std::printf("%s: seq =", it->first.c_str());
            for (auto f : seq) std::printf(" %zu", f + 1);
            std::printf("  (variable %zu)\n", j + 1);
            std::fflush(stdout);
            hit = true;
          }
        it = hit ? targets.erase(it) : ++it;
      }
      q.push({std::move(m), std::move(seq)});
    }
  }
  std::printf("expanded %d seeds; %zu unresolved\n", expanded, targets.size());
  for (auto& [n, v] : targets) std::printf("  missing: %s\n", n.c_str());
  return 0;
}
