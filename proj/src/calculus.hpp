#ifndef SNAKECALC_CALCULUS_HPP
#define SNAKECALC_CALCULUS_HPP

#include "snakegraph.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace snakecalc {

class calculus_error : public std::runtime_error {
 public:
  explicit calculus_error(const std::string& what) : std::runtime_error(what) {}
};

using GraphAny = std::variant<SnakeGraph, BandGraph>;

// Named graphs sharing one variable table.
struct GraphBundle {
  VarTablePtr table;
  std::map<std::string, GraphAny> graphs;

  const GraphAny& get(const std::string& name) const;
  LaurentPoly value(const std::string& name) const;  // cached expansion
  void put(const std::string& name, GraphAny g);

 private:
  mutable std::map<std::string, LaurentPoly> cache_;
};

// One product term: a y-monomial (coefficient one) times graph factors.
struct Term {
  std::string y;                     // canonical monomial string, "1" for none
  std::vector<std::string> factors;  // bundle names

  bool operator==(const Term&) const = default;
};

struct Identity {
  std::string name;
  std::vector<Term> lhs, rhs;
  // Variables specialized before comparison (e.g. the boundary label at 1
  // where the figure's relation only holds after specialization).
  std::map<std::string, std::string> specialize;
};

struct VerifyResult {
  bool ok = false;
  // First surviving monomial of lhs - rhs when not ok.
  std::string counterexample;
};

LaurentPoly term_value(const GraphBundle& b, const Term& t);
LaurentPoly side_value(const GraphBundle& b, const std::vector<Term>& side);
VerifyResult verify(const GraphBundle& b, const Identity& id);

struct SuiteReport {
  struct Line {
    std::string name;
    bool ok;
    double millis;
    std::string counterexample;
  };
  std::vector<Line> lines;
  bool all_ok() const;
  std::string to_text() const;
};

SuiteReport verify_suite(const GraphBundle& b, const std::vector<Identity>& ids);

// Constructive snake-graph calculus, for the overlap patterns the paper
// exercises. Every returned identity is re-verified before it is returned.
//
// graft of two snake graphs across a shared boundary label adjacent to the
// end tiles: g1*g2 = (g1~g2)*x_at + y * (g1 minus last)(g2 minus first).
// graft of a band graph with a trivial edge on a tile label: band*x_at =
// y * (band cut open at the tile, tile removed) + monomial.
struct GraftResult {
  Identity identity;
  std::vector<std::pair<std::string, GraphAny>> new_graphs;  // to add to the bundle
};

GraftResult graft(const GraphBundle& b, const std::string& g1, const std::string& g2,
                  const std::string& at);
// self-grafting at two same-labeled boundary edges on the first and last
// tiles, closing the graph into a band.
GraftResult self_graft(const GraphBundle& b, const std::string& g, const std::string& at);

}  // namespace snakecalc

#endif
