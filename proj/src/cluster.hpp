#ifndef SNAKECALC_CLUSTER_HPP
#define SNAKECALC_CLUSTER_HPP

#include "orbifold.hpp"

#include <vector>

namespace snakecalc {

class cluster_error : public std::runtime_error {
 public:
  explicit cluster_error(const std::string& what) : std::runtime_error(what) {}
};

// Skew-symmetrizable seed with principal coefficients. Rows of the extended
// exchange matrix: n mutable arcs, then frozen boundary rows, then the n
// coefficient rows (c-vectors, initially the identity).
struct Seed {
  VarTablePtr table;
  std::vector<std::string> mutable_labels;  // matrix column order
  std::vector<std::string> frozen_labels;
  std::vector<std::vector<int>> B;  // (n + f + n) x n
  std::vector<int> d;               // skew-symmetrizer diagonal, size n
  std::vector<LaurentPoly> cluster; // size n, Laurent polynomials in the initial variables
  bool principal = true;            // false: trivial coefficients (no y factors)

  std::size_t rank() const { return mutable_labels.size(); }
};

Seed seed_from_triangulation(const Triangulation& t);
void validate(const Seed& s);

// Standard matrix mutation plus the exchange of cluster[k]; k is 0-based.
Seed mutate(const Seed& s, std::size_t k);
Seed mutate_along(const Seed& s, const std::vector<std::size_t>& flips);
LaurentPoly variable_along(const Seed& s, const std::vector<std::size_t>& flips, std::size_t k);

// True iff d*B is skew-symmetric on the mutable block.
bool db_skew_symmetric(const Seed& s);

// Exact polynomial division (throws cluster_error if inexact); exposed for
// the Laurent-property checks.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace snakecalc

#endif
