#include "cluster.hpp"

#include <algorithm>

namespace snakecalc {

Seed seed_from_triangulation(const Triangulation& t) {
  Seed s;
  s.table = t.table;
  std::vector<int> col_of(t.labels.size(), -1);
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (t.is_boundary[i])
      s.frozen_labels.push_back(t.labels[i]);
    else
      s.mutable_labels.push_back(t.labels[i]);
  }
  const std::size_t n = s.mutable_labels.size();
  const std::size_t f = s.frozen_labels.size();
  auto row_of = [&](int arc) -> int {
    const std::string& l = t.labels[arc];
    for (std::size_t i = 0; i < n; ++i)
      if (s.mutable_labels[i] == l) return static_cast<int>(i);
    for (std::size_t i = 0; i < f; ++i)
      if (s.frozen_labels[i] == l) return static_cast<int>(n + i);
    return -1;
  };
  s.B.assign(n + f + n, std::vector<int>(n, 0));
  // Counterclockwise consecutive side pairs contribute +1, the transpose -1;
  // pending columns are doubled (the digon counts as the same triangle on
  // both sheets of its unfolding).
  auto contribute = [&](int a, int b) {
    int ra = row_of(a), rb = row_of(b);
    int ca = (a < static_cast<int>(t.labels.size()) && !t.is_boundary[a]) ? row_of(a) : -1;
    int cb = (b < static_cast<int>(t.labels.size()) && !t.is_boundary[b]) ? row_of(b) : -1;
    if (cb >= 0 && cb < static_cast<int>(n) && ra >= 0)
      s.B[ra][cb] += t.is_pending[b] ? 2 : 1;
    if (ca >= 0 && ca < static_cast<int>(n) && rb >= 0)
      s.B[rb][ca] -= t.is_pending[a] ? 2 : 1;
  };
  for (const auto& cell : t.cells) {
    std::vector<int> sides;
    for (const auto& st : cell.walk) sides.push_back(st.arc);
    if (cell.is_digon()) sides.push_back(cell.pending);  // ccw (inner, outer, pending)
    for (std::size_t i = 0; i < sides.size(); ++i)
      contribute(sides[i], sides[(i + 1) % sides.size()]);
  }
  s.d.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (t.is_pending[t.id_of(s.mutable_labels[i])]) s.d[i] = 2;
  // Principal coefficient rows.
  for (std::size_t i = 0; i < n; ++i) s.B[n + f + i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    s.cluster.push_back(label_x(t.table, s.mutable_labels[i]));
  validate(s);
  return s;
}

void validate(const Seed& s) {
  const std::size_t n = s.rank();
  if (s.B.size() != n + s.frozen_labels.size() + n)
    throw cluster_error("seed matrix has wrong row count");
  for (const auto& row : s.B)
    if (row.size() != n) throw cluster_error("seed matrix has wrong column count");
  if (s.d.size() != n || s.cluster.size() != n) throw cluster_error("seed size mismatch");
  if (!db_skew_symmetric(s)) throw cluster_error("d*B is not skew-symmetric");
}

bool db_skew_symmetric(const Seed& s) {
  const std::size_t n = s.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.d[i] * s.B[i][j] != -s.d[j] * s.B[j][i]) return false;
  return true;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw cluster_error("division by zero polynomial");
  if (den.is_monomial()) {
    const BigInt& c = den.monomial_coefficient();
    LaurentPoly q = num.div_monomial(den.monomial_exponent());
    if (c == 1) return q;
    LaurentPoly out(num.table());
    for (const auto& [e, cf] : q.terms()) {
      BigInt qq = cf / c;
      if (qq * c != cf) throw cluster_error("inexact division");
      out = out + LaurentPoly::monomial(num.table(), e, qq);
    }
    return out;
  }
  // Long division by leading terms under the canonical order.
  LaurentPoly r = num;
  LaurentPoly quot(num.table());
  const ExpVec dl = den.leading_exponent();
  const BigInt dc = den.terms().at(dl);
  std::size_t guard = num.term_count() * den.term_count() + num.term_count() + 16;
  while (!r.is_zero()) {
    if (guard-- == 0) throw cluster_error("inexact division (no termination)");
    ExpVec rl = r.leading_exponent();
    BigInt rc = r.terms().at(rl);
    BigInt q = rc / dc;
    if (q * dc != rc) throw cluster_error("inexact division (coefficient)");
    ExpVec m = rl - dl;
    if (!m.ye_nonnegative()) throw cluster_error("inexact division (y exponent)");
    LaurentPoly t = LaurentPoly::monomial(num.table(), m, q);
    quot = quot + t;
    r = r - t * den;
    if (!r.is_zero() && !(r.leading_exponent() < rl))
      throw cluster_error("inexact division (leading term did not drop)");
  }
  return quot;
}

Seed mutate(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k >= n) throw cluster_error("mutation index out of range");
  Seed out = s;
  const auto& B = s.B;
  // Matrix mutation on every row (mutable, frozen, coefficient).
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.B[i][j] = -B[i][j];
      } else {
        int p = B[i][k] > 0 ? B[i][k] : 0;
        int m = B[i][k] < 0 ? -B[i][k] : 0;
        int pk = B[k][j] > 0 ? B[k][j] : 0;
        int mk = B[k][j] < 0 ? -B[k][j] : 0;
        out.B[i][j] = B[i][j] + p * pk - m * mk;
      }
    }
  }
  // Exchange relation with principal coefficients.
  const std::size_t f = s.frozen_labels.size();
  LaurentPoly pos = LaurentPoly::one(s.table), neg = LaurentPoly::one(s.table);
  for (std::size_t i = 0; i < n; ++i) {
    int b = B[i][k];
    for (int q = 0; q < b; ++q) pos = pos * s.cluster[i];
    for (int q = 0; q < -b; ++q) neg = neg * s.cluster[i];
  }
  for (std::size_t i = 0; i < f; ++i) {
    int b = B[n + i][k];
    LaurentPoly xf = label_x(s.table, s.frozen_labels[i]);
    for (int q = 0; q < b; ++q) pos = pos * xf;
    for (int q = 0; q < -b; ++q) neg = neg * xf;
  }
  if (s.principal) {
    for (std::size_t i = 0; i < n; ++i) {
      int c = B[n + f + i][k];
      LaurentPoly yi = label_y(s.table, s.mutable_labels[i]);
      for (int q = 0; q < c; ++q) pos = pos * yi;
      for (int q = 0; q < -c; ++q) neg = neg * yi;
    }
  }
  out.cluster[k] = exact_div(pos + neg, s.cluster[k]);
  return out;
}

Seed mutate_along(const Seed& s, const std::vector<std::size_t>& flips) {
  Seed cur = s;
  for (std::size_t k : flips) cur = mutate(cur, k);
  return cur;
}

LaurentPoly variable_along(const Seed& s, const std::vector<std::size_t>& flips, std::size_t k) {
  Seed cur = mutate_along(s, flips);
  if (k >= cur.cluster.size()) throw cluster_error("variable index out of range");
  return cur.cluster[k];
}

}  // namespace snakecalc
