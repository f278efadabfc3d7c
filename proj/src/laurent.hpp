#ifndef SNAKECALC_LAURENT_HPP
#define SNAKECALC_LAURENT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace snakecalc {

using BigInt = boost::multiprecision::cpp_int;

// Ring error: table mismatch, bad substitution, division failure, parse error.
class ring_error : public std::runtime_error {
 public:
  explicit ring_error(const std::string& what) : std::runtime_error(what) {}
};

// Ordered x/y variable lists. x and y lists have equal length; y_i is the
// principal coefficient tracking x_i. Boundary segments are ordinary
// x-variables whose y-partner simply never occurs with positive exponent.
class VarTable {
 public:
  VarTable(std::vector<std::string> x_names, std::vector<std::string> y_names);

  std::size_t size() const { return x_names_.size(); }
  const std::vector<std::string>& x_names() const { return x_names_; }
  const std::vector<std::string>& y_names() const { return y_names_; }
  // Index of a variable by its x-name or y-name; throws if unknown.
  std::size_t x_index(const std::string& name) const;
  std::size_t y_index(const std::string& name) const;
  std::optional<std::size_t> find_x(const std::string& name) const;
  std::optional<std::size_t> find_y(const std::string& name) const;

  bool operator==(const VarTable& o) const {
    return x_names_ == o.x_names_ && y_names_ == o.y_names_;
  }

 private:
  std::vector<std::string> x_names_, y_names_;
  std::map<std::string, std::size_t> x_idx_, y_idx_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// Exponent vector: integer x-exponents, non-negative y-exponents.
struct ExpVec {
  std::vector<std::int32_t> xe, ye;

  static ExpVec zero(std::size_t n) { return ExpVec{std::vector<std::int32_t>(n, 0), std::vector<std::int32_t>(n, 0)}; }

  ExpVec operator+(const ExpVec& o) const;
  ExpVec operator-(const ExpVec& o) const;  // may fail the ye >= 0 invariant; checked by callers
  bool is_zero() const;
  bool ye_nonnegative() const;

  // Canonical order: lexicographic on concatenated (xe, ye).
  friend auto operator<=>(const ExpVec& a, const ExpVec& b) = default;
};

// Exact multivariate Laurent polynomial over arbitrary-precision integers.
// Terms are held in canonical order; no zero coefficients are stored.
// Values are immutable after construction: all ops return new polynomials.
class LaurentPoly {
 public:
  explicit LaurentPoly(VarTablePtr table) : table_(std::move(table)) {}

  static LaurentPoly zero(VarTablePtr table) { return LaurentPoly(std::move(table)); }
  static LaurentPoly constant(VarTablePtr table, BigInt c);
  static LaurentPoly one(VarTablePtr table) { return constant(std::move(table), 1); }
  static LaurentPoly monomial(VarTablePtr table, ExpVec e, BigInt c = 1);
  static LaurentPoly x_var(const VarTablePtr& table, std::size_t i, std::int32_t power = 1);
  static LaurentPoly y_var(const VarTablePtr& table, std::size_t i, std::int32_t power = 1);

  const VarTablePtr& table() const { return table_; }
  const std::map<ExpVec, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const;

  // Exact division by a monomial (x-part may be negative, y-part must keep
  // every term's y-exponents non-negative). Throws ring_error otherwise.
  LaurentPoly div_monomial(const ExpVec& m) const;

  // Simultaneous substitution x/y-name -> polynomial. Substituting a
  // non-monomial for a variable occurring with negative exponent throws.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& images) const;

  // Specialize every y-variable to 1 (trivial coefficients).
  LaurentPoly trivial_coefficients() const;

  // Exact integer evaluation; assignment maps each variable name to a value.
  // x-variables with negative exponents require the value to divide exactly.
  BigInt eval(const std::map<std::string, BigInt>& assignment) const;

  bool is_positive() const;  // every stored coefficient > 0
  bool is_monomial() const { return terms_.size() == 1; }
  // Single term accessors; throw unless is_monomial().
  const ExpVec& monomial_exponent() const;
  const BigInt& monomial_coefficient() const;

  // Maximal exponent under lex on x with y tiebreak (the canonical order).
  ExpVec leading_exponent() const;

  std::string to_string() const;
  static LaurentPoly parse(const VarTablePtr& table, const std::string& text);

 private:
  void insert_term(const ExpVec& e, const BigInt& c);
  void check_same_table(const LaurentPoly& o) const;

  VarTablePtr table_;
  std::map<ExpVec, BigInt> terms_;
};

}  // namespace snakecalc

#endif
