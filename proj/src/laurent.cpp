#include "laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace snakecalc {

VarTable::VarTable(std::vector<std::string> x_names, std::vector<std::string> y_names)
    : x_names_(std::move(x_names)), y_names_(std::move(y_names)) {
  if (x_names_.size() != y_names_.size())
    throw ring_error("VarTable: x and y name lists must have equal length");
  for (std::size_t i = 0; i < x_names_.size(); ++i) {
    if (!x_idx_.emplace(x_names_[i], i).second)
      throw ring_error("VarTable: duplicate x name " + x_names_[i]);
    if (!y_idx_.emplace(y_names_[i], i).second)
      throw ring_error("VarTable: duplicate y name " + y_names_[i]);
  }
  for (const auto& n : x_names_)
    if (y_idx_.count(n)) throw ring_error("VarTable: name used for both x and y: " + n);
}

std::size_t VarTable::x_index(const std::string& name) const {
  auto it = x_idx_.find(name);
  if (it == x_idx_.end()) throw ring_error("unknown x variable: " + name);
  return it->second;
}

std::size_t VarTable::y_index(const std::string& name) const {
  auto it = y_idx_.find(name);
  if (it == y_idx_.end()) throw ring_error("unknown y variable: " + name);
  return it->second;
}

std::optional<std::size_t> VarTable::find_x(const std::string& name) const {
  auto it = x_idx_.find(name);
  if (it == x_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> VarTable::find_y(const std::string& name) const {
  auto it = y_idx_.find(name);
  if (it == y_idx_.end()) return std::nullopt;
  return it->second;
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
  ExpVec r = *this;
  for (std::size_t i = 0; i < xe.size(); ++i) r.xe[i] += o.xe[i];
  for (std::size_t i = 0; i < ye.size(); ++i) r.ye[i] += o.ye[i];
  return r;
}

ExpVec ExpVec::operator-(const ExpVec& o) const {
  ExpVec r = *this;
  for (std::size_t i = 0; i < xe.size(); ++i) r.xe[i] -= o.xe[i];
  for (std::size_t i = 0; i < ye.size(); ++i) r.ye[i] -= o.ye[i];
  return r;
}

bool ExpVec::is_zero() const {
  return std::all_of(xe.begin(), xe.end(), [](auto v) { return v == 0; }) &&
         std::all_of(ye.begin(), ye.end(), [](auto v) { return v == 0; });
}

bool ExpVec::ye_nonnegative() const {
  return std::all_of(ye.begin(), ye.end(), [](auto v) { return v >= 0; });
}

LaurentPoly LaurentPoly::constant(VarTablePtr table, BigInt c) {
  LaurentPoly p(table);
  if (c != 0) p.terms_.emplace(ExpVec::zero(table->size()), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(VarTablePtr table, ExpVec e, BigInt c) {
  if (!e.ye_nonnegative()) throw ring_error("monomial: negative y exponent");
  LaurentPoly p(table);
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::x_var(const VarTablePtr& table, std::size_t i, std::int32_t power) {
  ExpVec e = ExpVec::zero(table->size());
  e.xe.at(i) = power;
  return monomial(table, std::move(e));
}

LaurentPoly LaurentPoly::y_var(const VarTablePtr& table, std::size_t i, std::int32_t power) {
  if (power < 0) throw ring_error("y variables cannot be inverted");
  ExpVec e = ExpVec::zero(table->size());
  e.ye.at(i) = power;
  return monomial(table, std::move(e));
}

void LaurentPoly::check_same_table(const LaurentPoly& o) const {
  if (table_ != o.table_ && !(*table_ == *o.table_))
    throw ring_error("operands use different variable tables");
}

void LaurentPoly::insert_term(const ExpVec& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_table(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same_table(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(table_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_table(o);
  LaurentPoly r(table_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.insert_term(ea + eb, ca * cb);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return (*table_ == *o.table_) && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::div_monomial(const ExpVec& m) const {
  LaurentPoly r(table_);
  for (const auto& [e, c] : terms_) {
    ExpVec q = e - m;
    if (!q.ye_nonnegative()) throw ring_error("div_monomial: inexact y division");
    r.terms_.emplace(std::move(q), c);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& images) const {
  const std::size_t n = table_->size();
  // Split the map into per-index images; identity elsewhere.
  std::vector<const LaurentPoly*> ximg(n, nullptr), yimg(n, nullptr);
  for (const auto& [name, img] : images) {
    if (!(*img.table() == *table_)) throw ring_error("substitute: image uses a different table");
    if (auto i = table_->find_x(name)) {
      ximg[*i] = &img;
    } else if (auto j = table_->find_y(name)) {
      yimg[*j] = &img;
    } else {
      throw ring_error("substitute: unknown variable " + name);
    }
  }
  // Precondition check: non-monomial images of x-variables that appear with
  // a negative exponent are rejected.
  for (std::size_t i = 0; i < n; ++i) {
    if (ximg[i] && !ximg[i]->is_monomial()) {
      for (const auto& [e, c] : terms_)
        if (e.xe[i] < 0)
          throw ring_error("substitute: non-monomial image of " + table_->x_names()[i] +
                           " which occurs with negative exponent");
    }
    if (ximg[i] && ximg[i]->is_zero())
      throw ring_error("substitute: zero image of x variable " + table_->x_names()[i]);
  }

  LaurentPoly result(table_);
  for (const auto& [e, c] : terms_) {
    ExpVec rest = e;
    LaurentPoly factor = LaurentPoly::constant(table_, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (ximg[i] && e.xe[i] != 0) {
        rest.xe[i] = 0;
        std::int32_t k = e.xe[i];
        if (ximg[i]->is_monomial()) {
          ExpVec me = ximg[i]->monomial_exponent();
          BigInt mc = ximg[i]->monomial_coefficient();
          ExpVec pe = ExpVec::zero(n);
          BigInt pc = 1;
          if (k >= 0) {
            for (int t = 0; t < k; ++t) {
              pe = pe + me;
              pc *= mc;
            }
          } else {
            if (mc != 1 && mc != -1)
              throw ring_error("substitute: cannot invert monomial with coefficient != ±1");
            for (int t = 0; t < -k; ++t) {
              pe = pe - me;
              pc *= mc;  // ±1
            }
            if (!pe.ye_nonnegative())
              throw ring_error("substitute: inversion produced negative y exponent");
          }
          factor = factor * LaurentPoly::monomial(table_, pe, pc);
        } else {
          LaurentPoly pw = LaurentPoly::one(table_);
          for (int t = 0; t < k; ++t) pw = pw * (*ximg[i]);
          factor = factor * pw;
        }
      }
      if (yimg[i] && e.ye[i] != 0) {
        rest.ye[i] = 0;
        LaurentPoly pw = LaurentPoly::one(table_);
        for (int t = 0; t < e.ye[i]; ++t) pw = pw * (*yimg[i]);
        factor = factor * pw;
      }
    }
    result = result + factor * LaurentPoly::monomial(table_, rest);
  }
  return result;
}

LaurentPoly LaurentPoly::trivial_coefficients() const {
  LaurentPoly r(table_);
  for (const auto& [e, c] : terms_) {
    ExpVec q = e;
    std::fill(q.ye.begin(), q.ye.end(), 0);
    r.insert_term(q, c);
  }
  return r;
}

BigInt LaurentPoly::eval(const std::map<std::string, BigInt>& assignment) const {
  const std::size_t n = table_->size();
  std::vector<BigInt> xv(n), yv(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ix = assignment.find(table_->x_names()[i]);
    auto iy = assignment.find(table_->y_names()[i]);
    if (ix == assignment.end() || iy == assignment.end())
      throw ring_error("eval: missing assignment for index " + std::to_string(i));
    xv[i] = ix->second;
    yv[i] = iy->second;
  }
  // Clear denominators: evaluate p * prod x_i^{s_i} with s_i = max(0, -min exp).
  std::vector<std::int32_t> shift(n, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < n; ++i) shift[i] = std::max(shift[i], -e.xe[i]);
  BigInt num = 0;
  for (const auto& [e, c] : terms_) {
    BigInt t = c;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::int32_t k = 0; k < e.xe[i] + shift[i]; ++k) t *= xv[i];
      for (std::int32_t k = 0; k < e.ye[i]; ++k) t *= yv[i];
    }
    num += t;
  }
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::int32_t k = 0; k < shift[i]; ++k) den *= xv[i];
  if (den == 0) throw ring_error("eval: zero assigned to inverted variable");
  BigInt q = num / den;
  if (q * den != num) throw ring_error("eval: inexact division");
  return q;
}

bool LaurentPoly::is_positive() const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

const ExpVec& LaurentPoly::monomial_exponent() const {
  if (!is_monomial()) throw ring_error("not a monomial");
  return terms_.begin()->first;
}

const BigInt& LaurentPoly::monomial_coefficient() const {
  if (!is_monomial()) throw ring_error("not a monomial");
  return terms_.begin()->second;
}

ExpVec LaurentPoly::leading_exponent() const {
  if (terms_.empty()) throw ring_error("leading_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading term first: descending canonical order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    out << it->second.str();
    const ExpVec& e = it->first;
    for (std::size_t i = 0; i < e.xe.size(); ++i) {
      if (e.xe[i] == 0) continue;
      out << "*" << table_->x_names()[i];
      if (e.xe[i] != 1) out << "^" << e.xe[i];
    }
    for (std::size_t i = 0; i < e.ye.size(); ++i) {
      if (e.ye[i] == 0) continue;
      out << "*" << table_->y_names()[i];
      if (e.ye[i] != 1) out << "^" << e.ye[i];
    }
  }
  return out.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    return s.substr(b, pos - b);
  }
  BigInt integer() {
    skip_ws();
    std::size_t b = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (b == pos) throw ring_error("parse: expected integer at position " + std::to_string(b));
    return BigInt(s.substr(b, pos - b));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const VarTablePtr& table, const std::string& text) {
  Lexer lx{text};
  LaurentPoly result(table);
  if (lx.eof()) throw ring_error("parse: empty input");
  bool first = true;
  while (!lx.eof()) {
    if (!first && !lx.accept('+')) throw ring_error("parse: expected '+' between terms");
    first = false;
    lx.skip_ws();
    BigInt coef = 1;
    bool have_coef = false;
    char c = lx.peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      coef = lx.integer();
      have_coef = true;
    }
    ExpVec e = ExpVec::zero(table->size());
    bool expect_factor = !have_coef;
    while (expect_factor || lx.accept('*')) {
      expect_factor = false;
      std::string name = lx.ident();
      if (name.empty()) throw ring_error("parse: expected variable name");
      std::int32_t power = 1;
      if (lx.accept('^')) power = static_cast<std::int32_t>(lx.integer());
      if (auto i = table->find_x(name)) {
        e.xe[*i] += power;
      } else if (auto j = table->find_y(name)) {
        if (power < 0) throw ring_error("parse: negative y exponent");
        e.ye[*j] += power;
      } else {
        throw ring_error("parse: unknown variable " + name);
      }
    }
    if (!e.ye_nonnegative()) throw ring_error("parse: negative y exponent");
    result.insert_term(e, coef);
  }
  return result;
}

}  // namespace snakecalc
