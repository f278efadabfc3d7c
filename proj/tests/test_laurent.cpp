#include <doctest.h>

#include "laurent.hpp"

#include <random>

using namespace snakecalc;

namespace {

VarTablePtr table2() {
  return std::make_shared<VarTable>(std::vector<std::string>{"x1", "x2"},
                                    std::vector<std::string>{"y1", "y2"});
}

LaurentPoly random_poly(const VarTablePtr& t, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), coef(-3, 3), xe(-2, 2), ye(0, 2);
  LaurentPoly p(t);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    ExpVec e = ExpVec::zero(t->size());
    for (auto& v : e.xe) v = xe(rng);
    for (auto& v : e.ye) v = ye(rng);
    p = p + LaurentPoly::monomial(t, e, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("additive identity and cancellation") {
  auto t = table2();
  auto x1 = LaurentPoly::x_var(t, 0);
  auto y1 = LaurentPoly::y_var(t, 0);
  auto p = x1 * x1 + y1;
  CHECK(p + LaurentPoly::zero(t) == p);
  CHECK((x1 + (-x1)).is_zero());
  CHECK((x1 + y1) + (x1 - y1) == LaurentPoly::constant(t, 2) * x1);
}

TEST_CASE("multiplication adds exponents") {
  auto t = table2();
  auto x1 = LaurentPoly::x_var(t, 0);
  auto x1inv = LaurentPoly::x_var(t, 0, -1);
  auto y1 = LaurentPoly::y_var(t, 0);
  CHECK((x1 + y1 * x1inv) * x1 == x1 * x1 + y1);
  std::mt19937 rng(7);
  auto p = random_poly(t, rng);
  CHECK(p * LaurentPoly::one(t) == p);
}

TEST_CASE("substitution") {
  auto t = table2();
  auto x1 = LaurentPoly::x_var(t, 0);
  auto x2 = LaurentPoly::x_var(t, 1);
  CHECK((x1 + x2).substitute({{"x2", x1}}) == LaurentPoly::constant(t, 2) * x1);
  auto p = x1 * x1 + LaurentPoly::y_var(t, 1);
  CHECK(p.substitute({}) == p);
  // Non-monomial image of a negatively occurring variable is rejected.
  auto q = LaurentPoly::x_var(t, 0, -1);
  CHECK_THROWS_AS(q.substitute({{"x1", x1 + x2}}), ring_error);
  // Composition with disjoint domains equals the combined map.
  auto m1 = std::map<std::string, LaurentPoly>{{"x1", x2 * x2}};
  auto m2 = std::map<std::string, LaurentPoly>{{"y1", LaurentPoly::one(t)}};
  auto both = std::map<std::string, LaurentPoly>{{"x1", x2 * x2}, {"y1", LaurentPoly::one(t)}};
  auto r = x1 * x1 + LaurentPoly::y_var(t, 0) * x1;
  CHECK(r.substitute(m1).substitute(m2) == r.substitute(both));
}

TEST_CASE("positivity and leading exponent") {
  auto t = table2();
  auto x1 = LaurentPoly::x_var(t, 0);
  auto x2 = LaurentPoly::x_var(t, 1);
  auto y1 = LaurentPoly::y_var(t, 0);
  CHECK((x1 * x1 + y1).is_positive());
  CHECK_FALSE((x1 - x2).is_positive());
  CHECK_FALSE(LaurentPoly::zero(t).is_positive());
  ExpVec lead = (x1 * x1 + y1).leading_exponent();
  CHECK(lead.xe == std::vector<std::int32_t>{2, 0});
  CHECK((x1 * x2).leading_exponent() == (x1 * x2).monomial_exponent());
  CHECK_THROWS_AS(LaurentPoly::zero(t).leading_exponent(), ring_error);
}

TEST_CASE("ring axioms on random polynomials") {
  auto t = table2();
  std::mt19937 rng(42);
  for (int i = 0; i < 50; ++i) {
    auto a = random_poly(t, rng), b = random_poly(t, rng), c = random_poly(t, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("sum and product of positive polynomials is positive") {
  auto t = table2();
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto a = random_poly(t, rng), b = random_poly(t, rng);
    // force positive coefficients
    LaurentPoly ap(t), bp(t);
    for (const auto& [e, c] : a.terms()) ap = ap + LaurentPoly::monomial(t, e, c > 0 ? c : -c);
    for (const auto& [e, c] : b.terms()) bp = bp + LaurentPoly::monomial(t, e, c > 0 ? c : -c);
    if (ap.is_zero() || bp.is_zero()) continue;
    CHECK((ap + bp).is_positive());
    CHECK((ap * bp).is_positive());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto t = table2();
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(1, 7);
  for (int i = 0; i < 25; ++i) {
    auto a = random_poly(t, rng), b = random_poly(t, rng);
    std::map<std::string, BigInt> v{{"x1", val(rng)}, {"x2", val(rng)},
                                    {"y1", val(rng)}, {"y2", val(rng)}};
    // Clear denominators so that division is exact term by term: evaluate
    // a * x1^4 * x2^4 instead.
    ExpVec shift = ExpVec::zero(2);
    shift.xe = {4, 4};
    auto sh = LaurentPoly::monomial(t, shift);
    CHECK((a * b * sh * sh).eval(v) == (a * sh).eval(v) * (b * sh).eval(v));
    CHECK((a * sh + b * sh).eval(v) == (a * sh).eval(v) + (b * sh).eval(v));
  }
}

TEST_CASE("canonical text round-trips bit-exactly") {
  auto t = table2();
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    auto p = random_poly(t, rng);
    std::string s = p.to_string();
    auto q = LaurentPoly::parse(t, s);
    CHECK(q == p);
    CHECK(q.to_string() == s);
  }
  CHECK(LaurentPoly::parse(t, "0").is_zero());
  CHECK(LaurentPoly::parse(t, "1*x1^-2*y2 + -3*x2").to_string() == "-3*x2 + 1*x1^-2*y2");
  CHECK_THROWS_AS(LaurentPoly::parse(t, "1*z9"), ring_error);
  CHECK_THROWS_AS(LaurentPoly::parse(t, "1*y1^-1"), ring_error);
}

TEST_CASE("monomial division is exact or throws") {
  auto t = table2();
  auto x1 = LaurentPoly::x_var(t, 0);
  auto y1 = LaurentPoly::y_var(t, 0);
  ExpVec m = ExpVec::zero(2);
  m.xe = {1, 0};
  CHECK((x1 * x1 + y1 * x1).div_monomial(m) == x1 + y1);
  ExpVec ym = ExpVec::zero(2);
  ym.ye = {1, 0};
  CHECK_THROWS_AS((x1 + y1).div_monomial(ym), ring_error);
}

TEST_CASE("table mismatch is rejected") {
  auto t = table2();
  auto other = std::make_shared<VarTable>(std::vector<std::string>{"xa"},
                                          std::vector<std::string>{"ya"});
  auto p = LaurentPoly::x_var(t, 0);
  auto q = LaurentPoly::x_var(other, 0);
  CHECK_THROWS_AS(p + q, ring_error);
  CHECK_THROWS_AS(p * q, ring_error);
}
