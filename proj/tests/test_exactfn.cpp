#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octa/diff_op.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace octa;

namespace {

TrigPoly random_poly(std::mt19937& rng, int terms, int lo = -3, int hi = 5) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-9, 9);
  std::vector<TrigTerm> ts;
  for (int i = 0; i < terms; ++i) {
    int c = co(rng);
    if (c == 0) c = 1;
    ts.push_back({Rational(c), {ex(rng), ex(rng), ex(rng), ex(rng)}});
  }
  return TrigPoly::from_terms(ts);
}

const std::vector<std::pair<double, double>> kPoints{{0.31, 0.57}, {0.9, 1.2}, {1.37, 0.21}};

}  // namespace

TEST_CASE("rational strings round trip") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-3/2") == make_rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(to_halves(make_rational(-5, 2)) == -5);
  CHECK(from_halves(3) == make_rational(3, 2));
  CHECK_THROWS(to_halves(make_rational(1, 3)));
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(Rational(5), 2) == 10);
  CHECK(binomial(make_rational(1, 2), 2) == make_rational(-1, 8));
  CHECK(binomial(Rational(-1), 3) == -1);
}

TEST_CASE("exact linear solve") {
  // 2x + y = 3, x - y = 0
  LinearSolution s = solve_linear({{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}},
                                  {Rational(3), Rational(0)}, 2);
  REQUIRE(s.consistent);
  CHECK(s.unique);
  CHECK(s.x[0] == 1);
  CHECK(s.x[1] == 1);
  LinearSolution bad = solve_linear({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                                    {Rational(1), Rational(3)}, 2);
  CHECK_FALSE(bad.consistent);
  LinearSolution under = solve_linear({{Rational(1), Rational(1)}}, {Rational(2)}, 2);
  CHECK(under.consistent);
  CHECK_FALSE(under.unique);
}

TEST_CASE("pythagorean identities reduce to zero") {
  using namespace trig;
  CHECK(is_zero(cos1(2) + sin1(2) - one()));
  CHECK(is_zero(cos2(2) + sin2(2) - one()));
  CHECK(is_zero(mul(tan1(), cot1()) - one()));
  CHECK(is_zero(mul(sec2(), sec2()) - mul(tan2(), tan2()) - one()));
  CHECK(is_zero(power(cos1(2) + sin1(2), 5) - one()));
  CHECK_FALSE(is_zero(cos1(2) - sin1(2)));
  CHECK(equivalent(cos1(4) - sin1(4), cos1(2) - sin1(2)));
}

TEST_CASE("normal form preserves values") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const TrigPoly p = random_poly(rng, 6);
    const TrigPoly r = reduce(p);
    CHECK(reduce(r) == r);
    for (auto [x, y] : kPoints) {
      const double a = eval_numeric(p, x, y), b = eval_numeric(r, x, y);
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, eval_abs_terms(p, x, y)));
    }
  }
}

TEST_CASE("normal form decides equality of random shuffles") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const TrigPoly p = random_poly(rng, 4, -2, 3);
    // Multiply by (cos^2 + sin^2)^k in either variable: same function, new terms.
    const TrigPoly q = mul(p, power(trig::cos1(2) + trig::sin1(2), trial % 3 + 1));
    const TrigPoly u = mul(q, trig::cos2(2) + trig::sin2(2));
    CHECK(equivalent(p, u));
    auto k = proportionality(u, p);
    REQUIRE(k);
    if (!is_zero(p)) CHECK(*k == 1);
  }
}

TEST_CASE("proportionality and rank") {
  using namespace trig;
  auto k = proportionality(Rational(3) * cos1(2) + Rational(3) * sin1(2), one());
  REQUIRE(k);
  CHECK(*k == 3);
  CHECK_FALSE(proportionality(cos1(), sin1()));
  std::vector<TrigPoly> fam{one(), cos1(2), sin1(2)};
  CHECK(exact_rank(fam) == 2);
  std::vector<TrigPoly> indep{cos1(), sin1(), mul(cos1(), sin2())};
  CHECK(exact_rank(indep) == 3);
}

TEST_CASE("differentiation matches finite differences") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const TrigPoly p = random_poly(rng, 5);
    const TrigPoly dp1 = differentiate(p, Var::phi1);
    const TrigPoly dp2 = differentiate(p, Var::phi2);
    oracle::Fn f = [&](double x, double y) { return eval_numeric(p, x, y); };
    for (auto [x, y] : kPoints) {
      const double scale = std::max(1.0, eval_abs_terms(dp1, x, y) + eval_abs_terms(dp2, x, y));
      CHECK(std::abs(eval_numeric(dp1, x, y) - oracle::d1(f, x, y, 1e-4)) <= 1e-6 * scale);
      CHECK(std::abs(eval_numeric(dp2, x, y) - oracle::d2(f, x, y, 1e-4)) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("half-integer exponents differentiate") {
  const TrigPoly p = TrigPoly::monomial(TrigTerm::make(1, make_rational(1, 2), make_rational(3, 2), 0, 0));
  // d/dx cos^(1/2) sin^(3/2) = -1/2 cos^(-1/2) sin^(5/2) + 3/2 cos^(3/2) sin^(1/2)
  const TrigPoly expect =
      TrigPoly::monomial(TrigTerm::make(make_rational(-1, 2), make_rational(-1, 2), make_rational(5, 2), 0, 0)) +
      TrigPoly::monomial(TrigTerm::make(make_rational(3, 2), make_rational(3, 2), make_rational(1, 2), 0, 0));
  CHECK(equivalent(differentiate(p, Var::phi1), expect));
  CHECK_THROWS(TrigTerm::make(1, make_rational(1, 3), 0, 0, 0));
}

TEST_CASE("double-angle substitution") {
  const std::vector<Rational> c{Rational(1), Rational(-2), make_rational(3, 4)};
  const TrigPoly p = trig::cos_double_angle_poly(c, Var::phi2);
  for (auto [x, y] : kPoints) {
    const double u = std::cos(2 * y);
    CHECK(eval_numeric(p, x, y) == doctest::Approx(1 - 2 * u + 0.75 * u * u).epsilon(1e-12));
  }
}

TEST_CASE("division by monomials") {
  const TrigTerm t = TrigTerm::make(2, 1, 0, 0, 1);
  const TrigPoly p = mul(TrigPoly::monomial(t), trig::cos2(3) + trig::sin1());
  CHECK(equivalent(divide_by_monomial(p, t), trig::cos2(3) + trig::sin1()));
  CHECK_THROWS_AS(divide_by_monomial(p, TrigTerm{Rational(0), {}}), std::domain_error);
}

TEST_CASE("trig poly json round trip is byte identical") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const TrigPoly p = reduce(random_poly(rng, 5));
    const std::string s = to_json(p).dump();
    CHECK(to_json(trig_poly_from_json(nlohmann::json::parse(s))).dump() == s);
    CHECK(trig_poly_from_json(nlohmann::json::parse(s)) == p);
  }
}

TEST_CASE("operator composition equals successive application") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    DiffOp x = DiffOp::derivative({1, 0}, random_poly(rng, 2)) +
               DiffOp::derivative({0, 1}, random_poly(rng, 2)) +
               DiffOp::multiplication(random_poly(rng, 2));
    DiffOp y = DiffOp::derivative({2, 0}, random_poly(rng, 1)) +
               DiffOp::derivative({0, 1}, random_poly(rng, 2)) + DiffOp::multiplication(random_poly(rng, 1));
    const TrigPoly f = random_poly(rng, 3);
    CHECK(equivalent(apply(compose(x, y), f), apply(x, apply(y, f))));
    CHECK(equivalent(apply(commutator(x, y), f), apply(x, apply(y, f)) - apply(y, apply(x, f))));
    CHECK(equivalent(apply(anticommutator(x, y), f), apply(x, apply(y, f)) + apply(y, apply(x, f))));
  }
}

TEST_CASE("Leibniz rule for commutators with multiplication") {
  const TrigPoly f = trig::tan1() + trig::sin2(3);
  const DiffOp d1 = DiffOp::derivative({1, 0});
  const DiffOp d11 = DiffOp::derivative({2, 0});
  CHECK(equivalent(commutator(d1, DiffOp::multiplication(f)),
                   DiffOp::multiplication(differentiate(f, Var::phi1))));
  // [d1^2, f] = 2 f' d1 + f''
  const TrigPoly fp = differentiate(f, Var::phi1);
  CHECK(equivalent(commutator(d11, DiffOp::multiplication(f)),
                   DiffOp::derivative({1, 0}, Rational(2) * fp) +
                       DiffOp::multiplication(differentiate(fp, Var::phi1))));
  CHECK(is_zero(commutator(DiffOp::derivative({1, 0}), DiffOp::derivative({0, 1}))));
}

TEST_CASE("operator scalars and proportionality") {
  const DiffOp id = DiffOp::identity();
  auto s = as_scalar(Rational(5) * (DiffOp::multiplication(trig::cos1(2) + trig::sin1(2))));
  REQUIRE(s);
  CHECK(*s == 5);
  CHECK_FALSE(as_scalar(DiffOp::derivative({1, 0})));
  CHECK(*proportionality(Rational(-3) * DiffOp::derivative({0, 1}, trig::tan2()),
                         DiffOp::derivative({0, 1}, trig::tan2())) == -3);
  CHECK(is_zero(id - DiffOp::multiplication(trig::one())));
}

TEST_CASE("operator json round trip") {
  const DiffOp x = DiffOp::derivative({1, 0}, trig::tan2()) + DiffOp::multiplication(trig::cot1());
  const std::array<int, 3> shift{2, 2, 0};
  const std::string s = to_json(x, shift).dump();
  std::array<int, 3> back{};
  const DiffOp y = diff_op_from_json(nlohmann::json::parse(s), &back);
  CHECK(back == shift);
  CHECK(y == x);
  CHECK(to_json(y, back).dump() == s);
}
