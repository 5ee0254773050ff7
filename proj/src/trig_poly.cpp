#include "octa/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

using TermMap = std::map<Exps, Rational>;

std::vector<TrigTerm> flatten(TermMap&& m) {
  std::vector<TrigTerm> out;
  out.reserve(m.size());
  for (auto& [e, c] : m)
    if (c != 0) out.push_back(TrigTerm{std::move(c), e});
  return out;
}

int floor_mod4(int v) { return ((v % 4) + 4) % 4; }

// Normal form of c^i s^j in Q[c, 1/c, 1/(1-c)] with s = 1 - c, where c and s
// stand for cos^2 and sin^2 of one variable. Keys (i', j') satisfy j' == 0 or
// (i' == 0 and j' < 0).
using PowerKey = std::pair<int, int>;
using PowerExpansion = std::vector<std::pair<PowerKey, Rational>>;

const PowerExpansion& normalize_powers(int i, int j) {
  thread_local std::map<PowerKey, PowerExpansion> memo;
  auto it = memo.find({i, j});
  if (it != memo.end()) return it->second;

  std::map<PowerKey, Rational> acc;
  auto add_all = [&acc](const PowerExpansion& e, const Rational& w) {
    for (const auto& [k, c] : e) acc[k] += w * c;
  };
  if (j == 0) {
    acc[{i, 0}] = 1;
  } else if (j > 0) {
    for (int k = 0; k <= j; ++k)
      acc[{i + k, 0}] += binomial(Rational(j), k) * ((k % 2) ? -1 : 1);
  } else if (i == 0) {
    acc[{0, j}] = 1;
  } else if (i > 0) {
    // c^i = (1 - s)^i
    for (int k = 0; k <= i; ++k) {
      Rational w = binomial(Rational(i), k) * ((k % 2) ? -1 : 1);
      if (j + k < 0)
        acc[{0, j + k}] += w;
      else
        add_all(normalize_powers(0, j + k), w);
    }
  } else {
    // c^i s^j = c^(i+1) s^j + c^i s^(j+1)
    PowerExpansion left = normalize_powers(i + 1, j);
    PowerExpansion right = normalize_powers(i, j + 1);
    add_all(left, 1);
    add_all(right, 1);
  }
  PowerExpansion out;
  for (auto& [k, c] : acc)
    if (c != 0) out.emplace_back(k, std::move(c));
  return memo.emplace(PowerKey{i, j}, std::move(out)).first->second;
}

double checked_pow(double base, int halves) {
  if (halves == 0) return 1.0;
  if (base == 0.0) {
    if (halves < 0) throw std::domain_error("singular evaluation");
    return 0.0;
  }
  if (halves % 2 == 0) return std::pow(base, halves / 2);
  return std::pow(base, 0.5 * halves);
}

struct AngleValues {
  double c, s;
};

AngleValues angle_values(double phi) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(phi >= 0.0 && phi <= half_pi)) throw std::domain_error("point outside the octant");
  if (phi == 0.0) return {1.0, 0.0};
  if (phi == half_pi) return {0.0, 1.0};
  return {std::cos(phi), std::sin(phi)};
}

}  // namespace

TrigTerm TrigTerm::make(Rational coeff, const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) {
  return TrigTerm{std::move(coeff), {to_halves(a), to_halves(b), to_halves(c), to_halves(d)}};
}

TrigPoly::TrigPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back(TrigTerm{constant, {0, 0, 0, 0}});
}

TrigPoly TrigPoly::monomial(const Rational& coeff, const Exps& halves) {
  TrigPoly p;
  if (coeff != 0) p.terms_.push_back(TrigTerm{coeff, halves});
  return p;
}

TrigPoly TrigPoly::from_terms(std::vector<TrigTerm> terms) {
  TermMap m;
  for (auto& t : terms) m[t.halves] += t.coeff;
  TrigPoly p;
  p.terms_ = flatten(std::move(m));
  return p;
}

Rational TrigPoly::coefficient(const Exps& halves) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), halves,
                             [](const TrigTerm& t, const Exps& e) { return t.halves < e; });
  if (it != terms_.end() && it->halves == halves) return it->coeff;
  return 0;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  std::vector<TrigTerm> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->halves < b->halves)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->halves < a->halves) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(TrigTerm{std::move(c), a->halves});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) { return *this += -other; }

TrigPoly& TrigPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].halves != b.terms_[i].halves || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
TrigPoly operator-(TrigPoly a) { return a *= Rational(-1); }
TrigPoly operator*(const Rational& s, TrigPoly p) { return p *= s; }
TrigPoly operator*(const TrigPoly& p, const TrigPoly& q) { return mul(p, q); }

TrigPoly linear_combine(std::span<const std::pair<Rational, TrigPoly>> pairs) {
  TermMap m;
  for (const auto& [w, p] : pairs)
    for (const auto& t : p.terms()) m[t.halves] += w * t.coeff;
  std::vector<TrigTerm> terms = flatten(std::move(m));
  return TrigPoly::from_terms(std::move(terms));
}

TrigPoly mul(const TrigPoly& p, const TrigPoly& q) {
  TermMap m;
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) {
      Exps e{};
      for (int k = 0; k < 4; ++k) e[k] = a.halves[k] + b.halves[k];
      m[e] += a.coeff * b.coeff;
    }
  return TrigPoly::from_terms(flatten(std::move(m)));
}

TrigPoly power(const TrigPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  TrigPoly r = trig::one();
  for (int i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

TrigPoly differentiate(const TrigPoly& p, Var var) {
  const int ci = var == Var::phi1 ? 0 : 2;
  const int si = ci + 1;
  TermMap m;
  for (const auto& t : p.terms()) {
    // d(cos^a sin^b) = -a cos^(a-1) sin^(b+1) + b cos^(a+1) sin^(b-1)
    if (t.halves[ci] != 0) {
      Exps e = t.halves;
      e[ci] -= 2;
      e[si] += 2;
      m[e] -= t.coeff * from_halves(t.halves[ci]);
    }
    if (t.halves[si] != 0) {
      Exps e = t.halves;
      e[ci] += 2;
      e[si] -= 2;
      m[e] += t.coeff * from_halves(t.halves[si]);
    }
  }
  return TrigPoly::from_terms(flatten(std::move(m)));
}

TrigPoly divide_by_monomial(const TrigPoly& p, const TrigTerm& t) {
  if (t.coeff == 0) throw std::domain_error("division by zero monomial");
  std::vector<TrigTerm> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) {
    Exps e{};
    for (int k = 0; k < 4; ++k) e[k] = term.halves[k] - t.halves[k];
    out.push_back(TrigTerm{term.coeff / t.coeff, e});
  }
  return TrigPoly::from_terms(std::move(out));
}

TrigPoly reduce(const TrigPoly& p) {
  TermMap m;
  for (const auto& t : p.terms()) {
    std::array<int, 4> residue{};
    std::array<int, 4> quarter{};
    for (int k = 0; k < 4; ++k) {
      residue[k] = floor_mod4(t.halves[k]);
      quarter[k] = (t.halves[k] - residue[k]) / 4;
    }
    const PowerExpansion& first = normalize_powers(quarter[0], quarter[1]);
    const PowerExpansion& second = normalize_powers(quarter[2], quarter[3]);
    for (const auto& [k1, c1] : first)
      for (const auto& [k2, c2] : second) {
        Exps e{residue[0] + 4 * k1.first, residue[1] + 4 * k1.second,
               residue[2] + 4 * k2.first, residue[3] + 4 * k2.second};
        m[e] += t.coeff * c1 * c2;
      }
  }
  return TrigPoly::from_terms(flatten(std::move(m)));
}

bool is_zero(const TrigPoly& p) { return p.empty() || reduce(p).empty(); }

bool equivalent(const TrigPoly& p, const TrigPoly& q) { return is_zero(p - q); }

std::optional<Rational> proportionality(const TrigPoly& p, const TrigPoly& q) {
  TrigPoly rq = reduce(q);
  if (rq.empty()) return std::nullopt;
  TrigPoly rp = reduce(p);
  if (rp.empty()) return Rational(0);
  const TrigTerm& lead = rp.terms().front();
  Rational qc = rq.coefficient(lead.halves);
  if (qc == 0) return std::nullopt;
  Rational k = lead.coeff / qc;
  if (rp == k * rq) return k;
  return std::nullopt;
}

std::size_t exact_rank(std::span<const TrigPoly> family) {
  std::map<Exps, std::size_t> column;
  std::vector<TrigPoly> reduced;
  reduced.reserve(family.size());
  for (const auto& f : family) {
    reduced.push_back(reduce(f));
    for (const auto& t : reduced.back().terms()) column.emplace(t.halves, column.size());
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : reduced) {
    std::vector<Rational> row(column.size());
    for (const auto& t : r.terms()) row[column.at(t.halves)] = t.coeff;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < column.size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

double eval_numeric(const TrigPoly& p, double phi1, double phi2) {
  const AngleValues v1 = angle_values(phi1);
  const AngleValues v2 = angle_values(phi2);
  double sum = 0.0;
  for (const auto& t : p.terms())
    sum += t.coeff.get_d() * checked_pow(v1.c, t.halves[0]) * checked_pow(v1.s, t.halves[1]) *
           checked_pow(v2.c, t.halves[2]) * checked_pow(v2.s, t.halves[3]);
  return sum;
}

double eval_abs_terms(const TrigPoly& p, double phi1, double phi2) {
  const AngleValues v1 = angle_values(phi1);
  const AngleValues v2 = angle_values(phi2);
  double sum = 0.0;
  for (const auto& t : p.terms())
    sum += std::abs(t.coeff.get_d() * checked_pow(v1.c, t.halves[0]) *
                    checked_pow(v1.s, t.halves[1]) * checked_pow(v2.c, t.halves[2]) *
                    checked_pow(v2.s, t.halves[3]));
  return sum;
}

std::string to_string(const TrigPoly& p) {
  if (p.empty()) return "0";
  static constexpr const char* names[4] = {"cos1", "sin1", "cos2", "sin2"};
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) os << (t.coeff < 0 ? " - " : " + ");
    else if (t.coeff < 0) os << "-";
    first = false;
    Rational mag = abs(t.coeff);
    bool any = false;
    for (int k = 0; k < 4; ++k) any |= t.halves[k] != 0;
    if (mag != 1 || !any) os << mag.get_str();
    bool sep = mag != 1;
    for (int k = 0; k < 4; ++k) {
      if (t.halves[k] == 0) continue;
      if (sep) os << "*";
      os << names[k];
      if (t.halves[k] != 2) os << "^" << from_halves(t.halves[k]).get_str();
      sep = true;
    }
  }
  return os.str();
}

nlohmann::json to_json(const TrigPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) exps.push_back(to_string(from_halves(t.halves[k])));
    terms.push_back({{"coeff", to_string(t.coeff)}, {"exps", exps}});
  }
  return {{"terms", terms}};
}

TrigPoly trig_poly_from_json(const nlohmann::json& j) {
  std::vector<TrigTerm> terms;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("exps");
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("exps must have 4 entries");
    terms.push_back(TrigTerm::make(parse_rational(t.at("coeff").get<std::string>()),
                                   parse_rational(e[0].get<std::string>()),
                                   parse_rational(e[1].get<std::string>()),
                                   parse_rational(e[2].get<std::string>()),
                                   parse_rational(e[3].get<std::string>())));
  }
  return TrigPoly::from_terms(std::move(terms));
}

namespace trig {

TrigPoly one() { return TrigPoly(Rational(1)); }
TrigPoly cos1(const Rational& e) { return TrigPoly::monomial(1, {to_halves(e), 0, 0, 0}); }
TrigPoly sin1(const Rational& e) { return TrigPoly::monomial(1, {0, to_halves(e), 0, 0}); }
TrigPoly cos2(const Rational& e) { return TrigPoly::monomial(1, {0, 0, to_halves(e), 0}); }
TrigPoly sin2(const Rational& e) { return TrigPoly::monomial(1, {0, 0, 0, to_halves(e)}); }
TrigPoly tan1() { return TrigPoly::monomial(1, {-2, 2, 0, 0}); }
TrigPoly cot1() { return TrigPoly::monomial(1, {2, -2, 0, 0}); }
TrigPoly sec1() { return TrigPoly::monomial(1, {-2, 0, 0, 0}); }
TrigPoly csc1() { return TrigPoly::monomial(1, {0, -2, 0, 0}); }
TrigPoly tan2() { return TrigPoly::monomial(1, {0, 0, -2, 2}); }
TrigPoly cot2() { return TrigPoly::monomial(1, {0, 0, 2, -2}); }
TrigPoly sec2() { return TrigPoly::monomial(1, {0, 0, -2, 0}); }
TrigPoly csc2() { return TrigPoly::monomial(1, {0, 0, 0, -2}); }

TrigPoly cos_double_angle_poly(std::span<const Rational> coeffs_in_x, Var var) {
  // x = 1 - 2 s with s = sin^2(phi)
  const int si = var == Var::phi1 ? 1 : 3;
  std::map<int, Rational> in_s;
  for (std::size_t k = 0; k < coeffs_in_x.size(); ++k) {
    if (coeffs_in_x[k] == 0) continue;
    Rational pow2 = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      in_s[static_cast<int>(j)] += coeffs_in_x[k] * binomial(Rational(static_cast<long>(k)), static_cast<int>(j)) * pow2;
      pow2 *= -2;
    }
  }
  std::vector<TrigTerm> terms;
  for (auto& [j, c] : in_s) {
    Exps e{};
    e[si] = 4 * j;
    terms.push_back(TrigTerm{c, e});
  }
  return TrigPoly::from_terms(std::move(terms));
}

}  // namespace trig

}  // namespace octa
