#include "octa/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

TrigPoly derive(const TrigPoly& f, Order o) {
  TrigPoly r = f;
  for (int i = 0; i < o.d1 && !r.empty(); ++i) r = differentiate(r, Var::phi1);
  for (int i = 0; i < o.d2 && !r.empty(); ++i) r = differentiate(r, Var::phi2);
  return r;
}

long small_binomial(int n, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

DiffOp DiffOp::identity() { return derivative({0, 0}); }

DiffOp DiffOp::multiplication(const TrigPoly& f) { return derivative({0, 0}, f); }

DiffOp DiffOp::derivative(Order order, const TrigPoly& coeff) {
  if (order.d1 < 0 || order.d2 < 0) throw std::invalid_argument("negative derivative order");
  DiffOp op;
  op.add_term(order, coeff);
  return op;
}

int DiffOp::order() const {
  int m = 0;
  for (const auto& [o, c] : terms_) m = std::max(m, o.total());
  return m;
}

TrigPoly DiffOp::coefficient(Order o) const {
  auto it = terms_.find(o);
  return it == terms_.end() ? TrigPoly{} : it->second;
}

DiffOp& DiffOp::add_term(Order o, const TrigPoly& coeff) {
  if (coeff.empty()) return *this;
  if (o.total() > kMaxOrder) throw std::length_error("differential operator order exceeds 4");
  auto [it, inserted] = terms_.try_emplace(o, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.empty()) terms_.erase(it);
  }
  return *this;
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  for (const auto& [o, c] : other.terms_) add_term(o, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  for (const auto& [o, c] : other.terms_) add_term(o, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [o, c] : terms_) c *= s;
  return *this;
}

DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
DiffOp operator-(DiffOp a) { return a *= Rational(-1); }
DiffOp operator*(const Rational& s, DiffOp a) { return a *= s; }

DiffOp operator*(const TrigPoly& f, const DiffOp& a) {
  DiffOp r;
  for (const auto& [o, c] : a.terms()) r.add_term(o, mul(f, c));
  return r;
}

TrigPoly apply(const DiffOp& op, const TrigPoly& f) {
  TrigPoly r;
  for (const auto& [o, c] : op.terms()) r += mul(c, derive(f, o));
  return r;
}

DiffOp compose(const DiffOp& x, const DiffOp& y) {
  if (x.order() + y.order() > kMaxOrder)
    throw std::length_error("composition order exceeds 4");
  DiffOp r;
  for (const auto& [ox, cx] : x.terms())
    for (const auto& [oy, cy] : y.terms())
      for (int g1 = 0; g1 <= ox.d1; ++g1)
        for (int g2 = 0; g2 <= ox.d2; ++g2) {
          TrigPoly dcy = derive(cy, {g1, g2});
          if (dcy.empty()) continue;
          Rational w = small_binomial(ox.d1, g1) * small_binomial(ox.d2, g2);
          r.add_term({ox.d1 - g1 + oy.d1, ox.d2 - g2 + oy.d2}, w * mul(cx, dcy));
        }
  return r;
}

DiffOp commutator(const DiffOp& x, const DiffOp& y) { return compose(x, y) - compose(y, x); }

DiffOp anticommutator(const DiffOp& x, const DiffOp& y) { return compose(x, y) + compose(y, x); }

DiffOp reduce(const DiffOp& op) {
  DiffOp r;
  for (const auto& [o, c] : op.terms()) r.add_term(o, reduce(c));
  return r;
}

bool is_zero(const DiffOp& op) {
  for (const auto& [o, c] : op.terms())
    if (!is_zero(c)) return false;
  return true;
}

bool equivalent(const DiffOp& a, const DiffOp& b) { return is_zero(a - b); }

std::optional<Rational> proportionality(const DiffOp& a, const DiffOp& b) {
  DiffOp rb = reduce(b);
  if (rb.empty()) return std::nullopt;
  DiffOp ra = reduce(a);
  if (ra.empty()) return Rational(0);
  const auto& [o, c] = *ra.terms().begin();
  auto it = rb.terms().find(o);
  if (it == rb.terms().end()) return std::nullopt;
  const TrigTerm& lead = c.terms().front();
  Rational bc = it->second.coefficient(lead.halves);
  if (bc == 0) return std::nullopt;
  Rational k = lead.coeff / bc;
  if (ra == k * rb) return k;
  return std::nullopt;
}

std::optional<Rational> as_scalar(const DiffOp& op) {
  DiffOp r = reduce(op);
  if (r.empty()) return Rational(0);
  if (r.terms().size() != 1 || r.terms().begin()->first != Order{0, 0}) return std::nullopt;
  const TrigPoly& c = r.terms().begin()->second;
  if (c.size() != 1 || c.terms().front().halves != Exps{0, 0, 0, 0}) return std::nullopt;
  return c.terms().front().coeff;
}

std::string to_string(const DiffOp& op) {
  if (op.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [o, c] : op.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    if (o.d1) os << "*d1" << (o.d1 > 1 ? "^" + std::to_string(o.d1) : "");
    if (o.d2) os << "*d2" << (o.d2 > 1 ? "^" + std::to_string(o.d2) : "");
  }
  return os.str();
}

nlohmann::json to_json(const DiffOp& op, const std::array<int, 3>& shift) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [o, c] : op.terms())
    terms.push_back({{"order", {o.d1, o.d2}}, {"coeff", to_json(c)}});
  return {{"shift", shift}, {"terms", terms}};
}

DiffOp diff_op_from_json(const nlohmann::json& j, std::array<int, 3>* shift) {
  if (shift) *shift = j.at("shift").get<std::array<int, 3>>();
  DiffOp op;
  for (const auto& t : j.at("terms")) {
    auto ord = t.at("order").get<std::array<int, 2>>();
    op.add_term({ord[0], ord[1]}, trig_poly_from_json(t.at("coeff")));
  }
  return op;
}

}  // namespace octa
