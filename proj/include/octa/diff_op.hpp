#ifndef OCTA_DIFF_OP_HPP
#define OCTA_DIFF_OP_HPP

#include "octa/trig_poly.hpp"

#include <compare>
#include <map>

namespace octa {

/// Mixed partial derivative d^k1/dphi1^k1 d^k2/dphi2^k2.
struct Order {
  int d1 = 0;
  int d2 = 0;
  int total() const { return d1 + d2; }
  auto operator<=>(const Order&) const = default;
};

inline constexpr int kMaxOrder = 4;

/// Finite sum of coeff(phi1, phi2) * d^Order, one term per Order.
class DiffOp {
 public:
  DiffOp() = default;

  static DiffOp identity();
  static DiffOp multiplication(const TrigPoly& f);
  static DiffOp derivative(Order order, const TrigPoly& coeff = trig::one());

  const std::map<Order, TrigPoly>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int order() const;

  /// Coefficient of a given derivative (0 when absent).
  TrigPoly coefficient(Order o) const;

  DiffOp& add_term(Order o, const TrigPoly& coeff);
  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  DiffOp& operator*=(const Rational& s);

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  std::map<Order, TrigPoly> terms_;
};

DiffOp operator+(DiffOp a, const DiffOp& b);
DiffOp operator-(DiffOp a, const DiffOp& b);
DiffOp operator-(DiffOp a);
DiffOp operator*(const Rational& s, DiffOp a);
/// Left multiplication by a function.
DiffOp operator*(const TrigPoly& f, const DiffOp& a);

TrigPoly apply(const DiffOp& op, const TrigPoly& f);

/// X∘Y by the generalized Leibniz rule. Throws std::length_error when the
/// result would exceed kMaxOrder.
DiffOp compose(const DiffOp& x, const DiffOp& y);
DiffOp commutator(const DiffOp& x, const DiffOp& y);
DiffOp anticommutator(const DiffOp& x, const DiffOp& y);

/// Coefficients in normal form, zero terms dropped.
DiffOp reduce(const DiffOp& op);
bool is_zero(const DiffOp& op);
bool equivalent(const DiffOp& a, const DiffOp& b);

/// Returns k with a == k b when such a rational exists.
std::optional<Rational> proportionality(const DiffOp& a, const DiffOp& b);

/// Returns c when op == c * identity.
std::optional<Rational> as_scalar(const DiffOp& op);

std::string to_string(const DiffOp& op);

nlohmann::json to_json(const DiffOp& op, const std::array<int, 3>& shift);
DiffOp diff_op_from_json(const nlohmann::json& j, std::array<int, 3>* shift = nullptr);

}  // namespace octa

#endif
