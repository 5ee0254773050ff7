#ifndef OCTA_TRIG_POLY_HPP
#define OCTA_TRIG_POLY_HPP

// Exact algebra of trigonometric monomials
//
//   coeff * cos^a(phi1) sin^b(phi1) cos^c(phi2) sin^d(phi2)
//
// with rational coefficients and integer or half-integer exponents (possibly
// negative). TrigPoly keeps a cheap canonical form (sorted, like terms merged,
// no zero coefficients). The identity sin^2 + cos^2 = 1 is only applied by
// reduce(), which maps a polynomial to a unique normal form; is_zero() and all
// equality tests go through it.

#include "octa/rational.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace octa {

enum class Var { phi1, phi2 };

/// Twice the exponents of (cos phi1, sin phi1, cos phi2, sin phi2).
using Exps = std::array<int, 4>;

struct TrigTerm {
  Rational coeff;
  Exps halves{};

  /// Exponent k (0..3) as a rational.
  Rational exponent(int k) const { return from_halves(halves[k]); }

  /// Builds a term from rational exponents; rejects denominators other than 1, 2.
  static TrigTerm make(Rational coeff, const Rational& a, const Rational& b, const Rational& c,
                       const Rational& d);
};

class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(const Rational& constant);  // NOLINT: constants promote implicitly

  static TrigPoly monomial(const Rational& coeff, const Exps& halves);
  static TrigPoly monomial(const TrigTerm& term) { return monomial(term.coeff, term.halves); }
  static TrigPoly from_terms(std::vector<TrigTerm> terms);

  const std::vector<TrigTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of the exact exponent tuple (0 when absent).
  Rational coefficient(const Exps& halves) const;

  /// True when the polynomial is a single term.
  bool is_monomial() const { return terms_.size() == 1; }

  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  TrigPoly& operator*=(const Rational& s);

  friend bool operator==(const TrigPoly& a, const TrigPoly& b);

 private:
  std::vector<TrigTerm> terms_;  // strictly increasing in halves
};

TrigPoly operator+(TrigPoly a, const TrigPoly& b);
TrigPoly operator-(TrigPoly a, const TrigPoly& b);
TrigPoly operator-(TrigPoly a);
TrigPoly operator*(const Rational& s, TrigPoly p);
TrigPoly operator*(const TrigPoly& p, const TrigPoly& q);

TrigPoly linear_combine(std::span<const std::pair<Rational, TrigPoly>> pairs);
TrigPoly mul(const TrigPoly& p, const TrigPoly& q);
TrigPoly power(const TrigPoly& p, int k);
TrigPoly differentiate(const TrigPoly& p, Var var);

/// Divides every term by a single monomial. Throws std::domain_error
/// "division by zero monomial" when t.coeff == 0.
TrigPoly divide_by_monomial(const TrigPoly& p, const TrigTerm& t);

/// Unique normal form modulo sin^2 + cos^2 = 1. Per variable, every term is
/// either cos^(r+2i) sin^(s) with s in [0,2) or cos^(r) sin^(s-2j) with r in
/// [0,2), j >= 1 (partial fractions in cos^2).
TrigPoly reduce(const TrigPoly& p);

/// True iff p is the zero function on the open octant.
bool is_zero(const TrigPoly& p);
bool equivalent(const TrigPoly& p, const TrigPoly& q);

/// Returns k with p == k q (as functions) when such a rational exists.
std::optional<Rational> proportionality(const TrigPoly& p, const TrigPoly& q);

/// Rank over Q of a family of functions (exact, via normal forms).
std::size_t exact_rank(std::span<const TrigPoly> family);

/// Floating-point evaluation. Requires 0 <= phi <= pi/2; a boundary point
/// where a factor with negative exponent vanishes throws std::domain_error
/// "singular evaluation".
double eval_numeric(const TrigPoly& p, double phi1, double phi2);

/// Sum of |term| at a point, used to scale error bounds.
double eval_abs_terms(const TrigPoly& p, double phi1, double phi2);

std::string to_string(const TrigPoly& p);

nlohmann::json to_json(const TrigPoly& p);
TrigPoly trig_poly_from_json(const nlohmann::json& j);

namespace trig {

TrigPoly one();
TrigPoly cos1(const Rational& e = 1);
TrigPoly sin1(const Rational& e = 1);
TrigPoly cos2(const Rational& e = 1);
TrigPoly sin2(const Rational& e = 1);
TrigPoly tan1();
TrigPoly cot1();
TrigPoly sec1();
TrigPoly csc1();
TrigPoly tan2();
TrigPoly cot2();
TrigPoly sec2();
TrigPoly csc2();

/// Polynomial in x substituted with x = cos(2 phi) = 1 - 2 sin^2(phi).
TrigPoly cos_double_angle_poly(std::span<const Rational> coeffs_in_x, Var var);

}  // namespace trig

}  // namespace octa

#endif
