#ifndef OCTA_SUPERPOTENTIAL_HPP
#define OCTA_SUPERPOTENTIAL_HPP

#include "octa/operators.hpp"

#include <array>
#include <optional>
#include <vector>

namespace octa {

struct Decomposition {
  DiffOp vector;  // first-order terms
  TrigPoly multiplier;
};

/// Splits an operator of order <= 1; throws std::invalid_argument otherwise.
Decomposition decompose(const DiffOp& x);

/// -(v Phi0) / Phi0 for a single-monomial Phi0.
TrigPoly superpot_from_state(const DiffOp& vector, const TrigTerm& phi0);
TrigPoly superpot_from_state(const DiffOp& vector, const TrigPoly& phi0);

struct RiccatiReport {
  ParamVector sector;
  Rational lambda;
  TrigPoly residual;  // zero when the identity holds
  bool residual_zero = false;
};

/// Checks V_l = sum over A, B, C of (xi^2 + x+ xi) + lambda_l, with xi the
/// multipliers of the corrected lowering operators at l and x+ the raising
/// vector fields.
RiccatiReport riccati_check(const ParamVector& l);

/// Independent closed form from the Casimir relation:
/// lambda = (8/3) sum_X X(X - 3/2) - D^2/3 + 15/4 over X = A, B, C.
Rational riccati_lambda_closed_form(const ParamVector& l);

struct QuadraticFit {
  bool consistent = false;
  /// Coefficients of 1, l0, l1, l2, l0^2, l1^2, l2^2, l0 l1, l0 l2, l1 l2.
  std::array<Rational, 10> coeffs;
  Rational operator()(const ParamVector& l) const;
  std::string str() const;
};

/// Exact least-degree fit of lambda over the samples (needs >= 10 sectors).
QuadraticFit fit_quadratic(const std::vector<std::pair<ParamVector, Rational>>& samples);

nlohmann::json to_json(const RiccatiReport& r);

struct KineticReport {
  DiffOp kinetic_residual;  // a+a- + b+b- + c+c- - H_kin
  /// [a+,b+], [b+,c+], [c+,a+] as multiples of c+, a+, b+ respectively.
  std::array<std::optional<Rational>, 3> so3;
  bool ok() const;
};

KineticReport kinetic_rotation_check();

}  // namespace octa

#endif
