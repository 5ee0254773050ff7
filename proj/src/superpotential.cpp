#include "octa/superpotential.hpp"

#include <sstream>
#include <stdexcept>

namespace octa {

Decomposition decompose(const DiffOp& x) {
  if (x.order() > 1) throw std::invalid_argument("decompose expects an operator of order <= 1");
  Decomposition d;
  for (const auto& [o, c] : x.terms()) {
    if (o.total() == 0)
      d.multiplier = c;
    else
      d.vector.add_term(o, c);
  }
  return d;
}

TrigPoly superpot_from_state(const DiffOp& vector, const TrigTerm& phi0) {
  return -divide_by_monomial(apply(vector, TrigPoly::monomial(phi0)), phi0);
}

TrigPoly superpot_from_state(const DiffOp& vector, const TrigPoly& phi0) {
  if (!phi0.is_monomial()) throw std::invalid_argument("superpotential needs a monomial state");
  return superpot_from_state(vector, phi0.terms().front());
}

Rational riccati_lambda_closed_form(const ParamVector& l) {
  Rational s = 0;
  for (Diagonal d : {Diagonal::A, Diagonal::B, Diagonal::C}) {
    Rational x = diagonal_value(d, l);
    s += x * (x - make_rational(3, 2));
  }
  const Rational dv = diagonal_value(Diagonal::D, l);
  return make_rational(8, 3) * s - dv * dv / 3 + make_rational(15, 4);
}

RiccatiReport riccati_check(const ParamVector& l) {
  RiccatiReport r;
  r.sector = l;
  const TrigPoly v = build_hamiltonian(l).coefficient({0, 0});
  TrigPoly combo;
  for (Family f : {Family::A, Family::B, Family::C}) {
    const TrigPoly xi =
        decompose(build_first_order(f, Ladder::lowering, l, Variant::corrected)).multiplier;
    combo += mul(xi, xi);
    combo += apply(vector_part(f, Ladder::raising), xi);
  }
  const TrigPoly diff = reduce(v - combo);
  r.lambda = diff.coefficient({0, 0, 0, 0});
  r.residual = reduce(diff - TrigPoly(r.lambda));
  r.residual_zero = r.residual.empty();
  return r;
}

namespace {

std::array<Rational, 10> quadratic_basis(const ParamVector& l) {
  return {Rational(1), l[0],        l[1],        l[2],        Rational(l[0] * l[0]),
          Rational(l[1] * l[1]),    Rational(l[2] * l[2]),    Rational(l[0] * l[1]),
          Rational(l[0] * l[2]),    Rational(l[1] * l[2])};
}

}  // namespace

Rational QuadraticFit::operator()(const ParamVector& l) const {
  const auto b = quadratic_basis(l);
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += coeffs[i] * b[i];
  return s;
}

std::string QuadraticFit::str() const {
  static const char* names[10] = {"1",     "l0",    "l1",    "l2",    "l0^2",
                                  "l1^2",  "l2^2",  "l0*l1", "l0*l2", "l1*l2"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << to_string(coeffs[i]);
    if (i) os << "*" << names[i];
  }
  return first ? "0" : os.str();
}

QuadraticFit fit_quadratic(const std::vector<std::pair<ParamVector, Rational>>& samples) {
  if (samples.size() < 10) throw std::invalid_argument("quadratic fit needs at least 10 samples");
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& [l, v] : samples) {
    const auto row = quadratic_basis(l);
    a.emplace_back(row.begin(), row.end());
    b.push_back(v);
  }
  LinearSolution sol = solve_linear(std::move(a), std::move(b), 10);
  QuadraticFit fit;
  fit.consistent = sol.consistent && sol.unique;
  if (sol.consistent)
    for (std::size_t i = 0; i < 10; ++i) fit.coeffs[i] = sol.x[i];
  return fit;
}

nlohmann::json to_json(const RiccatiReport& r) {
  return {{"sector", to_json(r.sector)},
          {"lambda", to_string(r.lambda)},
          {"riccati_residual_zero", r.residual_zero}};
}

bool KineticReport::ok() const {
  if (!kinetic_residual.empty()) return false;
  for (const auto& k : so3)
    if (!k || *k == 0) return false;
  return true;
}

KineticReport kinetic_rotation_check() {
  KineticReport rep;
  DiffOp sum;
  for (Family f : {Family::A, Family::B, Family::C})
    sum += compose(vector_part(f, Ladder::raising), vector_part(f, Ladder::lowering));
  rep.kinetic_residual = reduce(sum - kinetic_operator());
  const DiffOp a = vector_part(Family::A, Ladder::raising);
  const DiffOp b = vector_part(Family::B, Ladder::raising);
  const DiffOp c = vector_part(Family::C, Ladder::raising);
  rep.so3 = {proportionality(commutator(a, b), c), proportionality(commutator(b, c), a),
             proportionality(commutator(c, a), b)};
  return rep;
}

}  // namespace octa
