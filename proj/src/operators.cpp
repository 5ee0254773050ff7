#include "octa/operators.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

Rational half() { return make_rational(1, 2); }

TrigTerm shape(int a, int b, int c, int d) { return TrigTerm{Rational(1), {a, b, c, d}}; }

const TrigTerm kTan1 = shape(-2, 2, 0, 0);
const TrigTerm kCot1 = shape(2, -2, 0, 0);
const TrigTerm kCos1Cot2 = shape(2, 0, 2, -2);
const TrigTerm kSec1Tan2 = shape(-2, 0, -2, 2);
const TrigTerm kCsc1Tan2 = shape(0, -2, -2, 2);
const TrigTerm kSin1Cot2 = shape(0, 2, 2, -2);

AffineLaw affine(Rational c0, Rational c_l0, Rational c_l1, Rational c_l2) {
  AffineLaw a;
  a.c0 = std::move(c0);
  a.c = {std::move(c_l0), std::move(c_l1), std::move(c_l2)};
  return a;
}

int sign_of(Ladder l) { return l == Ladder::raising ? 1 : -1; }

void require_sector_family(Family f) {
  if (f == Family::M || f == Family::A1d)
    throw std::invalid_argument("family " + family_name(f) + " has no three-index sector form");
}

std::map<std::pair<Family, Ladder>, MultiplierLaw> fit_corrected_laws() {
  const ParamVector p0(make_rational(2, 3), make_rational(1, 5), make_rational(3, 7));
  const ParamVector check(make_rational(-5, 4), make_rational(7, 3), make_rational(2, 9));
  std::map<std::pair<Family, Ladder>, MultiplierLaw> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::Atilde}) {
    const Shift s = lowering_shift(f);
    const std::vector<TrigTerm> shapes = printed_law(f).shapes;
    for (Ladder lad : {Ladder::lowering, Ladder::raising}) {
      const DiffOp v = vector_part(f, lad);
      // Raising operators carry the subscript of the sector they map into.
      auto solve_at = [&](const ParamVector& l) {
        MultiplierSolution sol = lad == Ladder::lowering ? solve_multiplier(v, s, shapes, l)
                                                         : solve_multiplier(v, -s, shapes, l + s);
        if (!sol.ok || !sol.unique)
          throw std::logic_error("no unique multiplier for " + family_name(f) + ladder_suffix(lad) +
                                 " at " + to_string(l));
        return sol.coefficients;
      };
      const std::vector<Rational> k0 = solve_at(p0);
      MultiplierLaw law;
      law.shapes = shapes;
      law.coeffs.resize(shapes.size());
      for (int axis = 0; axis < 3; ++axis) {
        ParamVector p = p0;
        p[axis] += 1;
        const std::vector<Rational> k = solve_at(p);
        for (std::size_t j = 0; j < shapes.size(); ++j) law.coeffs[j].c[axis] = k[j] - k0[j];
      }
      for (std::size_t j = 0; j < shapes.size(); ++j) {
        Rational c0 = k0[j];
        for (int axis = 0; axis < 3; ++axis) c0 -= law.coeffs[j].c[axis] * p0[axis];
        law.coeffs[j].c0 = c0;
      }
      const std::vector<Rational> kc = solve_at(check);
      for (std::size_t j = 0; j < shapes.size(); ++j)
        if (law.coeffs[j](check) != kc[j])
          throw std::logic_error("multiplier of " + family_name(f) + " is not affine in l");
      out.emplace(std::make_pair(f, lad), std::move(law));
    }
  }
  return out;
}

}  // namespace

ParamVector ParamVector::operator+(const Shift& s) const {
  return {l[0] + s[0], l[1] + s[1], l[2] + s[2]};
}

ParamVector ParamVector::operator-(const Shift& s) const {
  return {l[0] - s[0], l[1] - s[1], l[2] - s[2]};
}

ParamVector ParamVector::reflected(int axis) const {
  if (axis < 0 || axis > 2) throw std::invalid_argument("reflection axis must be 0, 1 or 2");
  ParamVector r = *this;
  r.l[axis] = -r.l[axis];
  return r;
}

std::string to_string(const ParamVector& p) {
  return "(" + to_string(p[0]) + "," + to_string(p[1]) + "," + to_string(p[2]) + ")";
}

nlohmann::json to_json(const ParamVector& p) {
  return nlohmann::json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])});
}

ParamVector param_vector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("params must have 3 entries");
  return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()),
          parse_rational(j[2].get<std::string>())};
}

Shift operator+(const Shift& a, const Shift& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Shift operator-(const Shift& a) { return {-a[0], -a[1], -a[2]}; }

Shift reflect_shift(const Shift& s, int axis) {
  Shift r = s;
  r.at(axis) = -r.at(axis);
  return r;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::Atilde: return "At";
    case Family::M: return "M";
    case Family::A1d: return "A1d";
  }
  throw std::invalid_argument("unknown family");
}

std::string ladder_suffix(Ladder l) { return l == Ladder::raising ? "+" : "-"; }

Shift lowering_shift(Family f) {
  switch (f) {
    case Family::A:
    case Family::A1d: return {1, 1, 0};
    case Family::B: return {1, 0, 1};
    case Family::C: return {0, -1, 1};
    case Family::Atilde: return {-1, 1, 0};
    case Family::M: break;
  }
  throw std::invalid_argument("M shifts the phi2 index, not the parameter vector");
}

Rational AffineLaw::operator()(const ParamVector& l) const {
  return c0 + c[0] * l[0] + c[1] * l[1] + c[2] * l[2];
}

std::string AffineLaw::str() const {
  std::ostringstream os;
  os << to_string(c0);
  for (int i = 0; i < 3; ++i)
    if (c[i] != 0) os << " + " << to_string(c[i]) << "*l" << i;
  return os.str();
}

TrigPoly MultiplierLaw::operator()(const ParamVector& l) const {
  TrigPoly r;
  for (std::size_t j = 0; j < shapes.size(); ++j)
    r += TrigPoly::monomial(coeffs[j](l) * shapes[j].coeff, shapes[j].halves);
  return r;
}

std::string MultiplierLaw::str() const {
  std::string s;
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    if (j) s += " + ";
    s += "(" + coeffs[j].str() + ")*" + to_string(TrigPoly::monomial(shapes[j]));
  }
  return s;
}

DiffOp vector_part(Family f, Ladder ladder) {
  const Rational s = sign_of(ladder);
  DiffOp v;
  switch (f) {
    case Family::A:
    case Family::Atilde:
    case Family::A1d: v = DiffOp::derivative({1, 0}); break;
    case Family::B:
      v = DiffOp::derivative({1, 0}, mul(trig::sin1(), trig::tan2()));
      v += DiffOp::derivative({0, 1}, trig::cos1());
      break;
    case Family::C:
      v = DiffOp::derivative({1, 0}, mul(trig::cos1(), trig::tan2()));
      v += DiffOp::derivative({0, 1}, -trig::sin1());
      break;
    case Family::M: v = DiffOp::derivative({0, 1}); break;
  }
  return s * v;
}

MultiplierLaw printed_law(Family f) {
  const Rational h = half();
  switch (f) {
    case Family::A:
    case Family::A1d: return {{kTan1, kCot1}, {affine(-h, -1, 0, 0), affine(h, 0, 1, 0)}};
    case Family::B: return {{kCos1Cot2, kSec1Tan2}, {affine(-h, 0, 0, -1), affine(h, 1, 0, 0)}};
    case Family::C: return {{kCsc1Tan2, kSin1Cot2}, {affine(-h, 0, 1, 0), affine(h, 0, 0, 1)}};
    case Family::Atilde: return {{kTan1, kCot1}, {affine(-h, 1, 0, 0), affine(h, 0, 1, 0)}};
    case Family::M: break;
  }
  throw std::invalid_argument("M has no three-index multiplier law");
}

const MultiplierLaw& corrected_law(Family f, Ladder ladder) {
  if (f == Family::A1d) f = Family::A;
  require_sector_family(f);
  static const std::map<std::pair<Family, Ladder>, MultiplierLaw> laws = fit_corrected_laws();
  return laws.at({f, ladder});
}

DiffOp build_first_order(Family f, Ladder ladder, const ParamVector& l, Variant variant, int m,
                         int n) {
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::Atilde: {
      const TrigPoly mult =
          variant == Variant::printed ? printed_law(f)(l) : corrected_law(f, ladder)(l);
      return vector_part(f, ladder) + DiffOp::multiplication(mult);
    }
    case Family::A1d:
      return build_first_order(Family::A, ladder, ParamVector(l[0] + m, l[1] + m, l[2]), variant);
    case Family::M: {
      // The printed first factorization; the general-n display differs for M^-.
      const Rational p = l[0] + l[1] + 2 * m + 1;
      const Rational tan_coeff = ladder == Ladder::lowering ? Rational(p + n) : Rational(p + n + 1);
      DiffOp op = vector_part(f, ladder);
      op += DiffOp::multiplication(-tan_coeff * trig::tan2() + (l[2] + n + half()) * trig::cot2());
      return op;
    }
  }
  throw std::invalid_argument("unknown operator family");
}

DiffOp build_hamiltonian(const ParamVector& l) {
  const Rational q = make_rational(1, 4);
  const TrigPoly sec2sq = power(trig::sec2(), 2);
  DiffOp h;
  h.add_term({0, 2}, Rational(-1));
  h.add_term({0, 1}, trig::tan2());
  h.add_term({2, 0}, -sec2sq);
  TrigPoly v = (l[2] * l[2] - q) * power(trig::csc2(), 2);
  v += (l[0] * l[0] - q) * mul(power(trig::sec1(), 2), sec2sq);
  v += (l[1] * l[1] - q) * mul(power(trig::csc1(), 2), sec2sq);
  h.add_term({0, 0}, v);
  return h;
}

DiffOp kinetic_operator() { return build_hamiltonian({half(), half(), half()}); }

DiffOp build_phi1_hamiltonian(const Rational& l0, const Rational& l1) {
  const Rational q = make_rational(1, 4);
  DiffOp h;
  h.add_term({2, 0}, Rational(-1));
  h.add_term({0, 0}, (l0 * l0 - q) * power(trig::sec1(), 2) + (l1 * l1 - q) * power(trig::csc1(), 2));
  return h;
}

DiffOp build_phi2_hamiltonian(const Rational& p, const Rational& l2) {
  DiffOp h;
  h.add_term({0, 2}, Rational(-1));
  h.add_term({0, 1}, trig::tan2());
  h.add_term({0, 0}, p * p * power(trig::sec2(), 2) +
                         (l2 * l2 - make_rational(1, 4)) * power(trig::csc2(), 2));
  return h;
}

GradedOp graded(Family f, Ladder ladder, Variant variant) {
  require_sector_family(f);
  const Shift s = lowering_shift(f);
  GradedOp g;
  g.name = family_name(f) + ladder_suffix(ladder);
  g.scale = half();
  if (ladder == Ladder::lowering) {
    g.shift = s;
    g.factory = [f, variant](const ParamVector& l) {
      return build_first_order(f, Ladder::lowering, l, variant);
    };
  } else {
    g.shift = -s;
    g.factory = [f, variant, s](const ParamVector& l) {
      return build_first_order(f, Ladder::raising, l - s, variant);
    };
  }
  return g;
}

std::string diagonal_name(Diagonal d) {
  switch (d) {
    case Diagonal::A: return "A";
    case Diagonal::B: return "B";
    case Diagonal::C: return "C";
    case Diagonal::D: return "D";
    case Diagonal::L0: return "L0";
    case Diagonal::L1: return "L1";
    case Diagonal::L2: return "L2";
  }
  throw std::invalid_argument("unknown diagonal operator");
}

Rational diagonal_value(Diagonal d, const ParamVector& l) {
  const Rational h = half();
  switch (d) {
    case Diagonal::A: return -(l[0] + l[1]) * h;
    case Diagonal::B: return -(l[0] + l[2]) * h;
    case Diagonal::C: return -(-l[1] + l[2]) * h;
    case Diagonal::D: return l[0] - l[1] - l[2];
    case Diagonal::L0: return l[0];
    case Diagonal::L1: return l[1];
    case Diagonal::L2: return l[2];
  }
  throw std::invalid_argument("unknown diagonal operator");
}

GradedOp graded_diagonal(Diagonal d) {
  GradedOp g;
  g.name = diagonal_name(d);
  g.factory = [d](const ParamVector& l) {
    return DiffOp::multiplication(diagonal_value(d, l));
  };
  return g;
}

DiffOp graded_product(const GradedOp& x, const GradedOp& y, const ParamVector& l) {
  return (x.scale * y.scale) * compose(x.at(l + y.shift), y.at(l));
}

GradedResult graded_commutator(const GradedOp& x, const GradedOp& y, const ParamVector& l) {
  DiffOp xy = compose(x.at(l + y.shift), y.at(l));
  DiffOp yx = compose(y.at(l + x.shift), x.at(l));
  return {x.shift + y.shift, reduce((x.scale * y.scale) * (xy - yx))};
}

GradedOp commutator_op(const GradedOp& x, const GradedOp& y) {
  GradedOp g;
  g.name = "[" + x.name + "," + y.name + "]";
  g.shift = x.shift + y.shift;
  g.factory = [x, y](const ParamVector& l) { return graded_commutator(x, y, l).op; };
  return g;
}

DiffOp intertwine_residual(const DiffOp& x, const Shift& shift, const ParamVector& l) {
  return reduce(compose(x, build_hamiltonian(l)) - compose(build_hamiltonian(l + shift), x));
}

DiffOp intertwine_residual(const GradedOp& x, const ParamVector& l) {
  return intertwine_residual(x.at(l), x.shift, l);
}

MultiplierSolution solve_multiplier(const DiffOp& vector_part, const Shift& shift,
                                    std::span<const TrigTerm> ansatz, const ParamVector& l) {
  MultiplierSolution out;
  out.residual = intertwine_residual(vector_part, shift, l);
  if (ansatz.empty()) {
    out.failure = "empty ansatz";
    return out;
  }
  std::vector<DiffOp> columns;
  for (const TrigTerm& g : ansatz)
    columns.push_back(intertwine_residual(DiffOp::multiplication(TrigPoly::monomial(g)), shift, l));

  using Key = std::pair<Order, Exps>;
  std::map<Key, std::size_t> rows;
  auto index_of = [&](const DiffOp& op) {
    for (const auto& [o, c] : op.terms())
      for (const auto& t : c.terms()) rows.emplace(Key{o, t.halves}, 0);
  };
  index_of(out.residual);
  for (const auto& c : columns) index_of(c);
  std::size_t next = 0;
  for (auto& [k, idx] : rows) idx = next++;

  const std::size_t n = ansatz.size();
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(n));
  std::vector<Rational> b(rows.size());
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [o, c] : columns[j].terms())
      for (const auto& t : c.terms()) a[rows.at({o, t.halves})][j] = t.coeff;
  for (const auto& [o, c] : out.residual.terms())
    for (const auto& t : c.terms()) b[rows.at({o, t.halves})] = -t.coeff;

  LinearSolution sol = solve_linear(std::move(a), std::move(b), n);
  if (!sol.consistent) {
    out.failure = "inconsistent linear system";
    return out;
  }
  out.ok = true;
  out.unique = sol.unique;
  out.coefficients = sol.x;
  for (std::size_t j = 0; j < n; ++j)
    out.multiplier += TrigPoly::monomial(sol.x[j] * ansatz[j].coeff, ansatz[j].halves);
  out.multiplier = reduce(out.multiplier);
  out.residual =
      intertwine_residual(vector_part + DiffOp::multiplication(out.multiplier), shift, l);
  return out;
}

GradedOp reflect_conjugate(const GradedOp& x, int axis) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("reflection axis must be 0, 1 or 2");
  GradedOp g;
  g.name = "I" + std::to_string(axis) + "(" + x.name + ")";
  g.shift = reflect_shift(x.shift, axis);
  g.scale = x.scale;
  g.factory = [x, axis](const ParamVector& l) { return x.factory(l.reflected(axis)); };
  return g;
}

GradedOp tilde(Family f, Ladder ladder) {
  int axis = 0;
  switch (f) {
    case Family::A: axis = 0; break;
    case Family::B: axis = 2; break;
    case Family::C: axis = 1; break;
    default: throw std::invalid_argument("tilde is defined for A, B, C");
  }
  GradedOp g = reflect_conjugate(graded(f, ladder), axis);
  g.name = family_name(f) + "t" + ladder_suffix(ladder);
  return g;
}

std::string casimir_name(CasimirKind k) {
  switch (k) {
    case CasimirKind::su3_esp: return "su3_esp";
    case CasimirKind::so4_ca: return "so4_ca";
    case CasimirKind::so6_cass: return "so6_cass";
  }
  throw std::invalid_argument("unknown Casimir kind");
}

Rational printed_casimir_constant(CasimirKind k) {
  switch (k) {
    case CasimirKind::su3_esp: return make_rational(15, 4);
    case CasimirKind::so4_ca: return Rational(1);
    case CasimirKind::so6_cass: return make_rational(41, 12);
  }
  throw std::invalid_argument("unknown Casimir kind");
}

DiffOp casimir_identity(CasimirKind kind, const ParamVector& l, std::optional<Rational> constant) {
  const Rational k = constant ? *constant : printed_casimir_constant(kind);
  auto anti = [&l](const GradedOp& p, const GradedOp& m) {
    return graded_product(p, m, l) + graded_product(m, p, l);
  };
  DiffOp sum;
  switch (kind) {
    case CasimirKind::su3_esp: {
      DiffOp cas;
      for (Family f : {Family::A, Family::B, Family::C})
        cas += graded_product(graded(f, Ladder::raising), graded(f, Ladder::lowering), l);
      Rational diag = 0;
      for (Diagonal d : {Diagonal::A, Diagonal::B, Diagonal::C}) {
        Rational x = diagonal_value(d, l);
        diag += make_rational(2, 3) * x * (x - make_rational(3, 2));
      }
      cas += DiffOp::multiplication(diag);
      const Rational dv = diagonal_value(Diagonal::D, l);
      sum = Rational(4) * cas;
      sum += DiffOp::multiplication(Rational(-dv * dv / 3 + k));
      sum -= build_hamiltonian(l);
      break;
    }
    case CasimirKind::so4_ca: {
      sum = anti(graded(Family::A, Ladder::raising), graded(Family::A, Ladder::lowering));
      sum += anti(tilde(Family::A, Ladder::raising), tilde(Family::A, Ladder::lowering));
      sum += DiffOp::multiplication(Rational(l[0] * l[0] + l[1] * l[1] + k));
      sum -= build_phi1_hamiltonian(l[0], l[1]);
      break;
    }
    case CasimirKind::so6_cass: {
      for (Family f : {Family::A, Family::B, Family::C}) {
        sum += anti(graded(f, Ladder::raising), graded(f, Ladder::lowering));
        sum += anti(tilde(f, Ladder::raising), tilde(f, Ladder::lowering));
      }
      sum += DiffOp::multiplication(Rational(l[0] * l[0] + l[1] * l[1] + l[2] * l[2] + k));
      sum -= build_hamiltonian(l);
      break;
    }
  }
  return reduce(sum);
}

std::optional<Rational> casimir_engine_constant(CasimirKind kind, const ParamVector& l) {
  std::optional<Rational> c = as_scalar(casimir_identity(kind, l, Rational(0)));
  if (!c) return std::nullopt;
  return Rational(-*c);
}

}  // namespace octa
