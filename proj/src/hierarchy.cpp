#include "octa/hierarchy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

Rational half() { return make_rational(1, 2); }

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add(Poly& a, const Poly& b, const Rational& s) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

Poly jacobi_explicit(int n, const Rational& a, const Rational& b) {
  const Poly xm{Rational(-1, 2), Rational(1, 2)};  // (x - 1)/2
  const Poly xp{Rational(1, 2), Rational(1, 2)};   // (x + 1)/2
  Poly out{Rational(0)};
  for (int k = 0; k <= n; ++k) {
    Poly term{binomial(Rational(n + a), n - k) * binomial(Rational(n + b), k)};
    for (int i = 0; i < k; ++i) term = poly_mul(term, xm);
    for (int i = 0; i < n - k; ++i) term = poly_mul(term, xp);
    poly_add(out, term, Rational(1));
  }
  return out;
}

TrigPoly monomial(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return TrigPoly::monomial(TrigTerm::make(Rational(1), a, b, c, d));
}

int as_int(const Rational& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p())
    throw std::invalid_argument(std::string(what) + " must be an integer");
  return static_cast<int>(q.get_num().get_si());
}

void require_count(const std::vector<Rational>& p, std::size_t n, const char* what) {
  if (p.size() != n)
    throw std::invalid_argument(std::string(what) + " expects " + std::to_string(n) +
                                " parameters");
}

void require_annihilated(const std::vector<std::string>& ops, const StateRecord& s) {
  for (const auto& name : ops) {
    GradedOp op = ladder_operator(name);
    if (!is_zero(apply(op.at(s.params), s.wavefunction)))
      throw std::logic_error("fundamental state not annihilated by " + name);
  }
}

std::vector<std::string> algebra_ladders(Algebra a) {
  switch (a) {
    case Algebra::u3: return {"A+", "A-", "B+", "B-", "C+", "C-"};
    case Algebra::so4: return {"A+", "A-", "At+", "At-"};
    case Algebra::so6: return ladder_names();
  }
  throw std::invalid_argument("unknown algebra");
}

}  // namespace

JacobiPoly jacobi(int n, const Rational& alpha, const Rational& beta) {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be nonnegative");
  JacobiPoly j{n, alpha, beta, {}};
  Poly prev{Rational(1)};
  if (n == 0) {
    j.coeffs = prev;
    return j;
  }
  Poly cur{Rational((alpha - beta) / 2), Rational((alpha + beta + 2) / 2)};
  for (int k = 2; k <= n; ++k) {
    const Rational s = 2 * k + alpha + beta;
    const Rational a1 = 2 * k * (k + alpha + beta) * (s - 2);
    if (a1 == 0) {
      j.coeffs = jacobi_explicit(n, alpha, beta);
      return j;
    }
    const Rational a2 = (s - 1) * (alpha * alpha - beta * beta);
    const Rational a3 = (s - 2) * (s - 1) * s;
    const Rational a4 = 2 * (k + alpha - 1) * (k + beta - 1) * s;
    Poly next = poly_mul(cur, Poly{a2, a3});
    poly_add(next, prev, -a4);
    for (auto& c : next) c /= a1;
    prev = std::move(cur);
    cur = std::move(next);
  }
  j.coeffs = cur;
  return j;
}

DiffOp block_hamiltonian(Block block, const ParamVector& l) {
  return block == Block::full ? build_hamiltonian(l) : build_phi1_hamiltonian(l[0], l[1]);
}

bool satisfies_eigen_equation(const StateRecord& s) {
  return is_zero(apply(block_hamiltonian(s.block, s.params), s.wavefunction) -
                 s.energy * s.wavefunction);
}

StateRecord make_state(ParamVector params, StateLabels labels, TrigPoly wavefunction,
                       Rational energy, Block block) {
  StateRecord s{std::move(params), std::move(labels), std::move(wavefunction), std::move(energy),
                block};
  if (is_zero(s.wavefunction)) throw std::logic_error("zero wavefunction");
  if (!satisfies_eigen_equation(s))
    throw std::logic_error("eigen-equation fails at " + to_string(s.params) + " for E = " +
                           to_string(s.energy));
  return s;
}

GradedOp ladder_operator(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("unknown ladder operator: " + name);
  const Ladder lad = name.back() == '+'   ? Ladder::raising
                     : name.back() == '-' ? Ladder::lowering
                                          : throw std::invalid_argument("unknown ladder operator: " + name);
  const std::string base = name.substr(0, name.size() - 1);
  static const std::map<std::string, std::pair<Family, bool>> table{
      {"A", {Family::A, false}},  {"B", {Family::B, false}},  {"C", {Family::C, false}},
      {"At", {Family::A, true}}, {"Bt", {Family::B, true}}, {"Ct", {Family::C, true}}};
  auto it = table.find(base);
  if (it == table.end()) throw std::invalid_argument("unknown ladder operator: " + name);
  const auto [family, reflected] = it->second;
  return reflected ? tilde(family, lad) : graded(family, lad);
}

std::vector<std::string> ladder_names() {
  return {"A+", "A-", "B+", "B-", "C+", "C-", "At+", "At-", "Bt+", "Bt-", "Ct+", "Ct-"};
}

StateRecord ground_state(GroundKind kind, const std::vector<Rational>& p) {
  const Rational h = half();
  switch (kind) {
    case GroundKind::phi1_1d: {
      require_count(p, 3, "phi1_1d");
      const int m = as_int(p[2], "m");
      if (m < 0) throw std::invalid_argument("m must be nonnegative");
      const Rational l0 = p[0] + m, l1 = p[1] + m;
      StateLabels labels;
      labels.m = m;
      labels.su2_j = Rational((p[0] + p[1] + 2 * m) / 2);
      StateRecord s = make_state({l0, l1, Rational(0)}, labels, monomial(l0 + h, l1 + h, 0, 0),
                                 energy(EnergyKind::lambda_m, {p[0], p[1], Rational(m)}),
                                 Block::phi1);
      require_annihilated({"A-"}, s);
      return s;
    }
    case GroundKind::u3: {
      require_count(p, 2, "u3");
      const int m = as_int(p[0], "m"), n = as_int(p[1], "n");
      if (m < 0 || n < 0) throw std::invalid_argument("u3 labels must be nonnegative");
      StateLabels labels;
      labels.m = m;
      labels.n = n;
      labels.q = m + n;
      StateRecord s = make_state({Rational(m), Rational(0), Rational(n)}, labels,
                                 monomial(m + h, h, Rational(m + 1), n + h),
                                 energy(EnergyKind::E_q, {Rational(m + n)}));
      require_annihilated({"A-", "C-"}, s);
      return s;
    }
    case GroundKind::so4: {
      require_count(p, 1, "so4");
      const int n = as_int(p[0], "n");
      if (n < 0) throw std::invalid_argument("so4 label must be nonnegative");
      StateLabels labels;
      labels.n = n;
      labels.su2_j = make_rational(n, 2);
      StateRecord s = make_state({Rational(0), Rational(n), Rational(0)}, labels,
                                 monomial(h, n + h, 0, 0), Rational((n + 1) * (n + 1)), Block::phi1);
      require_annihilated({"A-", "At-"}, s);
      return s;
    }
    case GroundKind::so6_even:
    case GroundKind::so6_odd: {
      require_count(p, 1, "so6");
      const int n = as_int(p[0], "n");
      if (n < 0) throw std::invalid_argument("so6 label must be nonnegative");
      const bool odd = kind == GroundKind::so6_odd;
      if ((n % 2 == 1) != odd)
        throw std::invalid_argument(std::string("so6_") + (odd ? "odd" : "even") +
                                    " requires " + (odd ? "odd" : "even") + " n");
      StateLabels labels;
      labels.n = n;
      labels.q = n;
      StateRecord s = make_state({Rational(0), Rational(0), Rational(n)}, labels,
                                 monomial(h, h, 1, n + h), energy(EnergyKind::E_q, {Rational(n)}));
      require_annihilated({"A-", "C-", "At-"}, s);
      return s;
    }
  }
  throw std::invalid_argument("unknown ground-state kind");
}

LadderResult ladder_build(const StateRecord& start, const std::vector<std::string>& path) {
  LadderResult out;
  ParamVector l = start.params;
  TrigPoly wf = start.wavefunction;
  for (std::size_t i = 0; i < path.size(); ++i) {
    GradedOp op = ladder_operator(path[i]);
    if (start.block == Block::phi1 && op.shift[2] != 0)
      throw std::invalid_argument(path[i] + " does not act on the phi1 block");
    wf = reduce(apply(op.at(l), wf));
    l = l + op.shift;
    if (wf.empty()) {
      out.annihilated = true;
      out.annihilated_at = i;
      return out;
    }
  }
  out.state = make_state(l, start.labels, wf, start.energy, start.block);
  return out;
}

TrigPoly phi1_excited_wavefunction(const Rational& l0, const Rational& l1, int m) {
  const JacobiPoly p = jacobi(m, l1, l0);
  return mul(monomial(l0 + half(), l1 + half(), 0, 0),
             trig::cos_double_angle_poly(p.coeffs, Var::phi1));
}

TrigPoly separated_wavefunction(const ParamVector& l, int m, int n, JacobiConvention conv) {
  if (m < 0 || n < 0) throw std::invalid_argument("quantum numbers must be nonnegative");
  const Rational p = l[0] + l[1] + 2 * m + 1;
  const Rational alpha = conv == JacobiConvention::corrected ? l[2] : Rational(l[2] + half());
  const JacobiPoly g = jacobi(n, alpha, p);
  TrigPoly phi2 = mul(monomial(0, 0, p, l[2] + half()),
                      trig::cos_double_angle_poly(g.coeffs, Var::phi2));
  return mul(phi1_excited_wavefunction(l[0], l[1], m), phi2);
}

StateRecord closed_form_state(ClosedKind kind, const std::vector<Rational>& p) {
  switch (kind) {
    case ClosedKind::phi1_excited: {
      require_count(p, 3, "phi1_excited");
      const int m = as_int(p[2], "m");
      if (m < 0) throw std::invalid_argument("m must be nonnegative");
      StateLabels labels;
      labels.m = m;
      return make_state({p[0], p[1], Rational(0)}, labels,
                        phi1_excited_wavefunction(p[0], p[1], m),
                        energy(EnergyKind::lambda_m, p), Block::phi1);
    }
    case ClosedKind::separated_2d: {
      require_count(p, 5, "separated_2d");
      const int m = as_int(p[3], "m"), n = as_int(p[4], "n");
      const ParamVector l(p[0], p[1], p[2]);
      StateLabels labels;
      labels.m = m;
      labels.n = n;
      return make_state(l, labels, separated_wavefunction(l, m, n, JacobiConvention::corrected),
                        energy(EnergyKind::E_mn, p));
    }
  }
  throw std::invalid_argument("unknown closed-form kind");
}

Rational energy(EnergyKind kind, const std::vector<Rational>& p) {
  switch (kind) {
    case EnergyKind::lambda_m: {
      require_count(p, 3, "lambda_m");
      Rational r = p[0] + p[1] + 2 * p[2] + 1;
      return r * r;
    }
    case EnergyKind::E_mn: {
      require_count(p, 5, "E_mn");
      Rational s = p[0] + p[1] + p[2] + 2 * p[3] + 2 * p[4];
      return Rational((s + make_rational(3, 2)) * (s + make_rational(5, 2)));
    }
    case EnergyKind::E_q: {
      require_count(p, 1, "E_q");
      return Rational((p[0] + make_rational(3, 2)) * (p[0] + make_rational(5, 2)));
    }
  }
  throw std::invalid_argument("unknown energy kind");
}

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::u3: return "u3";
    case Algebra::so4: return "so4";
    case Algebra::so6: return "so6";
  }
  throw std::invalid_argument("unknown algebra");
}

long u3_dimension(int m, int n) { return static_cast<long>(m + 1) * (n + 1) * (m + n + 2) / 2; }

long so6_dimension(int q) {
  return static_cast<long>(q + 1) * (q + 2) * (q + 2) * (q + 3) / 12;
}

IurLattice iur_lattice(Algebra algebra, const std::vector<int>& label) {
  IurLattice lat;
  lat.algebra = algebra;
  lat.label = label;
  std::map<ParamVector, int> mult;
  auto need = [&](std::size_t n) {
    if (label.size() != n) throw std::invalid_argument("wrong number of lattice labels");
    for (int v : label)
      if (v < 0) throw std::invalid_argument("lattice labels must be nonnegative");
  };
  switch (algebra) {
    case Algebra::u3: {
      need(2);
      const int m = label[0], n = label[1];
      // Gelfand-Tsetlin patterns of (m+n, m, 0): mu1 in [m, m+n], mu2 in [0, m],
      // nu in [mu2, mu1]; the sector is read off the weight.
      for (int mu1 = m; mu1 <= m + n; ++mu1)
        for (int mu2 = 0; mu2 <= m; ++mu2)
          for (int nu = mu2; nu <= mu1; ++nu) {
            const int kc = mu1 + mu2 - m;
            ++mult[ParamVector(Rational(m - nu), Rational(kc - nu), Rational(n - kc))];
          }
      break;
    }
    case Algebra::so4: {
      need(1);
      const int n = label[0];
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) ++mult[ParamVector(Rational(b - a), Rational(n - a - b), 0)];
      break;
    }
    case Algebra::so6: {
      need(1);
      const int q = label[0];
      for (int t = 0; 2 * t <= q; ++t) {
        const int r = q - 2 * t;
        for (int a = -r; a <= r; ++a)
          for (int b = -(r - std::abs(a)); b <= r - std::abs(a); ++b) {
            const int c = r - std::abs(a) - std::abs(b);
            mult[ParamVector(Rational(a), Rational(b), Rational(c))] = t + 1;
            if (c != 0) mult[ParamVector(Rational(a), Rational(b), Rational(-c))] = t + 1;
          }
      }
      break;
    }
  }
  for (const auto& [p, k] : mult) {
    lat.points.push_back({p, k});
    lat.dimension += k;
  }
  return lat;
}

std::vector<IsoEnergyPart> iso_energy_decomposition(int q) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  std::vector<IsoEnergyPart> out;
  for (int m = q; m >= 0; --m) out.push_back({m, q - m, u3_dimension(m, q - m)});
  return out;
}

IurStates iur_states(Algebra algebra, const std::vector<int>& label) {
  StateRecord start;
  switch (algebra) {
    case Algebra::u3:
      if (label.size() != 2) throw std::invalid_argument("u3 needs (m, n)");
      start = ground_state(GroundKind::u3, {Rational(label[0]), Rational(label[1])});
      break;
    case Algebra::so4:
      if (label.size() != 1) throw std::invalid_argument("so4 needs n");
      start = ground_state(GroundKind::so4, {Rational(label[0])});
      break;
    case Algebra::so6:
      if (label.size() != 1) throw std::invalid_argument("so6 needs q");
      start = ground_state(label[0] % 2 ? GroundKind::so6_odd : GroundKind::so6_even,
                           {Rational(label[0])});
      break;
  }
  std::vector<GradedOp> ops;
  for (const auto& name : algebra_ladders(algebra)) ops.push_back(ladder_operator(name));

  std::map<ParamVector, std::vector<TrigPoly>> basis;
  std::deque<std::pair<ParamVector, TrigPoly>> queue;
  basis[start.params].push_back(start.wavefunction);
  queue.emplace_back(start.params, start.wavefunction);
  while (!queue.empty()) {
    auto [l, wf] = queue.front();
    queue.pop_front();
    for (const auto& op : ops) {
      TrigPoly next = reduce(apply(op.at(l), wf));
      if (next.empty()) continue;
      const ParamVector target = l + op.shift;
      auto& b = basis[target];
      b.push_back(next);
      if (exact_rank(b) < b.size()) {
        b.pop_back();
        continue;
      }
      queue.emplace_back(target, std::move(next));
    }
  }

  IurStates out;
  out.lattice.algebra = algebra;
  out.lattice.label = label;
  std::vector<std::pair<ParamVector, TrigPoly>> flat;
  for (const auto& [l, b] : basis) {
    if (b.empty()) continue;
    out.lattice.points.push_back({l, static_cast<int>(b.size())});
    out.lattice.dimension += static_cast<long>(b.size());
    for (const auto& f : b) flat.emplace_back(l, f);
  }
  out.states = sweep_map(flat, [&](const std::pair<ParamVector, TrigPoly>& e) {
    return make_state(e.first, start.labels, e.second, start.energy, start.block);
  });
  return out;
}

nlohmann::json to_json(const StateRecord& s) {
  nlohmann::json labels{{"m", s.labels.m}, {"n", s.labels.n}};
  if (s.labels.q) labels["q"] = *s.labels.q;
  if (s.labels.su2_j) labels["su2_j"] = to_string(*s.labels.su2_j);
  return {{"params", to_json(s.params)},
          {"labels", labels},
          {"energy", to_string(s.energy)},
          {"block", s.block == Block::full ? "full" : "phi1"},
          {"wavefunction", to_json(s.wavefunction)}};
}

StateRecord state_from_json(const nlohmann::json& j) {
  StateLabels labels;
  const auto& lj = j.at("labels");
  labels.m = lj.at("m").get<int>();
  labels.n = lj.at("n").get<int>();
  if (lj.contains("q")) labels.q = lj.at("q").get<int>();
  if (lj.contains("su2_j")) labels.su2_j = parse_rational(lj.at("su2_j").get<std::string>());
  const Block block =
      j.value("block", std::string("full")) == "phi1" ? Block::phi1 : Block::full;
  return make_state(param_vector_from_json(j.at("params")), labels,
                    trig_poly_from_json(j.at("wavefunction")),
                    parse_rational(j.at("energy").get<std::string>()), block);
}

nlohmann::json to_json(const IurLattice& lattice) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : lattice.points) {
    Rational shell = abs(p.params[0]) + abs(p.params[1]) + abs(p.params[2]);
    points.push_back({{"params", to_json(p.params)},
                      {"multiplicity", p.multiplicity},
                      {"shell", to_string(shell)}});
  }
  nlohmann::json j{{"algebra", algebra_name(lattice.algebra)},
                   {"label", lattice.label},
                   {"dimension", lattice.dimension},
                   {"points", points}};
  if (lattice.algebra == Algebra::so6 && !lattice.label.empty())
    j["parity"] = lattice.label[0] % 2 ? "odd" : "even";
  return j;
}

std::string lattice_csv(const IurLattice& lattice) {
  std::ostringstream os;
  os << "l0,l1,l2,multiplicity,shell\n";
  for (const auto& p : lattice.points) {
    Rational shell = abs(p.params[0]) + abs(p.params[1]) + abs(p.params[2]);
    os << p.params[0].get_str() << "," << p.params[1].get_str() << "," << p.params[2].get_str()
       << "," << p.multiplicity << "," << shell.get_str() << "\n";
  }
  return os.str();
}

}  // namespace octa
