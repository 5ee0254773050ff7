#include "octa/report.hpp"

#include "octa/algebra.hpp"
#include "octa/inner.hpp"
#include "octa/superpotential.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

using json = nlohmann::json;

Check check(std::string name, bool passed, json detail = json::object(), bool exact = true) {
  return {std::move(name), exact, passed, std::move(detail)};
}

json sectors_json(const std::vector<ParamVector>& v, std::size_t limit = 8) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out.push_back(to_json(v[i]));
  return out;
}

ParamVector pv(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

std::vector<ParamVector> nonnegative_box(int hi) { return sector_box(0, hi); }

struct PrintedRow {
  const char* x;
  const char* y;
  const char* coeff;
  const char* generator;
};

// The su(3) commutator table in print order.
const std::vector<PrintedRow>& printed_table() {
  static const std::vector<PrintedRow> rows{
      {"A", "A+", "1", "A+"},    {"A", "A-", "-1", "A-"},   {"A-", "A+", "2", "A"},
      {"A+", "B-", "1", "C-"},   {"A+", "B", "-1/2", "A+"}, {"A+", "C+", "-1", "B+"},
      {"A+", "C", "1/2", "A+"},  {"A-", "B+", "-1", "C+"},  {"A-", "B", "1/2", "A-"},
      {"A+", "C+", "1", "B-"},   {"A-", "C", "-1/2", "A-"}, {"A", "B+", "1/2", "B+"},
      {"A", "C+", "-1/2", "C+"}, {"A", "C-", "1/2", "C-"},  {"B", "B+", "1", "B+"},
      {"B", "B-", "-1", "B-"},   {"B-", "B+", "2", "B"},    {"B+", "C-", "-1", "A+"},
      {"B+", "C", "-1/2", "B+"}, {"B-", "C+", "1/2", "C+"}, {"B-", "C", "1/2", "B-"},
      {"B", "C+", "1/2", "C+"},  {"B", "C-", "1/2", "C-"},  {"C", "C+", "1", "C+"},
      {"C", "C-", "-1", "C-"},   {"C+", "C-", "2", "C"},    {"A-", "C-", "1", "B-"}};
  return rows;
}

Shift generator_shift(const std::string& name) {
  if (name.size() == 2) return ladder_operator(name).shift;
  return {0, 0, 0};
}

json terms_json(const std::vector<StructureTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({to_string(t.coeff), t.generator});
  return out;
}

const StructureEntry* find_entry(const std::vector<StructureEntry>& table, const std::string& x,
                                 const std::string& y) {
  for (const auto& e : table)
    if (e.x == x && e.y == y) return &e;
  return nullptr;
}

json table_deltas(const std::vector<StructureEntry>& table) {
  json out = json::array();
  for (const auto& row : printed_table()) {
    const StructureEntry* e = find_entry(table, row.x, row.y);
    const std::vector<StructureTerm> printed{{parse_rational(row.coeff), row.generator}};
    if (e && e->closed && e->terms == printed) continue;
    out.push_back(
        {{"id", std::string("structure_constant[") + row.x + "," + row.y + "]=" + row.coeff +
                    "*" + row.generator},
         {"printed", json::array({json::array({to_string(printed[0].coeff), row.generator})})},
         {"engine", e && e->closed ? terms_json(e->terms) : json(nullptr)},
         {"evidence",
          {{"commutator_shift", e ? e->shift : Shift{0, 0, 0}},
           {"printed_generator_shift", generator_shift(row.generator)},
           {"method", "graded commutator identified on every sector of {-1..1}^3"}}}});
  }
  return out;
}

// Family multipliers: printed law against the solved law.
json multiplier_deltas() {
  json out = json::array();
  const ParamVector witness = pv(1, 1, 1);
  for (Family f : {Family::A, Family::B, Family::C, Family::Atilde})
    for (Ladder lad : {Ladder::lowering, Ladder::raising}) {
      const Shift s = lowering_shift(f);
      const ParamVector acting = lad == Ladder::lowering ? witness : witness + s;
      const Shift shift = lad == Ladder::lowering ? s : -s;
      const DiffOp printed = build_first_order(f, lad, witness, Variant::printed);
      const DiffOp corrected = build_first_order(f, lad, witness, Variant::corrected);
      const bool printed_ok = intertwine_residual(printed, shift, acting).empty();
      const bool corrected_ok = intertwine_residual(corrected, shift, acting).empty();
      if (printed_ok) continue;
      out.push_back({{"id", family_name(f) + ladder_suffix(lad) + "_multiplier"},
                     {"printed", printed_law(f).str()},
                     {"engine", corrected_law(f, lad).str()},
                     {"evidence",
                      {{"sector", to_json(witness)},
                       {"printed_residual_zero", printed_ok},
                       {"engine_residual_zero", corrected_ok},
                       {"printed_operator", to_string(printed)},
                       {"engine_operator", to_string(corrected)}}}});
    }
  return out;
}

json casimir_delta() {
  const ParamVector l = pv(1, 1, 1);
  const std::optional<Rational> residual = as_scalar(casimir_identity(CasimirKind::so6_cass, l));
  const std::optional<Rational> engine = casimir_engine_constant(CasimirKind::so6_cass, l);
  return {{"id", "so6_symmetrized_constant"},
          {"printed", to_string(printed_casimir_constant(CasimirKind::so6_cass))},
          {"engine", engine ? to_string(*engine) : "none"},
          {"evidence",
           {{"sector", to_json(l)},
            {"residual_with_printed_constant", residual ? to_string(*residual) : "non-scalar"},
            {"residual_zero_with_engine_constant",
             engine && casimir_identity(CasimirKind::so6_cass, l, *engine).empty()}}}};
}

json jacobi_alpha_delta() {
  const ParamVector l = pv(0, 0, 1);
  const int m = 0, n = 1;
  const Rational e = energy(EnergyKind::E_mn, {l[0], l[1], l[2], Rational(m), Rational(n)});
  auto holds = [&](JacobiConvention c) {
    const TrigPoly w = separated_wavefunction(l, m, n, c);
    return is_zero(apply(build_hamiltonian(l), w) - e * w);
  };
  return {{"id", "phi2_jacobi_alpha"},
          {"printed", "P_n^(l2+1/2, l0+l1+2m+1)(cos 2phi2)"},
          {"engine", "P_n^(l2, l0+l1+2m+1)(cos 2phi2)"},
          {"evidence",
           {{"sector", to_json(l)},
            {"m", m},
            {"n", n},
            {"energy", to_string(e)},
            {"printed_eigen_equation_holds", holds(JacobiConvention::printed)},
            {"engine_eigen_equation_holds", holds(JacobiConvention::corrected)}}}};
}

json m_display_delta() {
  const ParamVector l = pv(1, 2, 1);
  const int m = 1, n = 1;
  const Rational p = l[0] + l[1] + 2 * m + 1;
  const DiffOp h = build_phi2_hamiltonian(Rational(p + n), Rational(l[2] + n));
  const DiffOp h1 = build_phi2_hamiltonian(Rational(p + n + 1), Rational(l[2] + n + 1));
  const DiffOp displayed =
      DiffOp::derivative({0, 1}, Rational(-1)) +
      DiffOp::multiplication(Rational(-(p + 1 + n)) * trig::tan2() +
                             Rational(l[2] + n + make_rational(1, 2)) * trig::cot2());
  const DiffOp engine = build_first_order(Family::M, Ladder::lowering, l, Variant::corrected, m, n);
  return {{"id", "M_minus_general_n"},
          {"printed", "-d2 - (l0+l1+2(m+1)+n) tan(phi2) + (l2+n+1/2) cot(phi2)"},
          {"engine", "-d2 - (l0+l1+2m+1+n) tan(phi2) + (l2+n+1/2) cot(phi2)"},
          {"evidence",
           {{"sector", to_json(l)},
            {"m", m},
            {"n", n},
            {"printed_intertwines", is_zero(compose(displayed, h) - compose(h1, displayed))},
            {"engine_intertwines", is_zero(compose(engine, h) - compose(h1, engine))}}}};
}

json ground_exponent_delta() {
  const ParamVector l = pv(1, 0, 2);
  const int m = 1;
  const Rational p = l[0] + l[1] + 2 * m + 1;
  const TrigPoly g0 =
      TrigPoly::monomial(TrigTerm::make(Rational(1), 0, 0, p, l[2] + make_rational(1, 2)));
  const DiffOp mm = build_first_order(Family::M, Ladder::lowering, l, Variant::printed, m, 0);
  return {{"id", "phi2_ground_exponent"},
          {"printed", "cos^(l1+l0 phi2+2m+1)"},
          {"engine", "cos^(l0+l1+2m+1)(phi2)"},
          {"evidence",
           {{"sector", to_json(l)}, {"m", m}, {"M_minus_annihilates", is_zero(apply(mm, g0))}}}};
}

json lambda_substitution_delta() {
  const StateRecord s = ground_state(GroundKind::phi1_1d, {Rational(1), Rational(2), Rational(1)});
  return {{"id", "phi2_separation_constant"},
          {"printed", "alpha = lambda_m = (l0+l1+2m)^2"},
          {"engine", "lambda_m = (l0+l1+2m+1)^2"},
          {"evidence",
           {{"l0", 1}, {"l1", 2}, {"m", 1}, {"phi1_ground_energy", to_string(s.energy)}}}};
}

bool uniform_engine_constant(CasimirKind kind, const std::vector<ParamVector>& sectors,
                             std::optional<Rational>& constant) {
  auto values = sweep_map(sectors, [kind](const ParamVector& l) {
    return casimir_engine_constant(kind, l);
  });
  constant.reset();
  for (const auto& v : values) {
    if (!v) return false;
    if (constant && *constant != *v) return false;
    constant = v;
  }
  return constant.has_value();
}

SuiteReport intertwine_suite(int range) {
  SuiteReport r;
  r.name = "intertwine";
  const auto box = sector_box(-range, range);
  for (Ladder lad : {Ladder::lowering, Ladder::raising}) {
    GradedOp a = graded(Family::A, lad, Variant::printed);
    auto bad = intertwine_failures(a, box);
    r.checks.push_back(check("printed_" + a.name + "_exact", bad.empty(),
                             {{"sectors", box.size()}, {"failures", sectors_json(bad)}}));
  }
  json audit = json::object();
  for (Family f : {Family::B, Family::C, Family::Atilde})
    for (Ladder lad : {Ladder::lowering, Ladder::raising}) {
      GradedOp printed = graded(f, lad, Variant::printed);
      GradedOp corrected = graded(f, lad, Variant::corrected);
      auto bad_printed = intertwine_failures(printed, box);
      auto bad_corrected = intertwine_failures(corrected, box);
      r.checks.push_back(check("corrected_" + corrected.name + "_exact", bad_corrected.empty(),
                               {{"sectors", box.size()}, {"failures", sectors_json(bad_corrected)}}));
      audit[corrected.name] = {{"printed_law", printed_law(f).str()},
                               {"engine_law", corrected_law(f, lad).str()},
                               {"printed_failing_sectors", bad_printed.size()},
                               {"sectors", box.size()}};
    }
  r.data["multiplier_audit"] = audit;

  // u(3) fundamental states: corrected A-, C- annihilate; printed C- does not.
  int printed_c_failures = 0, states = 0;
  bool all_ok = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      ++states;
      try {
        StateRecord s = ground_state(GroundKind::u3, {Rational(m), Rational(n)});
        DiffOp cp = build_first_order(Family::C, Ladder::lowering, s.params, Variant::printed);
        if (!is_zero(apply(cp, s.wavefunction))) ++printed_c_failures;
      } catch (const std::logic_error&) {
        all_ok = false;
      }
    }
  r.checks.push_back(check("u3_fundamental_annihilation", all_ok,
                           {{"states", states}, {"printed_C_minus_failures", printed_c_failures}}));

  bool so_ok = true;
  try {
    for (int n = 0; n <= 3; ++n) ground_state(GroundKind::so4, {Rational(n)});
    for (int n = 0; n <= 4; ++n)
      ground_state(n % 2 ? GroundKind::so6_odd : GroundKind::so6_even, {Rational(n)});
  } catch (const std::logic_error&) {
    so_ok = false;
  }
  r.checks.push_back(check("so4_so6_fundamental_annihilation", so_ok));

  bool m_ok = true;
  for (int m = 0; m <= 2 && m_ok; ++m)
    for (int n = 0; n <= 2 && m_ok; ++n)
      for (const ParamVector& l : {pv(0, 0, 0), pv(1, 2, 1), pv(2, 0, 3)}) {
        const Rational p = l[0] + l[1] + 2 * m + 1;
        const DiffOp lo = build_first_order(Family::M, Ladder::lowering, l, Variant::printed, m, n);
        const DiffOp hi = build_first_order(Family::M, Ladder::raising, l, Variant::printed, m, n);
        const Rational mu = energy(EnergyKind::E_mn, {l[0], l[1], l[2], Rational(m), Rational(n)});
        const DiffOp h = build_phi2_hamiltonian(Rational(p + n), Rational(l[2] + n));
        m_ok = is_zero(compose(hi, lo) + DiffOp::multiplication(mu) - h);
      }
  r.checks.push_back(check("M_factorization", m_ok));
  return r;
}

SuiteReport algebra_suite(int range) {
  SuiteReport r;
  r.name = "algebra";
  const auto box = sector_box(-range, range);
  const auto table = structure_table(box);
  bool closed = true;
  for (const auto& e : table) closed = closed && e.closed;
  r.checks.push_back(check("closure", closed, {{"sectors", box.size()}, {"pairs", table.size()}}));
  r.checks.push_back(check("antisymmetry", table_antisymmetric(table)));
  r.data["structure_constants"] = structure_table_json(table);

  for (const char* f : {"A", "B", "C"}) {
    const StructureEntry* e = find_entry(table, std::string(f) + "-", std::string(f) + "+");
    const bool ok = e && e->closed && e->terms.size() == 1 && e->terms[0].generator == f &&
                    e->terms[0].coeff == -2;
    r.checks.push_back(check(std::string("[") + f + "-," + f + "+]=-2" + f, ok,
                             {{"engine", e ? terms_json(e->terms) : json(nullptr)}}));
  }
  bool cba = true;
  for (const auto& l : box)
    cba = cba && diagonal_value(Diagonal::C, l) ==
                     diagonal_value(Diagonal::B, l) - diagonal_value(Diagonal::A, l);
  r.checks.push_back(check("C=B-A", cba));

  const auto gens = u3_generators();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k) triples.push_back({i, j, k});
  const std::vector<ParamVector> samples{pv(1, -2, 2), pv(0, 1, -1), pv(-2, 0, 1)};
  auto jac = sweep_map(triples, [&](const std::array<std::size_t, 3>& t) -> char {
    for (const auto& l : samples)
      if (!jacobi_residual(gens[t[0]], gens[t[1]], gens[t[2]], l).empty()) return 0;
    return 1;
  });
  std::size_t jac_bad = 0;
  for (char ok : jac) jac_bad += !ok;
  r.checks.push_back(check("jacobi", jac_bad == 0,
                           {{"triples", triples.size()}, {"sectors", samples.size()},
                            {"failures", jac_bad}}));
  // Nonzero commutators that the printed table leaves out (up to order).
  json unlisted = json::array();
  for (const auto& e : table) {
    if (e.terms.empty() || e.x >= e.y) continue;
    bool listed = false;
    for (const auto& row : printed_table())
      listed = listed || (e.x == row.x && e.y == row.y) || (e.x == row.y && e.y == row.x);
    if (!listed) unlisted.push_back({e.x + "," + e.y, terms_json(e.terms)});
  }
  r.data["nonzero_not_in_printed_table"] = unlisted;

  const KineticReport k = kinetic_rotation_check();
  r.checks.push_back(check("vector_fields_so3", k.ok(),
                           {{"[a+,b+]/c+", k.so3[0] ? to_string(*k.so3[0]) : "none"},
                            {"[b+,c+]/a+", k.so3[1] ? to_string(*k.so3[1]) : "none"},
                            {"[c+,a+]/b+", k.so3[2] ? to_string(*k.so3[2]) : "none"}}));
  return r;
}

SuiteReport casimir_suite(int range) {
  SuiteReport r;
  r.name = "casimir";
  const auto box = sector_box(-range, range);
  json blocks = json::array();
  for (CasimirKind kind : {CasimirKind::su3_esp, CasimirKind::so4_ca, CasimirKind::so6_cass}) {
    const Rational printed = printed_casimir_constant(kind);
    std::optional<Rational> engine;
    const bool uniform = uniform_engine_constant(kind, box, engine);
    const auto bad_printed = casimir_failures(kind, box);
    std::vector<ParamVector> bad_engine = box;
    if (uniform) bad_engine = casimir_failures(kind, box, engine);
    blocks.push_back({{"kind", casimir_name(kind)},
                      {"printed_constant", to_string(printed)},
                      {"engine_constant", engine ? json(to_string(*engine)) : json(nullptr)},
                      {"residual_zero_with_printed", bad_printed.empty()},
                      {"residual_zero_with_engine", uniform && bad_engine.empty()},
                      {"sectors", box.size()}});
    r.checks.push_back(check(casimir_name(kind) + "_identity", uniform && bad_engine.empty(),
                             {{"engine_constant", engine ? json(to_string(*engine)) : json(nullptr)},
                              {"failures", sectors_json(bad_engine)}}));
  }
  r.data["identities"] = blocks;
  return r;
}

SuiteReport riccati_suite(int range) {
  SuiteReport r;
  r.name = "riccati";
  const auto box = sector_box(-range, range);
  const auto reports = sweep_map(box, [](const ParamVector& l) { return riccati_check(l); });
  bool zero = true;
  json fragments = json::array();
  std::vector<std::pair<ParamVector, Rational>> samples;
  for (const auto& rep : reports) {
    zero = zero && rep.residual_zero;
    fragments.push_back(to_json(rep));
    samples.emplace_back(rep.sector, rep.lambda);
  }
  const QuadraticFit fit = fit_quadratic(samples);
  bool closed_form = fit.consistent;
  for (const auto& [l, v] : samples) closed_form = closed_form && riccati_lambda_closed_form(l) == v;
  r.checks.push_back(check("riccati_residual_zero", zero, {{"sectors", box.size()}}));
  r.checks.push_back(check("lambda_quadratic", closed_form, {{"lambda", fit.str()}}));
  r.data["lambda_fit"] = fit.str();
  r.data["sectors"] = fragments;

  const KineticReport k = kinetic_rotation_check();
  r.checks.push_back(check("kinetic_identity", k.kinetic_residual.empty()));

  // Simultaneous superpotentials on u(3) fundamental states.
  bool simultaneous = true;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const StateRecord s = ground_state(GroundKind::u3, {Rational(m), Rational(n)});
      for (Family f : {Family::A, Family::C}) {
        const TrigPoly w = superpot_from_state(vector_part(f, Ladder::lowering), s.wavefunction);
        const TrigPoly mult =
            decompose(build_first_order(f, Ladder::lowering, s.params, Variant::corrected))
                .multiplier;
        simultaneous = simultaneous && equivalent(w, mult);
      }
    }
  r.checks.push_back(check("u3_simultaneous_superpotentials", simultaneous));
  return r;
}

SuiteReport hermiticity_suite(int range) {
  SuiteReport r;
  r.name = "hermiticity";
  const int top = std::min(range, 2);

  // Orthogonality of separated states with distinct energies.
  double orth = 0.0;
  for (const auto& l : nonnegative_box(top)) {
    std::vector<StateRecord> states;
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; m + n <= 2; ++n)
        states.push_back(closed_form_state(
            ClosedKind::separated_2d, {l[0], l[1], l[2], Rational(m), Rational(n)}));
    const GramReport g = gram(states);
    for (std::size_t i = 0; i < states.size(); ++i)
      for (std::size_t j = 0; j < states.size(); ++j)
        if (states[i].energy != states[j].energy)
          orth = std::max(orth, std::abs(g.matrix(i, j)) / std::sqrt(g.matrix(i, i) * g.matrix(j, j)));
  }
  r.checks.push_back(check("orthogonality", orth <= 1e-10,
                           {{"max_normalized", orth}, {"tolerance", 1e-10}}, false));

  // Adjoint pairs on IUR states.
  double adj = 0.0;
  int pairs = 0;
  auto scan = [&adj, &pairs](const IurStates& iur, const std::vector<std::string>& families,
                     Measure measure) {
    for (const auto& a : iur.states)
      for (const auto& b : iur.states)
        for (const auto& fam : families) {
          const GradedOp lo = ladder_operator(fam + "-");
          if (b.params != a.params + lo.shift) continue;
          ++pairs;
          const double res = adjoint_residual(fam, a.params, a.wavefunction, b.wavefunction, measure);
          adj = std::max(adj, res / (norm(a.wavefunction, measure) * norm(b.wavefunction, measure)));
        }
  };
  for (int m = 0; m <= top; ++m)
    for (int n = 0; m + n <= top; ++n)
      scan(iur_states(Algebra::u3, {m, n}), {"A", "B", "C"}, Measure::sphere);
  for (int n = 0; n <= top; ++n) scan(iur_states(Algebra::so4, {n}), {"A", "At"}, Measure::phi1);
  r.checks.push_back(check("adjoint_pairs", pairs > 0 && adj <= 1e-10,
                           {{"max_relative", adj}, {"pairs", pairs}, {"tolerance", 1e-10}}, false));

  // Beta evaluation against tanh-sinh quadrature.
  boost::math::quadrature::tanh_sinh<double> integrator;
  double beta = 0.0;
  constexpr double edge = std::numbers::pi / 2;
  for (int a = -1; a <= 5; a += 2)
    for (int b = -1; b <= 5; b += 3) {
      const TrigTerm t{Rational(1), {a, b, 2, 1}};
      const TrigTerm u{Rational(1), {2, 1, b, a + 2}};
      const double exact = mono_inner(t, u);
      auto f1 = [&](double x) { return std::pow(std::cos(x), (a + 2) / 2.0) * std::pow(std::sin(x), (b + 1) / 2.0); };
      auto f2 = [&](double x) { return std::pow(std::cos(x), (2 + b) / 2.0 + 1) * std::pow(std::sin(x), (a + 3) / 2.0); };
      const double quad = integrator.integrate(f1, 0.0, edge) * integrator.integrate(f2, 0.0, edge);
      beta = std::max(beta, std::abs(exact - quad) / std::abs(exact));
    }
  r.checks.push_back(check("beta_vs_quadrature", beta <= 1e-9,
                           {{"max_relative", beta}, {"tolerance", 1e-9}}, false));

  // Symbolic action against finite differences.
  const std::vector<std::pair<double, double>> points{{0.3, 0.7}, {1.1, 0.4}, {0.8, 1.2}};
  double fd = 0.0;
  const StateRecord q1 = ground_state(GroundKind::so6_odd, {Rational(1)});
  fd = std::max(fd, numeric_oracle_check(build_hamiltonian(q1.params), q1.wavefunction, points));
  const StateRecord s = closed_form_state(ClosedKind::separated_2d,
                                          {Rational(1), Rational(0), Rational(1), Rational(1), Rational(1)});
  fd = std::max(fd, numeric_oracle_check(build_hamiltonian(s.params), s.wavefunction, points));
  fd = std::max(fd, numeric_oracle_check(build_first_order(Family::B, Ladder::lowering, s.params,
                                                           Variant::corrected),
                                         s.wavefunction, points));
  r.checks.push_back(check("finite_difference_oracle", fd <= 1e-6,
                           {{"max_relative", fd}, {"tolerance", 1e-6}}, false));

  bool positive = true;
  for (int q = 0; q <= top + 1; ++q)
    for (const auto& st : iur_states(Algebra::so6, {q}).states)
      positive = positive && norm(st.wavefunction) > 0;
  r.checks.push_back(check("norm_positivity", positive, json::object(), false));
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Suite parse_suite(const std::string& name) {
  for (Suite s : {Suite::algebra, Suite::intertwine, Suite::casimir, Suite::riccati,
                  Suite::hermiticity, Suite::all})
    if (suite_name(s) == name) return s;
  throw std::invalid_argument("unknown suite: " + name);
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::algebra: return "algebra";
    case Suite::intertwine: return "intertwine";
    case Suite::casimir: return "casimir";
    case Suite::riccati: return "riccati";
    case Suite::hermiticity: return "hermiticity";
    case Suite::all: return "all";
  }
  throw std::invalid_argument("unknown suite");
}

SuiteReport run_suite(Suite suite, int range) {
  if (range < 1) throw std::invalid_argument("range must be >= 1");
  switch (suite) {
    case Suite::algebra: return algebra_suite(range);
    case Suite::intertwine: return intertwine_suite(range);
    case Suite::casimir: return casimir_suite(range);
    case Suite::riccati: return riccati_suite(range);
    case Suite::hermiticity: return hermiticity_suite(range);
    case Suite::all: break;
  }
  throw std::invalid_argument("run_suite runs one suite at a time");
}

json paper_deltas() {
  json out = json::array();
  for (auto& d : multiplier_deltas()) out.push_back(d);
  out.push_back(casimir_delta());
  out.push_back(jacobi_alpha_delta());
  out.push_back(m_display_delta());
  out.push_back(ground_exponent_delta());
  out.push_back(lambda_substitution_delta());
  for (auto& d : table_deltas(structure_table(sector_box(-1, 1)))) out.push_back(d);
  return out;
}

json paper_flags() {
  json flags = json::array();
  {
    const StateRecord q1 = ground_state(GroundKind::so6_odd, {Rational(1)});
    const StateRecord q3 = ground_state(GroundKind::so6_odd, {Rational(3)});
    flags.push_back({{"id", "caption_energies"},
                     {"printed", {{"q1", "5/2*3/2 = 15/4"}, {"q3", "7/2*5/2 = 35/4"}}},
                     {"engine", {{"q1", to_string(q1.energy)}, {"q3", to_string(q3.energy)}}},
                     {"evidence", "H applied exactly to the odd so(6) fundamental states; "
                                  "matches (q+3/2)(q+5/2)"}});
  }
  {
    json values = json::array();
    bool matches_su2 = true;
    for (const auto& l : {pv(1, 2, 0), pv(0, 3, 1), pv(-1, 2, 2)}) {
      const GradedResult c =
          graded_commutator(graded(Family::A, Ladder::lowering), graded(Family::A, Ladder::raising), l);
      const std::optional<Rational> v = as_scalar(c.op);
      matches_su2 = matches_su2 && v && *v == -2 * diagonal_value(Diagonal::A, l);
      values.push_back({{"sector", to_json(l)}, {"value", v ? to_string(*v) : "non-scalar"}});
    }
    flags.push_back({{"id", "A_minus_A_plus_sign"},
                     {"printed", {{"su2_relations", "[A-,A+] = -2A"}, {"su3_table", "[A-,A+] = 2A"}}},
                     {"engine", matches_su2 ? "[A-,A+] = -2A" : "other"},
                     {"evidence", values}});
  }
  {
    const GradedOp ap = graded(Family::A, Ladder::raising);
    const GradedOp cp = graded(Family::C, Ladder::raising);
    const StructureEntry e = identify(commutator_op(ap, cp), sector_box(-1, 1));
    flags.push_back({{"id", "duplicate_A_plus_C_plus_row"},
                     {"printed", json::array({"[A+,C+] = -B+", "[A+,C+] = B-"})},
                     {"engine", terms_json(e.terms)},
                     {"evidence",
                      {{"commutator_shift", e.shift},
                       {"B+_shift", graded(Family::B, Ladder::raising).shift},
                       {"B-_shift", graded(Family::B, Ladder::lowering).shift}}}});
  }
  return flags;
}

json verify_report(Suite suite, int range) {
  if (range < 1) throw std::invalid_argument("range must be >= 1");
  std::vector<Suite> suites;
  if (suite == Suite::all)
    suites = {Suite::intertwine, Suite::algebra, Suite::casimir, Suite::riccati, Suite::hermiticity};
  else
    suites = {suite};
  json sections = json::object();
  bool passed = true;
  for (Suite s : suites) {
    const SuiteReport rep = run_suite(s, range);
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name},
                        {"kind", c.exact ? "exact" : "numeric"},
                        {"passed", c.passed},
                        {"detail", c.detail}});
    sections[rep.name] = {{"passed", rep.passed()}, {"checks", checks}, {"data", rep.data}};
    passed = passed && rep.passed();
  }
  return {{"suite", suite_name(suite)},
          {"range", range},
          {"sectors", sector_box(-range, range).size()},
          {"passed", passed},
          {"sections", sections},
          {"paper_deltas", paper_deltas()},
          {"flags", paper_flags()}};
}

std::string verify_text(const json& report) {
  std::ostringstream os;
  os << "suite " << report.at("suite").get<std::string>() << ", range "
     << report.at("range").get<int>() << ", " << report.at("sectors").get<std::size_t>()
     << " sectors\n";
  for (const auto& [name, section] : report.at("sections").items()) {
    os << "[" << name << "]\n";
    for (const auto& c : section.at("checks"))
      os << "  " << (c.at("passed").get<bool>() ? "PASS" : "FAIL") << "  "
         << c.at("name").get<std::string>() << " (" << c.at("kind").get<std::string>() << ")\n";
    if (section.at("data").contains("identities"))
      for (const auto& b : section.at("data").at("identities"))
        os << "  identity " << b.at("kind").get<std::string>() << ": printed constant "
           << b.at("printed_constant").get<std::string>() << ", engine constant "
           << (b.at("engine_constant").is_null() ? "none" : b.at("engine_constant").get<std::string>())
           << "\n";
    if (section.at("data").contains("lambda_fit"))
      os << "  lambda_l = " << section.at("data").at("lambda_fit").get<std::string>() << "\n";
  }
  os << "paper_deltas:\n";
  for (const auto& d : report.at("paper_deltas"))
    os << "  " << d.at("id").get<std::string>() << "\n      printed: " << d.at("printed").dump()
       << "\n      engine:  " << d.at("engine").dump() << "\n";
  os << "flags:\n";
  for (const auto& f : report.at("flags"))
    os << "  " << f.at("id").get<std::string>() << ": printed " << f.at("printed").dump()
       << ", engine " << f.at("engine").dump() << "\n";
  os << (report.at("passed").get<bool>() ? "PASSED" : "FAILED") << "\n";
  return os.str();
}

json spectrum_table(int qmax) {
  if (qmax < 0) throw std::invalid_argument("qmax must be >= 0");
  json rows = json::array();
  for (int q = 0; q <= qmax; ++q) {
    json parts = json::object();
    for (const auto& p : iso_energy_decomposition(q))
      parts["(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")"] = p.dimension;
    rows.push_back({{"q", q},
                    {"energy", to_string(energy(EnergyKind::E_q, {Rational(q)}))},
                    {"so6_dimension", so6_dimension(q)},
                    {"u3_decomposition", parts}});
  }
  return rows;
}

}  // namespace octa
