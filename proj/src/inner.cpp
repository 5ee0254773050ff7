#include "octa/inner.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace octa {

namespace {

// Half of Beta((A+1)/2, (B+1)/2) for exponents given in half units.
double half_beta(int a_halves, int b_halves) {
  const double x = (a_halves + 2) / 4.0;
  const double y = (b_halves + 2) / 4.0;
  return 0.5 * std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y));
}

void require_integrable(int a_halves, int b_halves) {
  if (a_halves <= -2 || b_halves <= -2)
    throw std::domain_error("non-integrable monomial pair");
}

void require_phi1_only(const Exps& e) {
  if (e[2] != 0 || e[3] != 0)
    throw std::invalid_argument("phi1 measure needs functions of phi1 only");
}

// (A+1)/2 = x0 + i with 4*x0 in {1,2,3,4}; returns (4*x0, i).
std::pair<int, int> split(int halves) {
  const int q = halves + 2;  // 4x, positive
  const int i = (q - 1) / 4;
  return {q - 4 * i, i};
}

Rational pochhammer(const Rational& x, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= x + k;
  return r;
}

// Exact ratio B(x0+i, y0+j) / B(x0, y0).
Rational beta_ratio(int x4, int i, int y4, int j) {
  const Rational x0 = make_rational(x4, 4), y0 = make_rational(y4, 4);
  return pochhammer(x0, i) * pochhammer(y0, j) / pochhammer(Rational(x0 + y0), i + j);
}

}  // namespace

Measure measure_for(Block b) { return b == Block::full ? Measure::sphere : Measure::phi1; }

double mono_inner(const TrigTerm& t1, const TrigTerm& t2, Measure measure) {
  const int a = t1.halves[0] + t2.halves[0];
  const int b = t1.halves[1] + t2.halves[1];
  require_integrable(a, b);
  double v = t1.coeff.get_d() * t2.coeff.get_d() * half_beta(a, b);
  if (measure == Measure::phi1) {
    require_phi1_only(t1.halves);
    require_phi1_only(t2.halves);
    return v;
  }
  const int c = t1.halves[2] + t2.halves[2] + 2;  // cos(phi2) from the measure
  const int d = t1.halves[3] + t2.halves[3];
  require_integrable(c, d);
  return v * half_beta(c, d);
}

double inner(const TrigPoly& f, const TrigPoly& g, Measure measure) {
  std::map<std::array<int, 4>, Rational> classes;
  for (const auto& s : f.terms())
    for (const auto& t : g.terms()) {
      const int a = s.halves[0] + t.halves[0];
      const int b = s.halves[1] + t.halves[1];
      require_integrable(a, b);
      auto [x4, i] = split(a);
      auto [y4, j] = split(b);
      Rational w = s.coeff * t.coeff * beta_ratio(x4, i, y4, j);
      std::array<int, 4> key{x4, y4, 0, 0};
      if (measure == Measure::sphere) {
        const int c = s.halves[2] + t.halves[2] + 2;
        const int d = s.halves[3] + t.halves[3];
        require_integrable(c, d);
        auto [z4, k] = split(c);
        auto [w4, l] = split(d);
        w *= beta_ratio(z4, k, w4, l);
        key[2] = z4;
        key[3] = w4;
      } else {
        require_phi1_only(s.halves);
        require_phi1_only(t.halves);
      }
      classes[key] += w;
    }
  double sum = 0.0;
  for (const auto& [key, w] : classes) {
    if (w == 0) continue;
    double base = half_beta(key[0] - 2, key[1] - 2);
    if (measure == Measure::sphere) base *= half_beta(key[2] - 2, key[3] - 2);
    sum += w.get_d() * base;
  }
  return sum;
}

double norm(const TrigPoly& f, Measure measure) { return std::sqrt(inner(f, f, measure)); }

GramReport gram(const std::vector<StateRecord>& states, Exec exec) {
  const std::size_t n = states.size();
  GramReport rep;
  rep.matrix = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (states[i].params == states[j].params && states[i].block == states[j].block)
        pairs.emplace_back(i, j);
  const auto values = sweep_map(
      pairs,
      [&](const std::pair<std::size_t, std::size_t>& p) {
        return inner(states[p.first].wavefunction, states[p.second].wavefunction,
                     measure_for(states[p.first].block));
      },
      exec);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    rep.matrix(i, j) = rep.matrix(j, i) = values[k];
  }
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, rep.matrix(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double d = std::sqrt(rep.matrix(i, i) * rep.matrix(j, j));
      if (d > 0) rep.max_offdiag_normalized = std::max(rep.max_offdiag_normalized,
                                                       std::abs(rep.matrix(i, j)) / d);
    }
  if (n > 0) {
    Eigen::LDLT<Eigen::MatrixXd> ldlt(rep.matrix);
    const Eigen::VectorXd d = ldlt.vectorD();
    for (long i = 0; i < d.size(); ++i)
      if (std::abs(d(i)) > rep.rank_threshold * max_diag) ++rep.rank;
  }
  return rep;
}

nlohmann::json to_json(const GramReport& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (long i = 0; i < g.matrix.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (long j = 0; j < g.matrix.cols(); ++j) row.push_back(g.matrix(i, j));
    rows.push_back(row);
  }
  return {{"matrix", rows},
          {"rank", g.rank},
          {"max_offdiag_normalized", g.max_offdiag_normalized},
          {"rank_threshold", g.rank_threshold}};
}

double adjoint_residual(const std::string& family, const ParamVector& l, const TrigPoly& f,
                        const TrigPoly& g, Measure measure) {
  auto admissible = [measure](const TrigPoly& p) {
    for (const auto& t : p.terms())
      for (int k = 0; k < (measure == Measure::sphere ? 4 : 2); ++k)
        if (t.halves[k] < 1) return false;
    return true;
  };
  if (!admissible(f) || !admissible(g))
    throw std::invalid_argument("inadmissible state: exponents below 1/2");
  if (f.empty() || g.empty()) return 0.0;
  const GradedOp lower = ladder_operator(family + "-");
  const GradedOp raise = ladder_operator(family + "+");
  const ParamVector target = l + lower.shift;
  const double lhs = inner(apply(lower.at(l), f), g, measure);
  const double rhs = inner(f, apply(raise.at(target), g), measure);
  return std::abs(lhs - rhs);
}

double numeric_oracle_check(const DiffOp& op, const TrigPoly& f,
                            const std::vector<std::pair<double, double>>& points) {
  constexpr double h = 1e-4;
  constexpr double edge = std::numbers::pi / 2;
  static const double d1[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
  static const double d2[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};
  static const double d0[5] = {0.0, 0.0, 1.0, 0.0, 0.0};
  auto stencil = [&](int k) -> const double* {
    switch (k) {
      case 0: return d0;
      case 1: return d1;
      case 2: return d2;
    }
    throw std::invalid_argument("finite-difference oracle supports derivative order <= 2");
  };
  const TrigPoly exact = apply(op, f);
  double worst = 0.0;
  for (const auto& [p1, p2] : points) {
    if (p1 - 2 * h <= 0 || p1 + 2 * h >= edge || p2 - 2 * h <= 0 || p2 + 2 * h >= edge)
      throw std::domain_error("singular evaluation");
    double fd = 0.0;
    for (const auto& [o, c] : op.terms()) {
      const double* s1 = stencil(o.d1);
      const double* s2 = stencil(o.d2);
      double acc = 0.0;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
          if (s1[i] == 0.0 || s2[j] == 0.0) continue;
          acc += s1[i] * s2[j] * eval_numeric(f, p1 + (i - 2) * h, p2 + (j - 2) * h);
        }
      fd += eval_numeric(c, p1, p2) * acc / std::pow(h, o.total());
    }
    const double sym = eval_numeric(exact, p1, p2);
    const double scale = std::max({std::abs(sym), eval_abs_terms(exact, p1, p2), 1e-300});
    worst = std::max(worst, std::abs(sym - fd) / scale);
  }
  return worst;
}

}  // namespace octa
