#include "octa/algebra.hpp"

namespace octa {

std::vector<GradedOp> u3_generators() {
  std::vector<GradedOp> g;
  for (Family f : {Family::A, Family::B, Family::C}) {
    g.push_back(graded(f, Ladder::raising));
    g.push_back(graded(f, Ladder::lowering));
  }
  for (Diagonal d : {Diagonal::A, Diagonal::B, Diagonal::C}) g.push_back(graded_diagonal(d));
  return g;
}

namespace {

bool all_zero(const GradedOp& op, const std::vector<ParamVector>& sectors,
              std::vector<DiffOp>& values) {
  bool zero = true;
  values.clear();
  for (const auto& l : sectors) {
    values.push_back(reduce(op.scaled_at(l)));
    if (!values.back().empty()) zero = false;
  }
  return zero;
}

StructureEntry identify_ladder(StructureEntry e, const std::vector<DiffOp>& values,
                               const std::vector<ParamVector>& sectors) {
  for (const GradedOp& g : u3_generators()) {
    if (g.shift != e.shift) continue;
    std::optional<Rational> k;
    bool ok = true;
    for (std::size_t i = 0; i < sectors.size() && ok; ++i) {
      std::optional<Rational> ki = proportionality(values[i], g.scaled_at(sectors[i]));
      ok = ki && (!k || *k == *ki);
      if (ok) k = ki;
    }
    if (ok && k) {
      e.closed = true;
      e.terms.push_back({*k, g.name});
      return e;
    }
  }
  return e;
}

StructureEntry identify_diagonal(StructureEntry e, const std::vector<DiffOp>& values,
                                 const std::vector<ParamVector>& sectors) {
  std::vector<Rational> c;
  for (const auto& v : values) {
    std::optional<Rational> s = as_scalar(v);
    if (!s) return e;
    c.push_back(*s);
  }
  for (Diagonal d : {Diagonal::A, Diagonal::B, Diagonal::C, Diagonal::D}) {
    std::optional<Rational> k;
    bool ok = true;
    for (std::size_t i = 0; i < sectors.size() && ok; ++i) {
      Rational dv = diagonal_value(d, sectors[i]);
      if (dv == 0) {
        ok = c[i] == 0;
        continue;
      }
      Rational ki = c[i] / dv;
      ok = !k || *k == ki;
      k = ki;
    }
    if (ok && k) {
      e.closed = true;
      e.terms.push_back({*k, diagonal_name(d)});
      return e;
    }
  }
  const std::vector<Diagonal> basis{Diagonal::A, Diagonal::B, Diagonal::D};
  std::vector<std::vector<Rational>> a;
  for (const auto& l : sectors) {
    std::vector<Rational> row;
    for (Diagonal d : basis) row.push_back(diagonal_value(d, l));
    row.push_back(Rational(1));
    a.push_back(std::move(row));
  }
  LinearSolution sol = solve_linear(std::move(a), c, basis.size() + 1);
  if (!sol.consistent) return e;
  e.closed = true;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (sol.x[j] != 0) e.terms.push_back({sol.x[j], diagonal_name(basis[j])});
  if (sol.x.back() != 0) e.terms.push_back({sol.x.back(), "1"});
  return e;
}

}  // namespace

StructureEntry identify(const GradedOp& op, const std::vector<ParamVector>& sectors) {
  StructureEntry e;
  e.shift = op.shift;
  std::vector<DiffOp> values;
  if (all_zero(op, sectors, values)) {
    e.closed = true;
    return e;
  }
  if (op.shift != Shift{0, 0, 0}) return identify_ladder(std::move(e), values, sectors);
  return identify_diagonal(std::move(e), values, sectors);
}

std::vector<StructureEntry> structure_table(const std::vector<ParamVector>& sectors, Exec exec) {
  const std::vector<GradedOp> gens = u3_generators();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) pairs.emplace_back(i, j);
  return sweep_map(
      pairs,
      [&](const std::pair<std::size_t, std::size_t>& p) {
        const GradedOp& x = gens[p.first];
        const GradedOp& y = gens[p.second];
        StructureEntry e = identify(commutator_op(x, y), sectors);
        e.x = x.name;
        e.y = y.name;
        return e;
      },
      exec);
}

nlohmann::json structure_table_json(const std::vector<StructureEntry>& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& e : table) {
    const std::string key = e.x + "," + e.y;
    if (!e.closed) {
      out[key] = nullptr;
      continue;
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : e.terms) terms.push_back({to_string(t.coeff), t.generator});
    out[key] = terms;
  }
  return out;
}

bool table_antisymmetric(const std::vector<StructureEntry>& table) {
  std::map<std::pair<std::string, std::string>, const StructureEntry*> by_pair;
  for (const auto& e : table) by_pair[{e.x, e.y}] = &e;
  for (const auto& e : table) {
    auto it = by_pair.find({e.y, e.x});
    if (it == by_pair.end() || !e.closed || !it->second->closed) return false;
    const auto& other = it->second->terms;
    if (other.size() != e.terms.size()) return false;
    for (std::size_t i = 0; i < other.size(); ++i)
      if (other[i].generator != e.terms[i].generator || other[i].coeff != -e.terms[i].coeff)
        return false;
  }
  return true;
}

DiffOp jacobi_residual(const GradedOp& x, const GradedOp& y, const GradedOp& z,
                       const ParamVector& l) {
  DiffOp r = graded_commutator(x, commutator_op(y, z), l).op;
  r += graded_commutator(y, commutator_op(z, x), l).op;
  r += graded_commutator(z, commutator_op(x, y), l).op;
  return reduce(r);
}

}  // namespace octa
