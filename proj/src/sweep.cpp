#include "octa/sweep.hpp"

namespace octa {

std::vector<ParamVector> sector_box(int lo, int hi) {
  std::vector<ParamVector> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c) out.emplace_back(Rational(a), Rational(b), Rational(c));
  return out;
}

namespace {

std::vector<ParamVector> collect(const std::vector<ParamVector>& sectors,
                                 const std::vector<char>& ok) {
  std::vector<ParamVector> bad;
  for (std::size_t i = 0; i < sectors.size(); ++i)
    if (!ok[i]) bad.push_back(sectors[i]);
  return bad;
}

}  // namespace

std::vector<ParamVector> intertwine_failures(const GradedOp& x,
                                             const std::vector<ParamVector>& sectors, Exec exec) {
  auto ok = sweep_map(
      sectors, [&x](const ParamVector& l) -> char { return intertwine_residual(x, l).empty(); },
      exec);
  return collect(sectors, ok);
}

std::vector<ParamVector> casimir_failures(CasimirKind kind, const std::vector<ParamVector>& sectors,
                                          std::optional<Rational> constant, Exec exec) {
  auto ok = sweep_map(
      sectors,
      [&](const ParamVector& l) -> char { return casimir_identity(kind, l, constant).empty(); },
      exec);
  return collect(sectors, ok);
}

}  // namespace octa
