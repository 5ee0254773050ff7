#ifndef OCTA_SWEEP_HPP
#define OCTA_SWEEP_HPP

// Sector sweeps. Every kernel has a serial reference path and an OpenMP path
// producing identical, sector-ordered output.

#include "octa/operators.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include <omp.h>

namespace octa {

enum class Exec { serial, parallel };

/// Thread count for parallel sweeps: OCTA_THREADS if set and positive,
/// otherwise the OpenMP default.
inline int sweep_threads() {
  if (const char* env = std::getenv("OCTA_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

/// All integer sectors in {lo..hi}^3, lexicographic.
std::vector<ParamVector> sector_box(int lo, int hi);

/// out[i] = fn(items[i]); the first exception thrown by any worker is rethrown.
template <class T, class Fn>
auto sweep_map(const std::vector<T>& items, Fn fn, Exec exec = Exec::parallel)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::exception_ptr error;
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(sweep_threads())
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(items[i]);
    } catch (...) {
#pragma omp critical(octa_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Sectors where the graded operator fails to intertwine (empty when exact).
std::vector<ParamVector> intertwine_failures(const GradedOp& x,
                                             const std::vector<ParamVector>& sectors,
                                             Exec exec = Exec::parallel);

/// Sectors where the identity residual is nonzero.
std::vector<ParamVector> casimir_failures(CasimirKind kind, const std::vector<ParamVector>& sectors,
                                          std::optional<Rational> constant = std::nullopt,
                                          Exec exec = Exec::parallel);

}  // namespace octa

#endif
