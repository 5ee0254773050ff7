#ifndef OCTA_RATIONAL_HPP
#define OCTA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace octa {

/// Exact rational number; GMP keeps it reduced with a positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// "num/den" form used by every serialized artifact ("3/1", "-1/2").
std::string to_string(const Rational& q);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Exponents in this library are integers or half-integers and are stored as
/// twice their value.
int to_halves(const Rational& q);
Rational from_halves(int halves);

/// Generalized binomial coefficient C(x, k) for rational x and integer k >= 0.
Rational binomial(const Rational& x, int k);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  /// A solution (free variables set to zero) when consistent.
  std::vector<Rational> x;
};

/// Solves a x = b exactly by Gauss-Jordan elimination; a is rows x n.
LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                            std::size_t n);

}  // namespace octa

#endif
