#ifndef OCTA_TESTS_ORACLES_HPP
#define OCTA_TESTS_ORACLES_HPP

// Numeric reference formulas written out directly, independent of the
// symbolic builders. Derivatives by central differences.

#include <array>
#include <cmath>
#include <functional>

namespace oracle {

using Fn = std::function<double(double, double)>;

constexpr double kStep = 1e-3;

inline double d1(const Fn& f, double x, double y, double h = kStep) {
  return (f(x - 2 * h, y) - 8 * f(x - h, y) + 8 * f(x + h, y) - f(x + 2 * h, y)) / (12 * h);
}
inline double d2(const Fn& f, double x, double y, double h = kStep) {
  return (f(x, y - 2 * h) - 8 * f(x, y - h) + 8 * f(x, y + h) - f(x, y + 2 * h)) / (12 * h);
}
inline double d11(const Fn& f, double x, double y, double h = kStep) {
  return (-f(x - 2 * h, y) + 16 * f(x - h, y) - 30 * f(x, y) + 16 * f(x + h, y) -
          f(x + 2 * h, y)) / (12 * h * h);
}
inline double d22(const Fn& f, double x, double y, double h = kStep) {
  return (-f(x, y - 2 * h) + 16 * f(x, y - h) - 30 * f(x, y) + 16 * f(x, y + h) -
          f(x, y + 2 * h)) / (12 * h * h);
}

inline double sq(double x) { return x * x; }

/// H_l F at (p1, p2) for the separable two-angle Hamiltonian.
inline double hamiltonian(std::array<double, 3> l, const Fn& f, double p1, double p2) {
  const double c1 = std::cos(p1), s1 = std::sin(p1), c2 = std::cos(p2), s2 = std::sin(p2);
  const double inner = -d11(f, p1, p2) + ((sq(l[0]) - 0.25) / sq(c1) + (sq(l[1]) - 0.25) / sq(s1)) * f(p1, p2);
  return -d22(f, p1, p2) + std::tan(p2) * d2(f, p1, p2) + (sq(l[2]) - 0.25) / sq(s2) * f(p1, p2) +
         inner / sq(c2);
}

/// H^phi1 at (l0, l1) acting on a function of phi1.
inline double hamiltonian_phi1(double l0, double l1, const Fn& f, double p1) {
  const double c1 = std::cos(p1), s1 = std::sin(p1);
  return -d11(f, p1, 0.0) + ((sq(l0) - 0.25) / sq(c1) + (sq(l1) - 0.25) / sq(s1)) * f(p1, 0.0);
}

/// Multiplier of the first-order ladder families, sign-corrected where needed.
/// family: 0 = A, 1 = B, 2 = C.
inline double multiplier(int family, std::array<double, 3> l, double p1, double p2) {
  const double c1 = std::cos(p1), s1 = std::sin(p1), t2 = std::tan(p2);
  switch (family) {
    case 0: return -(l[0] + 0.5) * std::tan(p1) + (l[1] + 0.5) / std::tan(p1);
    case 1: return (0.5 + l[2]) * c1 / t2 - (0.5 + l[0]) * t2 / c1;
    default: return (0.5 - l[1]) * t2 / s1 - (0.5 + l[2]) * s1 / t2;
  }
}

/// Vector fields of the raising operators: a+ = d1, b+ = s1 t2 d1 + c1 d2,
/// c+ = c1 t2 d1 - s1 d2.
inline double vector_field(int family, const Fn& f, double p1, double p2) {
  const double c1 = std::cos(p1), s1 = std::sin(p1), t2 = std::tan(p2);
  switch (family) {
    case 0: return d1(f, p1, p2);
    case 1: return s1 * t2 * d1(f, p1, p2) + c1 * d2(f, p1, p2);
    default: return c1 * t2 * d1(f, p1, p2) - s1 * d2(f, p1, p2);
  }
}

}  // namespace oracle

#endif
