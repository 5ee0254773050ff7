#ifndef OCTA_OPERATORS_HPP
#define OCTA_OPERATORS_HPP

// Hamiltonians of the hierarchy on the two-sphere octant and the first-order
// intertwiners between them.
//
// Sector-level operators follow the subscript convention of the factorization:
// X^-_l maps eigenfunctions of H_l to H_{l+s}, X^+_l maps H_{l+s} back to H_l,
// where s is the family's lowering shift (A: (1,1,0), B: (1,0,1), C: (0,-1,1)).
// GradedOp re-indexes them by the sector they act on.

#include "octa/diff_op.hpp"

#include <functional>
#include <string>
#include <vector>

namespace octa {

using Shift = std::array<int, 3>;

struct ParamVector {
  std::array<Rational, 3> l;

  ParamVector() : l{Rational(0), Rational(0), Rational(0)} {}
  ParamVector(Rational l0, Rational l1, Rational l2) : l{std::move(l0), std::move(l1), std::move(l2)} {}

  const Rational& operator[](int i) const { return l[i]; }
  Rational& operator[](int i) { return l[i]; }

  ParamVector operator+(const Shift& s) const;
  ParamVector operator-(const Shift& s) const;
  /// Negates component `axis`.
  ParamVector reflected(int axis) const;

  friend bool operator==(const ParamVector&, const ParamVector&) = default;
  friend bool operator<(const ParamVector& a, const ParamVector& b) { return a.l < b.l; }
};

std::string to_string(const ParamVector& p);
nlohmann::json to_json(const ParamVector& p);
ParamVector param_vector_from_json(const nlohmann::json& j);

Shift operator+(const Shift& a, const Shift& b);
Shift operator-(const Shift& a);
Shift reflect_shift(const Shift& s, int axis);

enum class Family { A, B, C, Atilde, M, A1d };
enum class Ladder { raising, lowering };
enum class Variant { printed, corrected };

std::string family_name(Family f);
std::string ladder_suffix(Ladder l);

/// Lowering shift of a family (raising uses its negative).
Shift lowering_shift(Family f);

/// Affine function c0 + c.l of the parameters.
struct AffineLaw {
  Rational c0;
  std::array<Rational, 3> c{Rational(0), Rational(0), Rational(0)};
  Rational operator()(const ParamVector& l) const;
  std::string str() const;
  friend bool operator==(const AffineLaw&, const AffineLaw&) = default;
};

/// Multiplier of a first-order intertwiner: sum_i coeffs[i](l) * shapes[i].
struct MultiplierLaw {
  std::vector<TrigTerm> shapes;
  std::vector<AffineLaw> coeffs;
  TrigPoly operator()(const ParamVector& l) const;
  std::string str() const;
};

/// Vector field (derivative terms) of the printed family operator.
DiffOp vector_part(Family f, Ladder ladder);

/// Printed multiplier of A, B, C, Atilde (l-dependence as printed).
MultiplierLaw printed_law(Family f);

/// Multiplier recovered by solve_multiplier for the printed vector part;
/// fitted once on generic sectors and cached.
const MultiplierLaw& corrected_law(Family f, Ladder ladder);

/// Sector operator X^(+/-)_l of a family. For M the extra integers are (m, n)
/// of the phi2 factorization; for A1d, m is the one-dimensional hierarchy index.
DiffOp build_first_order(Family f, Ladder ladder, const ParamVector& l,
                         Variant variant = Variant::printed, int m = 0, int n = 0);

/// H_l = -d2^2 + tan(phi2) d2 + (l2^2-1/4) csc^2(phi2)
///       + sec^2(phi2) [-d1^2 + (l0^2-1/4) sec^2(phi1) + (l1^2-1/4) csc^2(phi1)]
DiffOp build_hamiltonian(const ParamVector& l);

/// Kinetic part (the Hamiltonian at l = (1/2, 1/2, 1/2)).
DiffOp kinetic_operator();

/// One-dimensional phi1 block -d1^2 + (l0^2-1/4) sec^2 + (l1^2-1/4) csc^2.
DiffOp build_phi1_hamiltonian(const Rational& l0, const Rational& l1);

/// phi2 equation with separation constant p^2:
/// -d2^2 + tan d2 + p^2 sec^2 + (l2^2-1/4) csc^2.
DiffOp build_phi2_hamiltonian(const Rational& p, const Rational& l2);

/// A parameter-shifting operator acting on the direct sum of sector spaces.
struct GradedOp {
  std::string name;
  Shift shift{0, 0, 0};
  Rational scale{1};
  std::function<DiffOp(const ParamVector&)> factory;

  /// Unscaled operator acting on sector l.
  DiffOp at(const ParamVector& l) const { return factory(l); }
  DiffOp scaled_at(const ParamVector& l) const { return scale * factory(l); }
};

/// Global ladder operator X^(+/-) with the 1/2 normalization.
GradedOp graded(Family f, Ladder ladder, Variant variant = Variant::corrected);

enum class Diagonal { A, B, C, D, L0, L1, L2 };
std::string diagonal_name(Diagonal d);
Rational diagonal_value(Diagonal d, const ParamVector& l);
GradedOp graded_diagonal(Diagonal d);

/// X∘Y acting on sector l (Y first), scales included.
DiffOp graded_product(const GradedOp& x, const GradedOp& y, const ParamVector& l);

struct GradedResult {
  Shift shift{0, 0, 0};
  DiffOp op;  // reduced
};

/// X_{l+dY} Y_l - Y_{l+dX} X_l with scale factors.
GradedResult graded_commutator(const GradedOp& x, const GradedOp& y, const ParamVector& l);

/// GradedOp whose sector operator is the (reduced) graded commutator [X, Y].
GradedOp commutator_op(const GradedOp& x, const GradedOp& y);

/// X_l H_l - H_{l+shift} X_l in normal form; empty iff X intertwines exactly.
DiffOp intertwine_residual(const DiffOp& x, const Shift& shift, const ParamVector& l);
DiffOp intertwine_residual(const GradedOp& x, const ParamVector& l);

struct MultiplierSolution {
  bool ok = false;
  std::vector<Rational> coefficients;
  TrigPoly multiplier;
  /// Residual of vector_part + multiplier (zero on success).
  DiffOp residual;
  bool unique = false;
  std::string failure;
};

/// Solves for rationals k_i such that vector_part + sum k_i g_i intertwines
/// H_l with H_{l+shift}, by exact linear algebra on the residual's normal-form
/// coordinates.
MultiplierSolution solve_multiplier(const DiffOp& vector_part, const Shift& shift,
                                    std::span<const TrigTerm> ansatz, const ParamVector& l);

/// Conjugation by the parameter reflection I_axis: l -> factory(I l).
GradedOp reflect_conjugate(const GradedOp& x, int axis);

enum class CasimirKind { su3_esp, so4_ca, so6_cass };
std::string casimir_name(CasimirKind k);

/// Constant printed with each identity (15/4, 1, 41/12).
Rational printed_casimir_constant(CasimirKind k);

/// Quadratic combination minus the Hamiltonian on sector l:
///   su3_esp : 4 Cas - D^2/3 + k - H_l
///   so4_ca  : {A+,A-} + {At+,At-} + L0^2 + L1^2 + k - H^phi1_l
///   so6_cass: sum of six anticommutators + L0^2 + L1^2 + L2^2 + k - H_l
/// with k the printed constant unless overridden. Returned in normal form.
DiffOp casimir_identity(CasimirKind kind, const ParamVector& l,
                        std::optional<Rational> constant = std::nullopt);

/// Constant that makes the identity exact on sector l, if the residual
/// without constant is a multiple of the identity.
std::optional<Rational> casimir_engine_constant(CasimirKind kind, const ParamVector& l);

/// The reflected ladder families entering the so(4) and so(6) identities.
GradedOp tilde(Family f, Ladder ladder);

}  // namespace octa

#endif
