#ifndef OCTA_HIERARCHY_HPP
#define OCTA_HIERARCHY_HPP

// Eigenstates of the hierarchy: fundamental states, ladder constructions,
// Jacobi closed forms, spectra and the u(3)/so(4)/so(6) representation lattices.

#include "octa/sweep.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octa {

struct JacobiPoly {
  int n = 0;
  Rational alpha, beta;
  std::vector<Rational> coeffs;  // ascending powers of x
};

/// P_n^(alpha,beta) by the three-term recurrence (explicit sum where the
/// recurrence denominator vanishes). Throws std::invalid_argument for n < 0.
JacobiPoly jacobi(int n, const Rational& alpha, const Rational& beta);

/// Eigen-equation block: the full two-angle Hamiltonian or the phi1 one.
enum class Block { full, phi1 };

struct StateLabels {
  int m = 0;
  int n = 0;
  std::optional<int> q;
  std::optional<Rational> su2_j;
};

struct StateRecord {
  ParamVector params;
  StateLabels labels;
  TrigPoly wavefunction;
  Rational energy;
  Block block = Block::full;
};

/// Hamiltonian of the block at l.
DiffOp block_hamiltonian(Block block, const ParamVector& l);

/// Validates the eigen-equation exactly; throws std::logic_error otherwise.
StateRecord make_state(ParamVector params, StateLabels labels, TrigPoly wavefunction,
                       Rational energy, Block block = Block::full);

bool satisfies_eigen_equation(const StateRecord& s);

enum class GroundKind { phi1_1d, u3, so4, so6_even, so6_odd };

/// phi1_1d: params (l0, l1, m), state f0_(m) of H^phi1 at (l0+m, l1+m).
/// u3: (m, n). so4: n. so6_even / so6_odd: n with matching parity.
/// Annihilation by the simple-root lowering operators is verified.
StateRecord ground_state(GroundKind kind, const std::vector<Rational>& params);

/// Corrected ladder operator by name: A+ A- B+ B- C+ C- and the reflected
/// At+ At- Bt+ Bt- Ct+ Ct-.
GradedOp ladder_operator(const std::string& name);
std::vector<std::string> ladder_names();

struct LadderResult {
  bool annihilated = false;
  std::size_t annihilated_at = 0;  // index into the path
  std::optional<StateRecord> state;
};

/// Applies path[0], then path[1], ... (sector operators, unscaled).
LadderResult ladder_build(const StateRecord& start, const std::vector<std::string>& path);

enum class JacobiConvention { corrected, printed };

/// Separated product f^m(phi1) g^n(phi2) at l; printed uses alpha = l2 + 1/2
/// for the phi2 Jacobi factor, corrected uses alpha = l2.
TrigPoly separated_wavefunction(const ParamVector& l, int m, int n, JacobiConvention conv);

/// cos^(l0+1/2) sin^(l1+1/2) P_m^(l1,l0)(cos 2 phi1).
TrigPoly phi1_excited_wavefunction(const Rational& l0, const Rational& l1, int m);

enum class ClosedKind { phi1_excited, separated_2d };

/// phi1_excited: params (l0, l1, m); separated_2d: (l0, l1, l2, m, n).
StateRecord closed_form_state(ClosedKind kind, const std::vector<Rational>& params);

enum class EnergyKind { lambda_m, E_mn, E_q };

/// lambda_m: (l0, l1, m); E_mn: (l0, l1, l2, m, n); E_q: (q).
Rational energy(EnergyKind kind, const std::vector<Rational>& params);

enum class Algebra { u3, so4, so6 };
std::string algebra_name(Algebra a);

struct LatticePoint {
  ParamVector params;
  int multiplicity = 1;
};

struct IurLattice {
  Algebra algebra = Algebra::u3;
  std::vector<int> label;  // u3: (m, n); so4: (n); so6: (q)
  std::vector<LatticePoint> points;
  long dimension = 0;
};

/// Lattice from representation theory: Gelfand-Tsetlin patterns (u3),
/// the (n+1)^2 square (so4), nested octahedral shells (so6).
IurLattice iur_lattice(Algebra algebra, const std::vector<int>& label);

long u3_dimension(int m, int n);
long so6_dimension(int q);

struct IsoEnergyPart {
  int m = 0, n = 0;
  long dimension = 0;
};
std::vector<IsoEnergyPart> iso_energy_decomposition(int q);

struct IurStates {
  IurLattice lattice;  // multiplicities = exact rank per sector
  std::vector<StateRecord> states;
};

/// Breadth-first closure of the fundamental state under the algebra's ladder
/// operators, keeping an exactly independent basis in every sector.
IurStates iur_states(Algebra algebra, const std::vector<int>& label);

nlohmann::json to_json(const StateRecord& s);
StateRecord state_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IurLattice& lattice);
/// Columns l0,l1,l2,multiplicity,shell (shell = |l0|+|l1|+|l2|).
std::string lattice_csv(const IurLattice& lattice);

}  // namespace octa

#endif
