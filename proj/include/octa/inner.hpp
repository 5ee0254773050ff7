#ifndef OCTA_INNER_HPP
#define OCTA_INNER_HPP

// L2 pairings on the octant (0, pi/2)^2 with the sphere measure
// cos(phi2) dphi1 dphi2, or on (0, pi/2) with dphi1 for phi1-block states.

#include "octa/hierarchy.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace octa {

enum class Measure { sphere, phi1 };

Measure measure_for(Block b);

/// Integral of the product of two monomials, via log-gamma.
/// Throws std::domain_error "non-integrable monomial pair".
double mono_inner(const TrigTerm& t1, const TrigTerm& t2, Measure measure = Measure::sphere);

/// Bilinear extension. Terms are grouped by Beta residue class and the
/// Pochhammer ratios inside a class are summed exactly before rounding.
double inner(const TrigPoly& f, const TrigPoly& g, Measure measure = Measure::sphere);
double norm(const TrigPoly& f, Measure measure = Measure::sphere);

struct GramReport {
  Eigen::MatrixXd matrix;
  long rank = 0;
  double max_offdiag_normalized = 0.0;
  double rank_threshold = 1e-9;  // relative to the largest diagonal entry
};

/// States in different sectors are orthogonal (direct-sum pairing).
GramReport gram(const std::vector<StateRecord>& states, Exec exec = Exec::parallel);
nlohmann::json to_json(const GramReport& g);

/// |<X-_l f, g> - <f, X+_l g>| for the corrected family named by `family`
/// ("A", "B", "C", "At", "Bt", "Ct"); f lives on sector l, g on l + shift.
/// Requires every exponent of f and g to be >= 1/2.
double adjoint_residual(const std::string& family, const ParamVector& l, const TrigPoly& f,
                        const TrigPoly& g, Measure measure = Measure::sphere);

/// Max relative deviation between the symbolic action and a five-point
/// central-difference action (step 1e-4) at interior points.
double numeric_oracle_check(const DiffOp& op, const TrigPoly& f,
                            const std::vector<std::pair<double, double>>& points);

}  // namespace octa

#endif
