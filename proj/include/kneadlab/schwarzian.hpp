#pragma once

#include <span>

#include "kneadlab/family.hpp"
#include "kneadlab/inverse.hpp"

namespace kneadlab {

// Value and first three derivatives of a C^3 function at one point.
struct C3Probe {
  double value;
  double d1;
  double d2;
  double d3;
};

// S(psi) = psi'''/psi' - (3/2)(psi''/psi')^2.  d1 = 0 throws
// std::domain_error (S is undefined at critical points).
double schwarzian(const C3Probe& probe);

// Derivatives of the inverse branch at y through the inverse-function
// relations g' = 1/F', g'' = -F''/F'^3, g''' = (3F''^2 - F'F''')/F'^5 with
// F = mu*f evaluated at x = branch preimage of y.  Throws near the critical
// value where F' degenerates.
C3Probe inverse_branch_probe(const UnimodalFamily& fam, double mu,
                             Branch branch, double y);

// Same probe by 5-point central differences of invert_branch; the two routes
// agree to 1e-5 relative away from the singularity (asserted in tests).
C3Probe inverse_branch_probe_fd(const UnimodalFamily& fam, double mu,
                                Branch branch, double y, double h = 1e-4);

// S(psi o phi)(x) = S(psi)(phi(x)) * phi'(x)^2 + S(phi)(x).
inline double schwarzian_compose(double s_outer_at_phi_x, double phi_d1,
                                 double s_inner) {
  return s_outer_at_phi_x * phi_d1 * phi_d1 + s_inner;
}

struct Property3Report {
  double min_schwarzian;
  double argmin_mu;
  double argmin_y;
  Branch argmin_branch;
  bool pass;  // min > 0
};

// Minimum of S[(mu f)^-1_branch] over both branches and the grid
// {(mu, frac*mu)}; verifies that it is positive.
Property3Report verify_property3(const UnimodalFamily& fam,
                                 std::span<const double> mu_grid,
                                 std::span<const double> y_fractions);

// Uniform grids for the CLI: mu in [0.02, 1], fractions in
// [1e-3, 1 - 1e-3] (the inverse branch derivative diverges at y = mu).
std::vector<double> default_mu_grid(int n);
std::vector<double> default_fraction_grid(int n);

}  // namespace kneadlab
