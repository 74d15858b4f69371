#pragma once

#include <cstdint>

#include "climbdesign/params.hpp"

namespace climbdesign {

/// One randomized-but-reproducible statics scenario. Draws are partitioned
/// deterministically by (seed, index); every scenario satisfies the parameter
/// invariants and keeps both force-balance denominators away from zero.
struct RandomScenario {
  RobotParams params;
  ColumnSpec column;
  int n = 2;
  int k_tw = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

RandomScenario make_scenario(std::uint64_t seed, std::uint64_t index);

/// Midpoint-rule reference for the contact-patch integral of sqrt(y^2+z^2),
/// 1000 x 1000 cells over the centered l_w x h_w rectangle. Validation only.
double reference_patch_integral(double l_w, double h_w);

/// Exact antiderivative route for the same rectangle integral.
double rect_integral_closed_form(double l_w, double h_w);

/// Numerically re-solves the static force balance (torque balance about the
/// wheel contact plus the gravity/friction balance at equality) by bracketed
/// bisection and reports the worst relative disagreement against the closed
/// forms the library computes with.
struct CrosscheckResult {
  double max_rel_discrepancy = 0.0;
  bool converged = false;
};

CrosscheckResult equilibrium_crosscheck(const RandomScenario& scenario);

struct SuiteResult {
  double worst = 0.0;          ///< largest relative discrepancy seen
  std::uint64_t failures = 0;  ///< non-converged or above-tolerance cases
  std::uint64_t cases = 0;
};

/// Batch equilibrium crosschecks; failure threshold 1e-9 relative.
SuiteResult run_equilibrium_suite(std::uint64_t seed, std::uint64_t cases);

/// Adaptive patch quadrature vs the midpoint reference on random patch
/// dimensions; failure threshold 1e-6 relative.
SuiteResult run_quadrature_suite(std::uint64_t seed, std::uint64_t cases);

}  // namespace climbdesign
