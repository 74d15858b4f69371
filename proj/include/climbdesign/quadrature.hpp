#pragma once

#include <functional>

namespace climbdesign {

/// Adaptive 2-D quadrature of f over the rectangle [ax,bx] x [ay,by].
/// Tensor Gauss-Legendre panels with quad-split refinement; the local error
/// budget is distributed by area so the accumulated error stays within
/// rel_tol of the integral. Deterministic for identical inputs.
double integrate_rect(const std::function<double(double, double)>& f,
                      double ax, double bx, double ay, double by,
                      double rel_tol = 1e-9);

/// Integral of sqrt(y^2 + z^2) over the centered patch
/// [-l_w/2, l_w/2] x [-h_w/2, h_w/2], adaptive to rel_tol. [m^3]
double patch_radial_integral(double l_w, double h_w, double rel_tol = 1e-9);

}  // namespace climbdesign
