#include "climbdesign/quadrature.hpp"

#include <cmath>
#include <vector>

#include "climbdesign/errors.hpp"

namespace climbdesign {

namespace {

// 3-point Gauss-Legendre on [-1, 1], exact through degree 5.
constexpr double kGlNode = 0.7745966692414834;  // sqrt(3/5)
constexpr double kGlW0 = 8.0 / 9.0;
constexpr double kGlW1 = 5.0 / 9.0;

struct Cell {
  double ax, bx, ay, by;
  double tol;
  int depth;
};

double gl3x3(const std::function<double(double, double)>& f, double ax,
             double bx, double ay, double by) {
  const double cx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double cy = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  const double xs[3] = {cx - hx * kGlNode, cx, cx + hx * kGlNode};
  const double ys[3] = {cy - hy * kGlNode, cy, cy + hy * kGlNode};
  const double ws[3] = {kGlW1, kGlW0, kGlW1};
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sum += ws[i] * ws[j] * f(xs[i], ys[j]);
  return sum * hx * hy;
}

double quad_split(const std::function<double(double, double)>& f,
                  const Cell& c) {
  const double mx = 0.5 * (c.ax + c.bx);
  const double my = 0.5 * (c.ay + c.by);
  return gl3x3(f, c.ax, mx, c.ay, my) + gl3x3(f, mx, c.bx, c.ay, my) +
         gl3x3(f, c.ax, mx, my, c.by) + gl3x3(f, mx, c.bx, my, c.by);
}

constexpr int kMaxDepth = 40;
constexpr std::size_t kMaxCells = 4'000'000;

}  // namespace

double integrate_rect(const std::function<double(double, double)>& f,
                      double ax, double bx, double ay, double by,
                      double rel_tol) {
  if (!(std::isfinite(ax) && std::isfinite(bx) && std::isfinite(ay) &&
        std::isfinite(by)))
    throw InvalidParameter("integration bounds must be finite");
  if (!(rel_tol > 0.0)) throw InvalidParameter("rel_tol must be > 0");
  if (bx <= ax || by <= ay) return 0.0;  // empty or degenerate domain

  // Rough magnitude for the absolute error budget.
  const double scale = std::abs(quad_split(f, {ax, bx, ay, by, 0.0, 0}));
  const double budget = rel_tol * std::max(scale, 1e-300);

  std::vector<Cell> stack;
  stack.push_back({ax, bx, ay, by, budget, 0});

  double sum = 0.0;
  std::size_t processed = 0;
  while (!stack.empty()) {
    const Cell cell = stack.back();
    stack.pop_back();
    if (++processed > kMaxCells)
      throw NoSolution("adaptive quadrature exceeded its cell cap");

    const double coarse = gl3x3(f, cell.ax, cell.bx, cell.ay, cell.by);
    const double fine = quad_split(f, cell);
    const double err = std::abs(fine - coarse);
    if (err <= cell.tol || cell.depth >= kMaxDepth) {
      sum += fine;
      continue;
    }
    const double mx = 0.5 * (cell.ax + cell.bx);
    const double my = 0.5 * (cell.ay + cell.by);
    const double child_tol = 0.25 * cell.tol;
    const int d = cell.depth + 1;
    stack.push_back({cell.ax, mx, cell.ay, my, child_tol, d});
    stack.push_back({mx, cell.bx, cell.ay, my, child_tol, d});
    stack.push_back({cell.ax, mx, my, cell.by, child_tol, d});
    stack.push_back({mx, cell.bx, my, cell.by, child_tol, d});
  }
  return sum;
}

double patch_radial_integral(double l_w, double h_w, double rel_tol) {
  if (!(std::isfinite(l_w) && l_w >= 0.0 && std::isfinite(h_w) && h_w >= 0.0))
    throw InvalidParameter("patch dimensions must be finite and >= 0");
  if (l_w == 0.0 || h_w == 0.0) return 0.0;
  // Integrand is even in both axes; one quadrant puts the cone apex of
  // sqrt(y^2+z^2) at a cell corner, where the subdivision converges fastest.
  const auto radius = [](double y, double z) { return std::hypot(y, z); };
  return 4.0 * integrate_rect(radius, 0.0, 0.5 * l_w, 0.0, 0.5 * h_w, rel_tol);
}

}  // namespace climbdesign
