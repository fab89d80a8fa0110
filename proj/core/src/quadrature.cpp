#include "mtc/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mtc {
namespace {

constexpr double kPiHalf = 1.5707963267948966;
constexpr double kPi = 3.141592653589793;

// Node of the tanh-sinh rule on (0,1) at abscissa parameter t > 0.
// x_right has 1-x = e/(1+e) with e = exp(-pi*sinh(t)); the mirror node
// swaps the roles. Weight is pi*cosh(t)*x*(1-x), exact for the map
// x = (1 + tanh((pi/2) sinh t))/2.
struct Node {
  double x;      // node as measured from 0
  double omx;    // 1 - x, computed without cancellation
  double w;      // dx/dt
};

bool make_node(double t, Node& right, Node& left) {
  const double s = kPiHalf * std::sinh(t);
  const double e = std::exp(-2.0 * s);
  if (e < std::numeric_limits<double>::min()) return false;  // node glued to 1
  const double denom = 1.0 + e;
  right.x = 1.0 / denom;
  right.omx = e / denom;
  right.w = kPi * std::cosh(t) * right.x * right.omx;
  left.x = right.omx;
  left.omx = right.x;
  left.w = right.w;
  return true;
}

double eval(const UnitIntegrand& f, const Node& n) {
  const double v = f(n.x, n.omx) * n.w;
  return std::isfinite(v) ? v : 0.0;
}

}  // namespace

double integrate_unit(const UnitIntegrand& f, double rel_tol, int max_level) {
  const double t_max = 6.8;
  double h = 1.0;

  // Level 0: nodes at integer t.
  Node c{0.5, 0.5, kPi * 0.25};
  double sum = eval(f, c);
  for (double t = h; t <= t_max; t += h) {
    Node r, l;
    if (!make_node(t, r, l)) break;
    sum += eval(f, r) + eval(f, l);
  }
  double integral = h * sum;

  double prev = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t <= t_max; t += 2.0 * h) {
      Node r, l;
      if (!make_node(t, r, l)) break;
      add += eval(f, r) + eval(f, l);
    }
    prev = integral;
    integral = 0.5 * integral + h * add;
    const double scale = std::max(std::abs(integral), 1e-300);
    if (level >= 2 && std::abs(integral - prev) <= rel_tol * scale) break;
  }
  return integral;
}

double integrate_from(double a, const std::function<double(double)>& g,
                      double rel_tol) {
  if (!std::isfinite(a)) throw std::invalid_argument("integrate_from: lower bound must be finite");
  return integrate_unit(
      [&](double u, double omu) {
        const double t = a + u / omu;
        const double gv = g(t);
        if (gv == 0.0) return 0.0;
        return gv / (omu * omu);
      },
      rel_tol);
}

}  // namespace mtc
