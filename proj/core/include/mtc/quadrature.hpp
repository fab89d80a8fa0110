#pragma once

#include <functional>

namespace mtc {

/// Integrand over (0,1). Receives both u and 1-u so endpoint-singular
/// integrands can be evaluated without cancellation; the nodes never touch
/// the endpoints themselves.
using UnitIntegrand = std::function<double(double u, double one_minus_u)>;

/// Tanh-sinh quadrature of f over the open interval (0,1). Refines the node
/// spacing until two consecutive levels agree to rel_tol or max_level is hit.
/// Handles integrable endpoint singularities (e.g. (1-u)^-1/2).
double integrate_unit(const UnitIntegrand& f, double rel_tol = 1e-12,
                      int max_level = 12);

/// Integral of g over (a, +inf), mapped onto (0,1) via t = a + u/(1-u).
double integrate_from(double a, const std::function<double(double)>& g,
                      double rel_tol = 1e-12);

}  // namespace mtc
