#pragma once

#include <span>
#include <vector>

namespace mcf {

// Finite-difference weights on an arbitrary one-dimensional stencil
// (Fornberg's recursion). Returns w with sum_k w[k]*f(x[k]) approximating
// the m-th derivative of f at x0. Exact for polynomials of degree < x.size().
std::vector<double> fd_weights(std::span<const double> x, double x0, int m);

// Least-squares slope of log(err) vs log(h). Pairs with err <= floor are
// treated as already at the roundoff floor and excluded; if fewer than two
// pairs survive, the data is considered exact and a large order is returned.
double observed_order(std::span<const double> h, std::span<const double> err,
                      double floor = 1e-13);

}  // namespace mcf
