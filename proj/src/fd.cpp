#include "mcflab/fd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcf {

std::vector<double> fd_weights(std::span<const double> x, double x0, int m) {
  const int n = static_cast<int>(x.size());
  if (n < m + 1) throw std::invalid_argument("fd_weights: stencil too small for order");

  // c[j][k]: weight at node j for the k-th derivative.
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }

  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = c[j][m];
  return w;
}

double observed_order(std::span<const double> h, std::span<const double> err,
                      double floor) {
  if (h.size() != err.size()) throw std::invalid_argument("observed_order: size mismatch");
  std::vector<double> lh, le;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (err[i] > floor) {
      lh.push_back(std::log(h[i]));
      le.push_back(std::log(err[i]));
    }
  }
  if (lh.size() < 2) return 8.0;  // at the roundoff floor everywhere: treat as exact
  double mh = 0, me = 0;
  for (std::size_t i = 0; i < lh.size(); ++i) { mh += lh[i]; me += le[i]; }
  mh /= static_cast<double>(lh.size());
  me /= static_cast<double>(lh.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < lh.size(); ++i) {
    num += (lh[i] - mh) * (le[i] - me);
    den += (lh[i] - mh) * (lh[i] - mh);
  }
  return num / den;
}

}  // namespace mcf
