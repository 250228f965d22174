#pragma once

#include <string>
#include <vector>

#include "mcflab/geometry.hpp"

namespace mcf {

// Weights attached to the area element in the monitored integrals. The
// x0-relative kinds need Snapshot::x0_norm2 (material initial positions).
enum class WeightKind {
  unit,
  expander_density,             // (t+1/2)^{-n/2} e^{|x|^2/(4(t+1/2))}, t-clock
  normalized_expander_density,  // e^{|x|^2/2}, s-clock
  initial_gaussian,             // e^{-|x0|^2}
  half_initial_gaussian,        // e^{-|x0|^2/2}
  relative_expander_density,    // e^{|x|^2/2 - |x0|^2}, s-clock
  inverse_normalized_density,   // e^{-|x|^2/2}, s-clock
  custom_f0,                    // tabulated positive factor per material node
};

struct WeightChoice {
  WeightKind kind{WeightKind::unit};
  std::vector<double> log_f0;  // custom_f0 only

  static WeightChoice of(WeightKind k) { return WeightChoice{k, {}}; }
};

const char* to_string(WeightKind);

// log of the weight at node i. Exponents are combined before any exp() call
// so that individually overflowing factors of an integrable product never
// appear as intermediates.
double log_weight(const WeightChoice&, const Snapshot&, std::size_t i);

struct SeriesSample {
  double clock{0.0};
  double value{0.0};
  double truncation{0.0};
  double excluded_fraction{0.0};
};

struct FunctionalSeries {
  std::string name;
  std::vector<SeriesSample> samples;
};

struct MassResult {
  double value{0.0};
  double excluded_fraction{0.0};  // unweighted measure of overflow-excluded nodes
};

// Trapezoid quadrature of weight * dmu over nodes with |x| <= truncation
// (truncation <= 0 means no window). Nodes with log-weight above
// overflow_exponent are excluded and reported.
MassResult weighted_mass(const Snapshot&, const WeightChoice&, double truncation = 0.0,
                         double overflow_exponent = 700.0);

// Same quadrature of (H + <x,nu>)^2 * weight * dmu.
MassResult expander_deficit(const Snapshot&, const WeightChoice&, double truncation = 0.0,
                            double overflow_exponent = 700.0);

// Integral of the backward heat kernel centered at (0, T) over the surface.
double huisken_entropy(const Snapshot&, double reference_time, double truncation = 0.0);

// Per-node density weight_i * dmu_i and the closed-form rates it must follow
// under the drifting / normalized drifting flows.
double node_density(const Snapshot&, const WeightChoice&, std::size_t i);
double drifting_density_rate(const Snapshot&, std::size_t i);    // t-clock, rho dmu
double normalized_density_rate(const Snapshot&, std::size_t i);  // s-clock, e^{|x|^2/2} dmu
double shrinking_density_rate(const Snapshot&, std::size_t i);   // s-clock, e^{-|x|^2/2} dmu

struct SignMonitorRecord {
  double min_h_plus_xnu{0.0};
  double max_h_plus_xnu{0.0};
  double min_mean_curvature{0.0};
  double max_position_normal{0.0};
  double max_tilt{0.0};
  double max_a2{0.0};
  double t_max_a2{0.0};  // physical t * max |A_physical|^2 in either clock
  double min_factorization{0.0};  // min over nodes of <x,nu>^2 - H^2
};
SignMonitorRecord sign_monitors(const Snapshot&);

enum class Direction { non_increasing, non_decreasing };
enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict);

struct MonotonicityReport {
  Verdict verdict{Verdict::inconclusive};
  double worst_violation{0.0};  // positive means the direction was violated
  double worst_clock{0.0};
};

// PASS iff every consecutive difference respects `dir` within
// tol_rel * (|value| + 1). Needs at least 5 samples.
MonotonicityReport monotonicity_verdict(const FunctionalSeries&, Direction,
                                        double tol_rel = 1e-6);

struct DeficitTrendReport {
  Verdict verdict{Verdict::inconclusive};  // pass = deficit vanishes
  double first_window_mean{0.0};
  double last_window_mean{0.0};
  double tail_integral{0.0};               // clock-integral over the last half
  std::vector<double> vanishing_times;     // times crossing decreasing thresholds
};

// Trend of a deficit series over the run: PASS iff the mean over the last
// tenth of the horizon is <= 10% of the mean over the first tenth.
DeficitTrendReport deficit_vanishing_check(const FunctionalSeries&);

}  // namespace mcf
