#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcf {

struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All three representations store their nodes as points in a 2-plane:
// PlanarCurve (x, y), RevolutionProfile (r, z), RadialGraph (r, u).
struct Vec2 {
  double x{0.0}, y{0.0};

  Vec2 operator+(Vec2 b) const { return {x + b.x, y + b.y}; }
  Vec2 operator-(Vec2 b) const { return {x - b.x, y - b.y}; }
  Vec2 operator*(double a) const { return {a * x, a * y}; }
  Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
};

inline Vec2 operator*(double a, Vec2 v) { return {a * v.x, a * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }

enum class SurfaceKind { planar_curve, revolution_profile, radial_graph };

// End treatment for open representations. Geometry stencils consume these;
// the flow engine freezes the clamp data from the initial profile.
enum class EndRule {
  one_sided,    // no ghost: one-sided second-order stencil
  axis_mirror,  // smooth cap on the rotation axis: mirrored ghost node
  clamp,        // ghost continues along a frozen direction / slope
};

struct EndData {
  EndRule rule{EndRule::one_sided};
  Vec2 clamp_direction{1.0, 0.0};  // parametric curves: frozen unit direction
  double clamp_slope{0.0};         // radial graphs: frozen du/dr
};

struct Representation {
  SurfaceKind kind{SurfaceKind::planar_curve};
  int dim{1};           // hypersurface dimension n (ambient R^{n+1})
  bool closed{false};   // planar curves only
  double normal_sign{1.0};
  EndData left{}, right{};
  // Direction w for the gauge tilt V = <nu,w>^{-1}. For rotationally
  // symmetric kinds only the axial component is meaningful.
  Vec2 tilt_direction{0.0, -1.0};
};

// Per-node differential geometry, filled by compute_geometry. `nu` is the
// in-plane reduction of the ambient unit normal: for rotational kinds the
// ambient normal is (nu.x * omega, nu.y) with omega the orbit direction.
// Sign convention: H > 0 for a round sphere with outer normal, and the mean
// curvature vector is -H nu.
struct GeometryCache {
  std::vector<Vec2> nu;
  std::vector<Vec2> tangent;
  std::vector<double> mean_curvature;     // H
  std::vector<double> second_form_norm2;  // |A|^2
  std::vector<double> position_normal;    // <x, nu>
  std::vector<double> tangential_norm2;   // |x^T|^2
  std::vector<double> area_weight;        // d(mu) lumped at the node
  std::vector<double> tilt;               // V = <nu, w>^{-1}
  std::vector<double> kappa_profile;      // rotational kinds
  std::vector<double> kappa_rotational;   // rotational kinds
  bool filled{false};

  void resize(std::size_t n);
};

enum class ClockKind { t, s };

struct Snapshot {
  Representation rep;
  std::vector<double> sigma;   // material parameter labels (fixed under flow)
  std::vector<Vec2> nodes;
  double clock{0.0};
  ClockKind clock_kind{ClockKind::t};
  // |x_0|^2 of the material point each node tracks. Parametric runs carry it
  // exactly; radial graphs identify material points by their radial column.
  std::vector<double> x0_norm2;
  GeometryCache geo;

  std::size_t size() const { return nodes.size(); }
};

// Area of the unit sphere S^m.
double unit_sphere_area(int m);

// Validates representation invariants and fills the geometry cache.
// Curve kinds differentiate against cumulative chord length (second order,
// exact curvature on circles); radial graphs against the r-grid.
Snapshot compute_geometry(Snapshot snap);

// Squared ambient position norm |x|^2 of node i.
double position_norm2(const Snapshot& s, std::size_t i);

// (<x,nu>, |x^T|) of node i; geometry must be cached.
std::pair<double, double> split_position(const Snapshot& s, std::size_t i);

// |H + <x,nu>|, the pointwise self-expander deficit.
double expander_residual(const Snapshot& s, std::size_t i);

// Records |x|^2 of every node as the initial material position (call at t=0).
void stamp_initial_positions(Snapshot& s);

// Test-surface constructors (geometry cache not filled).
Snapshot make_circle(double radius, std::size_t nodes, Vec2 center = {0.0, 0.0});
Snapshot make_segment(Vec2 a, Vec2 b, std::size_t nodes);
Snapshot make_radial_graph(std::vector<double> r, std::vector<double> u, int dim);
Snapshot make_revolution_profile(std::vector<double> r, std::vector<double> z, int dim);

}  // namespace mcf
