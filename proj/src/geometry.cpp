#include "mcflab/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "mcflab/fd.hpp"

namespace mcf {

namespace {

constexpr double kAxisTol = 1e-13;

void validate(const Snapshot& s) {
  const auto& rep = s.rep;
  const std::size_t n = s.size();
  if (n < 8) throw geometry_error("representation needs at least 8 nodes");

  switch (rep.kind) {
    case SurfaceKind::planar_curve: {
      if (rep.dim != 1) throw geometry_error("planar curve must have dim = 1");
      const std::size_t m = rep.closed ? n : n - 1;
      for (std::size_t i = 0; i < m; ++i) {
        const Vec2 e = s.nodes[(i + 1) % n] - s.nodes[i];
        if (norm2(e) <= 0.0)
          throw geometry_error("degenerate edge: consecutive nodes coincide");
      }
      break;
    }
    case SurfaceKind::revolution_profile: {
      if (rep.dim < 2) throw geometry_error("revolution profile needs dim >= 2");
      for (std::size_t i = 0; i < n; ++i) {
        const double r = s.nodes[i].x;
        const bool axis_end =
            (i == 0 && rep.left.rule == EndRule::axis_mirror) ||
            (i + 1 == n && rep.right.rule == EndRule::axis_mirror);
        if (axis_end) {
          if (std::abs(r) > kAxisTol)
            throw geometry_error("axis cap declared but endpoint is off the axis");
        } else if (r <= 0.0) {
          throw geometry_error("axis degeneracy: r <= 0 without a declared cap");
        }
      }
      break;
    }
    case SurfaceKind::radial_graph: {
      if (rep.dim < 1) throw geometry_error("radial graph needs dim >= 1");
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(s.nodes[i + 1].x > s.nodes[i].x))
          throw geometry_error("non-graphical fold: r grid not strictly increasing");
      if (s.nodes[0].x < 0.0) throw geometry_error("radial grid must start at r >= 0");
      if (rep.left.rule == EndRule::axis_mirror && s.nodes[0].x > kAxisTol)
        throw geometry_error("axis cap declared but grid does not start at r = 0");
      break;
    }
  }
}

struct ExtendedCurve {
  std::vector<Vec2> pts;   // ghosts + nodes + ghosts
  std::vector<double> par; // chord-length (curves) or r (graphs) parameter
  std::size_t offset{0};   // index of node 0 inside pts
  bool left_ghost{false}, right_ghost{false};
};

ExtendedCurve extend_curve(const Snapshot& s) {
  const auto& rep = s.rep;
  const std::size_t n = s.size();
  ExtendedCurve ext;

  auto push_chain = [&](const std::vector<Vec2>& pts) {
    ext.pts = pts;
    ext.par.resize(pts.size());
    ext.par[0] = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
      ext.par[i] = ext.par[i - 1] + norm(pts[i] - pts[i - 1]);
  };

  if (rep.kind == SurfaceKind::planar_curve && rep.closed) {
    std::vector<Vec2> pts;
    pts.reserve(n + 2);
    pts.push_back(s.nodes[n - 1]);
    pts.insert(pts.end(), s.nodes.begin(), s.nodes.end());
    pts.push_back(s.nodes[0]);
    push_chain(pts);
    ext.offset = 1;
    ext.left_ghost = ext.right_ghost = true;
    return ext;
  }

  std::vector<Vec2> pts;
  pts.reserve(n + 2);
  if (rep.left.rule == EndRule::axis_mirror) {
    pts.push_back({-s.nodes[1].x, s.nodes[1].y});
    ext.left_ghost = true;
  } else if (rep.left.rule == EndRule::clamp) {
    const double L = norm(s.nodes[1] - s.nodes[0]);
    pts.push_back(s.nodes[0] + L * rep.left.clamp_direction);
    ext.left_ghost = true;
  }
  pts.insert(pts.end(), s.nodes.begin(), s.nodes.end());
  if (rep.right.rule == EndRule::axis_mirror) {
    pts.push_back({-s.nodes[n - 2].x, s.nodes[n - 2].y});
    ext.right_ghost = true;
  } else if (rep.right.rule == EndRule::clamp) {
    const double L = norm(s.nodes[n - 1] - s.nodes[n - 2]);
    pts.push_back(s.nodes[n - 1] + L * rep.right.clamp_direction);
    ext.right_ghost = true;
  }
  push_chain(pts);
  ext.offset = ext.left_ghost ? 1 : 0;
  return ext;
}

// One row of derivative data for a node of a polyline.
struct CurveDerivs {
  Vec2 d1, d2;
};

CurveDerivs curve_derivs(const ExtendedCurve& ext, std::size_t node) {
  const std::size_t j = node + ext.offset;
  const std::size_t total = ext.pts.size();
  std::size_t lo, count;
  const bool at_left = (j == 0);
  const bool at_right = (j + 1 == total);
  if (!at_left && !at_right) {
    lo = j - 1;
    count = 3;
  } else {
    count = 4;  // one-sided second-order stencil
    lo = at_left ? 0 : total - 4;
  }
  std::vector<double> xs(ext.par.begin() + lo, ext.par.begin() + lo + count);
  const auto w1 = fd_weights(xs, ext.par[j], 1);
  const auto w2 = fd_weights(xs, ext.par[j], 2);
  CurveDerivs d;
  for (std::size_t k = 0; k < count; ++k) {
    d.d1 += w1[k] * ext.pts[lo + k];
    d.d2 += w2[k] * ext.pts[lo + k];
  }
  return d;
}

// Trapezoid-lumped length element per node. Ghost edges do not belong to the
// surface: end nodes of open curves carry a half edge toward the interior
// only, while closed curves wrap.
double chord_weight(const ExtendedCurve& ext, std::size_t node, std::size_t n_nodes,
                    bool closed) {
  const std::size_t j = node + ext.offset;
  double w = 0.0;
  if (closed || node > 0) w += 0.5 * (ext.par[j] - ext.par[j - 1]);
  if (closed || node + 1 < n_nodes) w += 0.5 * (ext.par[j + 1] - ext.par[j]);
  return w;
}

}  // namespace

void GeometryCache::resize(std::size_t n) {
  nu.assign(n, Vec2{});
  tangent.assign(n, Vec2{});
  mean_curvature.assign(n, 0.0);
  second_form_norm2.assign(n, 0.0);
  position_normal.assign(n, 0.0);
  tangential_norm2.assign(n, 0.0);
  area_weight.assign(n, 0.0);
  tilt.assign(n, 0.0);
  kappa_profile.assign(n, 0.0);
  kappa_rotational.assign(n, 0.0);
  filled = false;
}

double unit_sphere_area(int m) {
  if (m < 0) throw geometry_error("unit_sphere_area: negative dimension");
  const double p = 0.5 * (m + 1);
  return 2.0 * std::pow(std::numbers::pi, p) / std::tgamma(p);
}

double position_norm2(const Snapshot& s, std::size_t i) { return norm2(s.nodes[i]); }

Snapshot compute_geometry(Snapshot snap) {
  validate(snap);
  const auto& rep = snap.rep;
  const std::size_t n = snap.size();
  auto& g = snap.geo;
  g.resize(n);

  const double sgn = rep.normal_sign;

  if (rep.kind == SurfaceKind::radial_graph) {
    // Differentiate the height against the r grid directly.
    std::vector<double> r(n), u(n);
    for (std::size_t i = 0; i < n; ++i) { r[i] = snap.nodes[i].x; u[i] = snap.nodes[i].y; }
    const bool mirror = rep.left.rule == EndRule::axis_mirror;
    const bool clampR = rep.right.rule == EndRule::clamp;
    std::vector<double> re, ue;
    if (mirror) { re.push_back(-r[1]); ue.push_back(u[1]); }
    re.insert(re.end(), r.begin(), r.end());
    ue.insert(ue.end(), u.begin(), u.end());
    if (clampR) {
      const double h = r[n - 1] - r[n - 2];
      re.push_back(r[n - 1] + h);
      ue.push_back(u[n - 1] + h * rep.right.clamp_slope);
    }
    const std::size_t off = mirror ? 1 : 0;
    const double area = unit_sphere_area(rep.dim - 1);

    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = i + off;
      std::size_t lo, count;
      if (j >= 1 && j + 1 < re.size()) { lo = j - 1; count = 3; }
      else { count = 4; lo = (j == 0) ? 0 : re.size() - 4; }
      std::vector<double> xs(re.begin() + lo, re.begin() + lo + count);
      const auto w1 = fd_weights(xs, re[j], 1);
      const auto w2 = fd_weights(xs, re[j], 2);
      double ur = 0, urr = 0;
      for (std::size_t k = 0; k < count; ++k) { ur += w1[k] * ue[lo + k]; urr += w2[k] * ue[lo + k]; }

      const double W = std::sqrt(1.0 + ur * ur);
      const Vec2 T{1.0 / W, ur / W};
      const Vec2 nu = sgn * Vec2{ur / W, -1.0 / W};
      const double kp = sgn * urr / (W * W * W);
      const double kr = (r[i] > kAxisTol) ? nu.x / r[i] : kp;
      const double H = kp + (rep.dim - 1) * kr;

      g.tangent[i] = T;
      g.nu[i] = nu;
      g.kappa_profile[i] = kp;
      g.kappa_rotational[i] = kr;
      g.mean_curvature[i] = H;
      g.second_form_norm2[i] = kp * kp + (rep.dim - 1) * kr * kr;
      g.position_normal[i] = dot(snap.nodes[i], nu);
      const double xt = dot(snap.nodes[i], T);
      g.tangential_norm2[i] = xt * xt;
      const double dtilt = dot(nu, rep.tilt_direction);
      g.tilt[i] = 1.0 / dtilt;

      double dr = 0.0;
      if (i > 0) dr += 0.5 * (r[i] - r[i - 1]);
      if (i + 1 < n) dr += 0.5 * (r[i + 1] - r[i]);
      g.area_weight[i] = area * std::pow(r[i], rep.dim - 1) * W * dr;
    }
    g.filled = true;
    return snap;
  }

  // Curve kinds: planar curve and revolution profile.
  const ExtendedCurve ext = extend_curve(snap);
  const bool profile = rep.kind == SurfaceKind::revolution_profile;
  const double area = profile ? unit_sphere_area(rep.dim - 1) : 1.0;

  for (std::size_t i = 0; i < n; ++i) {
    const auto d = curve_derivs(ext, i);
    const double m1 = norm(d.d1);
    if (!(m1 > 0.0)) throw geometry_error("vanishing tangent vector");
    const Vec2 T = (1.0 / m1) * d.d1;
    const Vec2 nu = sgn * Vec2{T.y, -T.x};
    // Chord length tracks arclength to second order; the tangential part of
    // d2 is parametrization noise and is projected away.
    const double kn = -dot(d.d2, nu);

    double H, A2, kp = kn, kr = 0.0;
    if (profile) {
      const double r = snap.nodes[i].x;
      kr = (r > kAxisTol) ? nu.x / r : kp;
      H = kp + (rep.dim - 1) * kr;
      A2 = kp * kp + (rep.dim - 1) * kr * kr;
    } else {
      H = kn;
      A2 = H * H;
    }

    g.tangent[i] = T;
    g.nu[i] = nu;
    g.kappa_profile[i] = kp;
    g.kappa_rotational[i] = kr;
    g.mean_curvature[i] = H;
    g.second_form_norm2[i] = A2;
    g.position_normal[i] = dot(snap.nodes[i], nu);
    const double xt = dot(snap.nodes[i], T);
    g.tangential_norm2[i] = xt * xt;
    g.tilt[i] = 1.0 / dot(nu, rep.tilt_direction);

    double w = chord_weight(ext, i, n, rep.closed);
    if (profile) w *= area * std::pow(snap.nodes[i].x, rep.dim - 1);
    g.area_weight[i] = w;
  }
  g.filled = true;
  return snap;
}

std::pair<double, double> split_position(const Snapshot& s, std::size_t i) {
  if (!s.geo.filled) throw geometry_error("split_position: geometry not cached");
  return {s.geo.position_normal[i], std::sqrt(s.geo.tangential_norm2[i])};
}

double expander_residual(const Snapshot& s, std::size_t i) {
  if (!s.geo.filled) throw geometry_error("expander_residual: geometry not cached");
  return std::abs(s.geo.mean_curvature[i] + s.geo.position_normal[i]);
}

void stamp_initial_positions(Snapshot& s) {
  s.x0_norm2.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) s.x0_norm2[i] = norm2(s.nodes[i]);
}

Snapshot make_circle(double radius, std::size_t nodes, Vec2 center) {
  if (!(radius > 0.0)) throw geometry_error("make_circle: radius must be positive");
  Snapshot s;
  s.rep.kind = SurfaceKind::planar_curve;
  s.rep.dim = 1;
  s.rep.closed = true;
  s.rep.tilt_direction = {0.0, 1.0};
  s.nodes.resize(nodes);
  s.sigma.resize(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes);
    s.nodes[k] = center + radius * Vec2{std::cos(a), std::sin(a)};
    s.sigma[k] = a;
  }
  return s;
}

Snapshot make_segment(Vec2 a, Vec2 b, std::size_t nodes) {
  Snapshot s;
  s.rep.kind = SurfaceKind::planar_curve;
  s.rep.dim = 1;
  s.rep.closed = false;
  s.nodes.resize(nodes);
  s.sigma.resize(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(nodes - 1);
    s.nodes[k] = a + f * (b - a);
    s.sigma[k] = f * norm(b - a);
  }
  return s;
}

Snapshot make_radial_graph(std::vector<double> r, std::vector<double> u, int dim) {
  if (r.size() != u.size()) throw geometry_error("make_radial_graph: size mismatch");
  Snapshot s;
  s.rep.kind = SurfaceKind::radial_graph;
  s.rep.dim = dim;
  s.rep.tilt_direction = {0.0, -1.0};
  if (!r.empty() && r.front() == 0.0) s.rep.left.rule = EndRule::axis_mirror;
  s.nodes.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) s.nodes[i] = {r[i], u[i]};
  s.sigma = std::move(r);
  return s;
}

Snapshot make_revolution_profile(std::vector<double> r, std::vector<double> z, int dim) {
  if (r.size() != z.size()) throw geometry_error("make_revolution_profile: size mismatch");
  Snapshot s;
  s.rep.kind = SurfaceKind::revolution_profile;
  s.rep.dim = dim;
  s.rep.tilt_direction = {0.0, -1.0};
  if (!r.empty() && r.front() == 0.0) s.rep.left.rule = EndRule::axis_mirror;
  if (!r.empty() && r.back() == 0.0) s.rep.right.rule = EndRule::axis_mirror;
  s.nodes.resize(r.size());
  s.sigma.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) s.nodes[i] = {r[i], z[i]};
  for (std::size_t i = 1; i < r.size(); ++i)
    s.sigma[i] = s.sigma[i - 1] + norm(s.nodes[i] - s.nodes[i - 1]);
  return s;
}

}  // namespace mcf
