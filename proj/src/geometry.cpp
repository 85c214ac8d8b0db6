#include "twistlab/geometry.hpp"

#include <cmath>
#include <string>

namespace twistlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

SectionGrid build_grid(SectionKind kind, double p1, double p2, double resolution) {
  const double width = (kind == SectionKind::rectangle) ? p1 : 2.0 * p1;
  const double height = (kind == SectionKind::rectangle) ? p2 : 2.0 * p2;

  SectionGrid g;
  g.nx = static_cast<int>(std::lround(width * resolution));
  g.ny = static_cast<int>(std::lround(height * resolution));
  if (g.nx < 1 || g.ny < 1) fail(Errc::invalid_shape, "resolution too low for section size");
  g.hx = width / g.nx;
  g.hy = height / g.ny;
  g.x0 = -0.5 * width;
  g.y0 = -0.5 * height;
  g.nodes.assign(g.node_count(), NodeClass::outside);

  if (kind == SectionKind::rectangle) {
    for (int j = 0; j <= g.ny; ++j)
      for (int i = 0; i <= g.nx; ++i) {
        bool edge = (i == 0 || i == g.nx || j == 0 || j == g.ny);
        g.nodes[g.id(i, j)] = edge ? NodeClass::boundary : NodeClass::interior;
      }
    return g;
  }

  // Ellipse: nodes strictly inside belong to the domain; the staircase layer
  // (inside nodes with an outside neighbor) plays the role of the boundary.
  auto inside = [&](int i, int j) {
    double u = g.x(i) / p1, v = g.y(j) / p2;
    return u * u + v * v < 1.0;
  };
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      if (inside(i, j)) g.nodes[g.id(i, j)] = NodeClass::interior;
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i) {
      if (g.nodes[g.id(i, j)] == NodeClass::outside) continue;
      bool edge = !g.in_domain(i - 1, j) || !g.in_domain(i + 1, j) || !g.in_domain(i, j - 1) ||
                  !g.in_domain(i, j + 1);
      if (edge) g.nodes[g.id(i, j)] = NodeClass::boundary;
    }
  return g;
}

}  // namespace

CrossSection build_cross_section(SectionKind kind, double p1, double p2, double resolution) {
  if (!(p1 > 0.0) || !(p2 > 0.0)) fail(Errc::invalid_shape, "shape parameters must be positive");
  if (!(resolution > 0.0)) fail(Errc::invalid_shape, "resolution must be positive");

  if (kind == SectionKind::ellipse) {
    double rel = std::abs(p1 - p2) / std::max(p1, p2);
    if (rel <= 1e-12)
      fail(Errc::rotationally_invariant, "disk cross-sections are rotationally invariant");
  }

  const double min_side = (kind == SectionKind::rectangle) ? std::min(p1, p2)
                                                           : 2.0 * std::min(p1, p2);
  if (std::lround(min_side * resolution) < 8)
    fail(Errc::invalid_shape, "resolution below 8 cells across the shortest side");

  CrossSection cs;
  cs.kind = kind;
  cs.p1 = p1;
  cs.p2 = p2;
  cs.resolution = resolution;
  cs.grid = build_grid(kind, p1, p2, resolution);

  if (kind == SectionKind::rectangle) {
    cs.area = p1 * p2;
    cs.diameter = std::hypot(p1, p2);
    double w = 0.5 * p1, h = 0.5 * p2;
    cs.boundary_vertices = {{-w, -h}, {w, -h}, {w, h}, {-w, h}};
  } else {
    cs.area = kPi * p1 * p2;
    cs.diameter = 2.0 * std::max(p1, p2);
    const int nv = 64;
    cs.boundary_vertices.reserve(nv);
    for (int k = 0; k < nv; ++k) {
      double t = 2.0 * kPi * k / nv;
      cs.boundary_vertices.push_back({p1 * std::cos(t), p2 * std::sin(t)});
    }
  }
  return cs;
}

TwistProfile TwistProfile::make(double beta, double support_min, double support_max) {
  if (beta < 0.0) fail(Errc::invalid_shape, "twist amplitude must be nonnegative");
  if (beta > 0.0 && !(support_max > support_min))
    fail(Errc::empty_support, "twist support interval is empty");
  TwistProfile p;
  p.beta_ = beta;
  p.s_min_ = support_min;
  p.s_max_ = support_max;
  return p;
}

TwistProfile make_twist_profile(double beta, double support_min, double support_max) {
  return TwistProfile::make(beta, support_min, support_max);
}

double TwistProfile::rate(double s) const {
  if (trivial() || s <= s_min_ || s >= s_max_) return 0.0;
  double L = s_max_ - s_min_;
  double c = std::cos(kPi * (s - 0.5 * (s_min_ + s_max_)) / L);
  return beta_ * c * c;
}

double TwistProfile::rate_derivative(double s) const {
  if (trivial() || s <= s_min_ || s >= s_max_) return 0.0;
  double L = s_max_ - s_min_;
  return -beta_ * kPi / L * std::sin(2.0 * kPi * (s - 0.5 * (s_min_ + s_max_)) / L);
}

double TwistProfile::rate_derivative_sup() const {
  if (trivial()) return 0.0;
  return beta_ * kPi / (s_max_ - s_min_);
}

double TwistProfile::angle(double s) const {
  if (trivial()) return 0.0;
  if (s <= s_min_) return 0.0;
  double L = s_max_ - s_min_;
  if (s >= s_max_) return 0.5 * beta_ * L;
  // int cos^2 = x/2 + (L / 4 pi) sin(2 pi x / L), measured from the midpoint.
  double mid = 0.5 * (s_min_ + s_max_);
  return beta_ * (0.5 * (s - s_min_) + L / (4.0 * kPi) * std::sin(2.0 * kPi * (s - mid) / L));
}

WindowSpec make_window(double start, double length) {
  if (!(length > 0.0)) fail(Errc::invalid_window, "window length must be positive");
  return WindowSpec{start, length};
}

HypothesisReport validate_scenario(const Scenario& scenario) {
  HypothesisReport rep;
  const double tm = scenario.twist.support_min();
  const double tM = scenario.twist.support_max();
  const bool twisted = !scenario.twist.trivial();

  double cover_lo = twisted ? tm : 0.0;
  double cover_hi = twisted ? tM : 0.0;
  bool have_cover = twisted;

  if (scenario.window) {
    const double a = scenario.window->start;
    const double b = scenario.window->end();
    rep.window_right_of_twist = (a >= tM);
    rep.window_left_of_twist = (b <= tm);
    rep.window_disjoint_from_twist = !twisted || rep.window_right_of_twist ||
                                     rep.window_left_of_twist;
    cover_lo = have_cover ? std::min(cover_lo, a) : a;
    cover_hi = have_cover ? std::max(cover_hi, b) : b;
    have_cover = true;
  } else {
    rep.window_disjoint_from_twist = true;
  }

  const double margin = std::max(scenario.twist.length(),
                                 scenario.window ? scenario.window->length : 0.0);
  if (!have_cover) {
    rep.truncation_adequate = scenario.half_length > 0.0;
  } else {
    rep.truncation_adequate = (-scenario.half_length <= cover_lo - margin) &&
                              (scenario.half_length >= cover_hi + margin);
  }
  return rep;
}

Scenario reflect_scenario(const Scenario& scenario) {
  Scenario out = scenario;
  out.twist = TwistProfile::make(scenario.twist.beta(), -scenario.twist.support_max(),
                                 -scenario.twist.support_min());
  if (scenario.window)
    out.window = WindowSpec{-scenario.window->end(), scenario.window->length};
  return out;
}

}  // namespace twistlab
