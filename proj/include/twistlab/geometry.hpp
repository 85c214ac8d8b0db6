#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

enum class SectionKind { rectangle, ellipse };
enum class EndCondition { dirichlet, neumann };

/// Classification of a structured-grid node relative to the cross-section.
/// "boundary" nodes carry the lateral boundary condition (Dirichlet by
/// default, Neumann inside the window); "interior" nodes are always unknowns.
enum class NodeClass : unsigned char { outside, boundary, interior };

/// Uniform grid over the bounding box of the cross-section, centered at the
/// origin of the transverse plane. The rotational derivative is taken about
/// that origin.
struct SectionGrid {
  int nx = 0, ny = 0;  // cell counts
  double hx = 0, hy = 0;
  double x0 = 0, y0 = 0;  // coordinates of node (0,0)
  std::vector<NodeClass> nodes;

  int node_count() const { return (nx + 1) * (ny + 1); }
  int id(int i, int j) const { return j * (nx + 1) + i; }
  NodeClass at(int i, int j) const { return nodes[id(i, j)]; }
  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }
  bool in_domain(int i, int j) const {
    if (i < 0 || j < 0 || i > nx || j > ny) return false;
    return at(i, j) != NodeClass::outside;
  }
};

struct CrossSection {
  SectionKind kind = SectionKind::rectangle;
  double p1 = 0, p2 = 0;    // side lengths (rectangle) or semi-axes (ellipse)
  double resolution = 0;    // cells per unit length
  double area = 0;          // |omega|, closed form
  double diameter = 0;      // d, closed form
  SectionGrid grid;
  std::vector<std::array<double, 2>> boundary_vertices;
};

/// Compactly supported C^1 twist-rate profile: rate(s) = beta *
/// cos^2(pi (s - mid) / L) on [support_min, support_max], zero outside.
class TwistProfile {
 public:
  static TwistProfile make(double beta, double support_min, double support_max);

  double beta() const { return beta_; }
  double support_min() const { return s_min_; }
  double support_max() const { return s_max_; }
  double length() const { return trivial() ? 0.0 : s_max_ - s_min_; }
  bool trivial() const { return beta_ == 0.0; }

  double rate(double s) const;             // theta-dot
  double rate_derivative(double s) const;  // theta-ddot
  double angle(double s) const;            // theta(s) = int_{-inf}^s rate
  double rate_sup() const { return beta_; }
  double rate_derivative_sup() const;

 private:
  double beta_ = 0, s_min_ = 0, s_max_ = 0;
};

struct WindowSpec {
  double start = 0;   // a
  double length = 0;  // l > 0
  double end() const { return start + length; }
};

WindowSpec make_window(double start, double length);

struct Scenario {
  CrossSection section;
  TwistProfile twist;
  std::optional<WindowSpec> window;
  double half_length = 0;  // truncation S
  EndCondition ends = EndCondition::neumann;
};

struct HypothesisReport {
  bool window_disjoint_from_twist = false;
  bool window_right_of_twist = false;
  bool window_left_of_twist = false;
  bool truncation_adequate = false;

  /// Non-existence certificates may only be requested when the window avoids
  /// the twist region entirely on one side.
  bool nonexistence_admissible() const {
    return window_disjoint_from_twist && (window_right_of_twist || window_left_of_twist);
  }
};

CrossSection build_cross_section(SectionKind kind, double p1, double p2, double resolution);
TwistProfile make_twist_profile(double beta, double support_min, double support_max);
HypothesisReport validate_scenario(const Scenario& scenario);

/// Mirror image s -> -s of the scenario (twist support and window reflected).
Scenario reflect_scenario(const Scenario& scenario);

}  // namespace twistlab
