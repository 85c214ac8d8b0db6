#include "twistlab/transverse.hpp"

#include <cmath>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

using Triplet = Eigen::Triplet<double>;

/// Direction weight: 1 inside the domain, 1/2 where the neighbor in that
/// direction is missing (trapezoid rule at the staircase boundary).
double axis_factor(const SectionGrid& g, int i, int j, bool x_axis) {
  bool lo = x_axis ? g.in_domain(i - 1, j) : g.in_domain(i, j - 1);
  bool hi = x_axis ? g.in_domain(i + 1, j) : g.in_domain(i, j + 1);
  return 0.5 * (static_cast<double>(lo) + static_cast<double>(hi));
}

TransverseSet build_set(const SectionGrid& g, bool keep_boundary) {
  TransverseSet set;
  set.dof_of_node.assign(g.node_count(), -1);
  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i) {
      NodeClass c = g.at(i, j);
      bool active = (c == NodeClass::interior) || (keep_boundary && c == NodeClass::boundary);
      if (active) {
        set.dof_of_node[g.id(i, j)] = static_cast<int>(set.node_of_dof.size());
        set.node_of_dof.push_back(g.id(i, j));
      }
    }

  const int n = set.size();
  set.mass.resize(n);
  for (int d = 0; d < n; ++d) {
    int node = set.node_of_dof[d];
    int i = node % (g.nx + 1), j = node / (g.nx + 1);
    set.mass[d] = g.hx * g.hy * axis_factor(g, i, j, true) * axis_factor(g, i, j, false);
  }

  std::vector<Triplet> ts;
  ts.reserve(static_cast<size_t>(n) * 6);
  auto add_edge = [&](int ia, int ja, int ib, int jb, double w) {
    int da = set.dof_of_node[g.id(ia, ja)];
    int db = set.dof_of_node[g.id(ib, jb)];
    if (da < 0 && db < 0) return;
    if (da >= 0) ts.emplace_back(da, da, w);
    if (db >= 0) ts.emplace_back(db, db, w);
    if (da >= 0 && db >= 0) {
      ts.emplace_back(da, db, -w);
      ts.emplace_back(db, da, -w);
    }
  };

  for (int j = 0; j <= g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      if (g.in_domain(i, j) && g.in_domain(i + 1, j)) {
        double wy = g.hy * 0.5 *
                    (axis_factor(g, i, j, false) + axis_factor(g, i + 1, j, false));
        add_edge(i, j, i + 1, j, wy / g.hx);
      }
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i <= g.nx; ++i)
      if (g.in_domain(i, j) && g.in_domain(i, j + 1)) {
        double wx = g.hx * 0.5 *
                    (axis_factor(g, i, j, true) + axis_factor(g, i, j + 1, true));
        add_edge(i, j, i, j + 1, wx / g.hy);
      }

  set.stiffness.resize(n, n);
  set.stiffness.setFromTriplets(ts.begin(), ts.end());
  set.stiffness.makeCompressed();

  // Rotational derivative x d/dy - y d/dx, row-weighted by node coordinates.
  std::vector<Triplet> tc, tf;
  auto active = [&](int i, int j) {
    return i >= 0 && j >= 0 && i <= g.nx && j <= g.ny && set.dof_of_node[g.id(i, j)] >= 0;
  };
  for (int d = 0; d < n; ++d) {
    int node = set.node_of_dof[d];
    int i = node % (g.nx + 1), j = node / (g.nx + 1);
    double xc = g.x(i), yc = g.y(j);

    // d/dx block (weight -y)
    {
      bool lo = active(i - 1, j), hi = active(i + 1, j);
      double w = -yc;
      if (lo) tc.emplace_back(d, set.dof_of_node[g.id(i - 1, j)], -w / (2.0 * g.hx));
      if (hi) tc.emplace_back(d, set.dof_of_node[g.id(i + 1, j)], w / (2.0 * g.hx));
      if (lo && hi) {
        tf.emplace_back(d, set.dof_of_node[g.id(i - 1, j)], -w / (2.0 * g.hx));
        tf.emplace_back(d, set.dof_of_node[g.id(i + 1, j)], w / (2.0 * g.hx));
      } else if (hi) {
        tf.emplace_back(d, set.dof_of_node[g.id(i + 1, j)], w / g.hx);
        tf.emplace_back(d, d, -w / g.hx);
      } else if (lo) {
        tf.emplace_back(d, d, w / g.hx);
        tf.emplace_back(d, set.dof_of_node[g.id(i - 1, j)], -w / g.hx);
      }
    }
    // d/dy block (weight +x)
    {
      bool lo = active(i, j - 1), hi = active(i, j + 1);
      double w = xc;
      if (lo) tc.emplace_back(d, set.dof_of_node[g.id(i, j - 1)], -w / (2.0 * g.hy));
      if (hi) tc.emplace_back(d, set.dof_of_node[g.id(i, j + 1)], w / (2.0 * g.hy));
      if (lo && hi) {
        tf.emplace_back(d, set.dof_of_node[g.id(i, j - 1)], -w / (2.0 * g.hy));
        tf.emplace_back(d, set.dof_of_node[g.id(i, j + 1)], w / (2.0 * g.hy));
      } else if (hi) {
        tf.emplace_back(d, set.dof_of_node[g.id(i, j + 1)], w / g.hy);
        tf.emplace_back(d, d, -w / g.hy);
      } else if (lo) {
        tf.emplace_back(d, d, w / g.hy);
        tf.emplace_back(d, set.dof_of_node[g.id(i, j - 1)], -w / g.hy);
      }
    }
  }
  set.rot_centered.resize(n, n);
  set.rot_centered.setFromTriplets(tc.begin(), tc.end());
  set.rot_centered.makeCompressed();
  set.rot_form.resize(n, n);
  set.rot_form.setFromTriplets(tf.begin(), tf.end());
  set.rot_form.makeCompressed();
  set.rot_gram = set.rot_form.transpose() * set.mass.asDiagonal() * set.rot_form;
  set.rot_gram.makeCompressed();
  return set;
}

void check_coarseness(const CrossSection& cs) {
  const SectionGrid& g = cs.grid;
  // Count interior nodes along the central row and column.
  int jc = g.ny / 2, ic = g.nx / 2;
  int row = 0, col = 0;
  for (int i = 0; i <= g.nx; ++i)
    if (g.at(i, jc) == NodeClass::interior) ++row;
  for (int j = 0; j <= g.ny; ++j)
    if (g.at(ic, j) == NodeClass::interior) ++col;
  if (row < 3 || col < 3)
    fail(Errc::grid_too_coarse, "fewer than 3 interior nodes along an axis");
}

}  // namespace

TransverseDiscretization assemble_transverse(const CrossSection& section) {
  check_coarseness(section);
  TransverseDiscretization t{section, build_set(section.grid, false),
                             build_set(section.grid, true)};
  return t;
}

TransverseModes solve_transverse_modes(const TransverseSet& set, int count,
                                       const EigenOptions& opts) {
  EigenOptions o = opts;
  o.count = count;
  if (o.tol > 1e-10) o.tol = 1e-10;
  EigenResult r = smallest_eigenpairs(set.stiffness, set.mass, o);

  TransverseModes modes;
  modes.values = r.values;
  modes.vectors = r.vectors;
  modes.residuals = r.residuals;

  // Deterministic sign convention: the entry of largest magnitude is
  // positive. For the ground state this realizes the positive Perron vector.
  for (int c = 0; c < modes.vectors.cols(); ++c) {
    Eigen::Index imax;
    modes.vectors.col(c).cwiseAbs().maxCoeff(&imax);
    if (modes.vectors(imax, c) < 0.0) modes.vectors.col(c) *= -1.0;
  }

  modes.degenerate_with_next.assign(count, 0);
  for (int c = 0; c + 1 < count; ++c)
    if (std::abs(modes.values[c + 1] - modes.values[c]) < 1e-6 * modes.values[0])
      modes.degenerate_with_next[c] = 1;
  return modes;
}

double estimate_lambda(const TransverseSet& interior, const TransverseModes& modes) {
  const double e1 = modes.e1();
  SpMat pencil = SpMat(interior.rot_centered.transpose()) *
                     interior.mass.asDiagonal() * interior.rot_centered +
                 interior.stiffness;
  SpMat shift(pencil.rows(), pencil.cols());
  std::vector<Triplet> ts;
  for (Eigen::Index i = 0; i < interior.mass.size(); ++i)
    ts.emplace_back(static_cast<int>(i), static_cast<int>(i), -e1 * interior.mass[i]);
  shift.setFromTriplets(ts.begin(), ts.end());
  pencil = pencil + shift;
  pencil.makeCompressed();

  EigenOptions o;
  o.count = 1;
  o.tol = 1e-9;
  o.shift = -0.05 * std::max(1.0, e1);
  EigenResult r = smallest_eigenpairs(pencil, interior.mass, o);
  double lambda = r.values[0];
  if (lambda <= 1e-10)
    fail(Errc::degenerate_section, "section constant vanished: rotationally invariant section");
  return lambda;
}

double rectangle_discrete_e1(double a, double b, int nx, int ny) {
  const double pi = 3.14159265358979323846;
  double hx = a / nx, hy = b / ny;
  auto ev = [&](double h, double len) {
    double s = std::sin(pi * h / (2.0 * len));
    return 4.0 / (h * h) * s * s;
  };
  return ev(hx, a) + ev(hy, b);
}

}  // namespace twistlab
