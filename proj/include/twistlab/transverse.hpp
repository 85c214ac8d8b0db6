#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <memory>
#include <vector>

#include "twistlab/eigensolve.hpp"
#include "twistlab/geometry.hpp"

namespace twistlab {

/// Discrete operators over one set of transverse degrees of freedom.
///
/// Two rotational-derivative discretizations are kept side by side:
///  - rot_centered: centered differences with zero extension across Dirichlet
///    nodes. Exactly antisymmetric; used for the section constant pencil.
///  - rot_form: centered differences falling back to one-sided stencils among
///    available nodes. Annihilates slice-constant fields exactly; used by the
///    waveguide form assembly.
struct TransverseSet {
  SpMat stiffness;
  Eigen::VectorXd mass;  // diagonal
  SpMat rot_centered;
  SpMat rot_form;
  SpMat rot_gram;  // rot_form^T diag(mass) rot_form
  std::vector<int> dof_of_node;
  std::vector<int> node_of_dof;

  int size() const { return static_cast<int>(node_of_dof.size()); }
};

struct TransverseDiscretization {
  CrossSection section;
  TransverseSet interior;  // Dirichlet boundary eliminated
  TransverseSet extended;  // boundary nodes kept, natural (Neumann) form
};

/// Assemble the transverse operators: five-point Dirichlet Laplacian over the
/// interior unknowns, tensor-consistent natural-form variant over
/// interior+boundary, diagonal trapezoid masses, rotational derivative.
TransverseDiscretization assemble_transverse(const CrossSection& section);

struct TransverseModes {
  Eigen::VectorXd values;    // E_n ascending
  Eigen::MatrixXd vectors;   // chi_n, M-normalized; chi_1 positive
  Eigen::VectorXd residuals;
  std::vector<char> degenerate_with_next;

  double e1() const { return values[0]; }
};

TransverseModes solve_transverse_modes(const TransverseSet& set, int count,
                                       const EigenOptions& opts = {});

/// Section constant: smallest eigenvalue of the pencil
/// (rot^T M rot + A - E1 M, M) over the Dirichlet transverse space. Strictly
/// positive iff the section is not rotationally invariant.
double estimate_lambda(const TransverseSet& interior, const TransverseModes& modes);

/// Closed-form discrete ground energy of the five-point Dirichlet Laplacian
/// on an a-by-b rectangle with the given cell counts (oracle helper).
double rectangle_discrete_e1(double a, double b, int nx, int ny);

}  // namespace twistlab
