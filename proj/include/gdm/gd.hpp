#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "gdm/dual.hpp"
#include "gdm/geometry.hpp"
#include "gdm/mesh.hpp"

namespace gdm {

enum class GdKind { cvfe, mlnc_p1, hfv };

/// Region on which the function reconstruction is constant. The sparse row
/// maps DOF values to that constant.
struct PiRegion {
  double measure = 0.0;
  Vec2 barycenter;
  std::vector<std::pair<int, double>> row;
};

/// Region on which the gradient reconstruction is a constant 2-vector.
struct GradRegion {
  double measure = 0.0;
  Vec2 barycenter;
  std::vector<std::pair<int, Vec2>> row;
};

/// Intersection of a pi-region and a grad-region; the barycenter is where
/// data is evaluated in mixed function/gradient integrals.
struct OverlapEntry {
  int pi_region = -1;
  int grad_region = -1;
  double measure = 0.0;
  Vec2 barycenter;
};

/// Vector of degrees of freedom, tagged with the discretisation it belongs to.
struct DofVector {
  std::uint64_t gd_id = 0;
  Eigen::VectorXd values;
};

/// A gradient discretisation: DOF space plus region-wise piecewise-constant
/// function and gradient reconstructions, together with the nodal
/// interpolation operator. Immutable after build.
struct GradientDiscretisation {
  GdKind kind = GdKind::cvfe;
  std::uint64_t id = 0;
  int dof_count = 0;
  double h = 0.0;      ///< mesh size, used as the space-size proxy
  double gamma = 1.0;  ///< hfv cell/face measure split

  std::vector<PiRegion> pi_regions;
  std::vector<GradRegion> grad_regions;
  std::vector<OverlapEntry> overlaps;

  std::vector<Vec2> dof_points;     ///< nodal point of each DOF
  std::vector<double> dof_weights;  ///< total pi-measure owned by each DOF

  std::shared_ptr<const Mesh> mesh;
  std::shared_ptr<const DualDecomposition> dual;  ///< cvfe / mlnc-p1 only

  // hfv pi-region lookup: cell hat region per cell, and one region per
  // (cell, local face).
  std::vector<std::vector<int>> hfv_face_pi;

  /// Throws GdMismatch if v was built for another discretisation.
  void check(const DofVector& v) const;

  DofVector zero() const;
  /// Nodal interpolation: evaluates f at each DOF point.
  DofVector interpolate(const std::function<double(Vec2)>& f) const;

  Vec2 gradient_on(int grad_region, const Eigen::VectorXd& values) const;
  double pi_on(int pi_region, const Eigen::VectorXd& values) const;

  double pi_l2_norm(const DofVector& v) const;
  double grad_lp_norm(const DofVector& v, double p) const;

  /// Pi-region containing the point (ties resolved by best containment
  /// score). Throws PointOutsideDomain.
  int locate_pi_region(const Vec2& p) const;
  double pi_value_at(const Vec2& p, const DofVector& v) const;
};

/// Mass-lumped conforming P1 on vertex dual cells. DOFs are the vertices.
GradientDiscretisation build_cvfe(std::shared_ptr<const Mesh> mesh);

/// Mass-lumped nonconforming (Crouzeix-Raviart) P1 on face dual cells.
/// DOFs are the faces.
GradientDiscretisation build_mlnc_p1(std::shared_ptr<const Mesh> mesh);

/// Hybrid finite volume variant with cell and face unknowns. gamma in (0,1]
/// splits the cell measure between the cell unknown and its face unknowns;
/// beta scales the stabilised gradient on each half-diamond (empty = all 1).
GradientDiscretisation build_hfv(std::shared_ptr<const Mesh> mesh,
                                 double gamma = 0.3,
                                 std::vector<double> beta = {});

/// ||Pi v||_L2 + ||grad v||_Lp, evaluated exactly from the region constants.
double norm_D(const GradientDiscretisation& gd, const DofVector& v, double p);

}  // namespace gdm
