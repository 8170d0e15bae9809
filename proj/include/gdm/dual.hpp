#pragma once

#include <vector>

#include "gdm/geometry.hpp"
#include "gdm/mesh.hpp"

namespace gdm {

enum class DualKind { vertex, face };

/// One piece of a dual cell inside a primal cell.
struct SubRegion {
  int dof = -1;  ///< owning vertex id (vertex duals) or face id (face duals)
  double measure = 0.0;
  Vec2 barycenter;
};

/// Interface segment between two vertex dual cells inside one triangle
/// (edge midpoint to centroid). The normal points from the dual cell of the
/// lower vertex id to that of the higher one.
struct DualSegment {
  int cell = -1;
  int v_lo = -1;
  int v_hi = -1;
  Vec2 midpoint;
  double length = 0.0;
  Vec2 normal;
};

/// Partition of the domain into dual cells around vertices (CVFE) or faces
/// (mass-lumped nonconforming P1). Immutable after construction.
struct DualDecomposition {
  DualKind kind = DualKind::vertex;
  std::vector<double> region_measure;    ///< per DOF
  std::vector<Vec2> region_barycenter;   ///< per DOF, measure-weighted
  std::vector<std::vector<SubRegion>> cell_subregions;  ///< per primal cell
  std::vector<DualSegment> segments;     ///< vertex duals only
};

/// Builds the dual geometry for a simplicial mesh. Vertex duals join each
/// triangle's edge midpoints and centroid around a vertex; face duals give
/// each face the triangle (face endpoints, centroid) on each side. Every
/// sub-region has measure |K|/3. Throws NonSimplicialMesh otherwise.
DualDecomposition build_dual(const Mesh& mesh, DualKind kind);

}  // namespace gdm
