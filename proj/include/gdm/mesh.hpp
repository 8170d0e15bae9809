#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "gdm/geometry.hpp"

namespace gdm {

struct Face {
  std::array<int, 2> vertices{-1, -1};
  double measure = 0.0;  ///< |sigma|
  Vec2 midpoint;         ///< centre of mass of the face
  /// Adjacent cell ids; cells[1] == -1 on the boundary.
  std::array<int, 2> cells{-1, -1};
  bool is_boundary() const { return cells[1] < 0; }
};

struct Cell {
  std::vector<int> vertices;  ///< counter-clockwise
  std::vector<int> faces;     ///< faces[i] joins vertices[i] and vertices[i+1]
  double area = 0.0;          ///< |K|
  Vec2 centroid;              ///< centre of mass
  Vec2 point;                 ///< cell point x_K (star centre), here the centroid
  std::vector<Vec2> normals;  ///< outward unit normal per local face
  std::vector<double> face_distance;  ///< orthogonal distance x_K -> face line
};

/// Polygonal mesh of the unit square. Immutable after construction; all
/// derived quantities (faces, measures, normals) are computed once from the
/// vertex coordinates and cell->vertex lists.
class Mesh {
 public:
  /// Builds a mesh from raw vertex/cell data, derives faces and geometry, and
  /// checks the structural invariants. Throws GeometryError on failure.
  static Mesh build(std::vector<Vec2> vertices,
                    std::vector<std::vector<int>> cell_vertices,
                    bool require_unit_domain = true);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Cell>& cells() const { return cells_; }
  double h() const { return h_; }
  double total_area() const { return total_area_; }
  bool is_simplicial() const;

  /// Index of the cell containing p, or -1. Boundary points resolve to the
  /// first matching cell in index order.
  int locate_cell(const Vec2& p) const;

  std::vector<Vec2> cell_polygon(int cell) const;

 private:
  friend Mesh generate_triangular_mesh(int n);
  friend Mesh generate_refined_nonconforming_mesh(int level);

  std::vector<Vec2> vertices_;
  std::vector<Face> faces_;
  std::vector<Cell> cells_;
  double h_ = 0.0;
  double total_area_ = 0.0;
};

/// Uniform n x n grid of the unit square, each square cut into two triangles
/// by the diagonal from its lower-left to its upper-right corner. h = sqrt(2)/n.
Mesh generate_triangular_mesh(int n);

/// Rectangular mesh of the unit square from a 2^level x 2^level grid whose
/// lower-left quadrant is refined one level deeper. The hanging nodes show up
/// as several coplanar faces on one side of a coarse cell. h = sqrt(2)/2^level.
Mesh generate_refined_nonconforming_mesh(int level);

/// Line-oriented text format: "gdmmesh 1", "vertices N", N x "x y",
/// "cells M", M x "k v1 ... vk". Faces are derived on read.
Mesh read_mesh(const std::string& path);
Mesh read_mesh(std::istream& in);
void write_mesh(const Mesh& mesh, const std::string& path);
void write_mesh(const Mesh& mesh, std::ostream& out);

}  // namespace gdm
