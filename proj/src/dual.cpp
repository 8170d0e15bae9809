#include "gdm/dual.hpp"

#include <array>

#include "gdm/errors.hpp"

namespace gdm {

DualDecomposition build_dual(const Mesh& mesh, DualKind kind) {
  if (!mesh.is_simplicial())
    throw NonSimplicialMesh("dual decomposition requires a simplicial mesh");

  DualDecomposition dual;
  dual.kind = kind;
  const std::size_t ndof =
      kind == DualKind::vertex ? mesh.vertices().size() : mesh.faces().size();
  dual.region_measure.assign(ndof, 0.0);
  std::vector<Vec2> moment(ndof, Vec2{0.0, 0.0});
  dual.cell_subregions.resize(mesh.cells().size());

  for (std::size_t c = 0; c < mesh.cells().size(); ++c) {
    const Cell& cell = mesh.cells()[c];
    const std::array<Vec2, 3> p = {mesh.vertices()[cell.vertices[0]],
                                   mesh.vertices()[cell.vertices[1]],
                                   mesh.vertices()[cell.vertices[2]]};
    const Vec2 centroid = cell.centroid;
    const double third = cell.area / 3.0;

    for (int i = 0; i < 3; ++i) {
      SubRegion sub;
      sub.measure = third;
      if (kind == DualKind::vertex) {
        // Quadrilateral (vertex, midpoint, centroid, midpoint).
        const Vec2 m_next = (p[i] + p[(i + 1) % 3]) * 0.5;
        const Vec2 m_prev = (p[i] + p[(i + 2) % 3]) * 0.5;
        const std::array<Vec2, 4> quad = {p[i], m_next, centroid, m_prev};
        sub.dof = cell.vertices[i];
        sub.barycenter = polygon_centroid(quad);
      } else {
        // Triangle (face endpoints, centroid); local face i joins p[i], p[i+1].
        sub.dof = cell.faces[i];
        sub.barycenter = (p[i] + p[(i + 1) % 3] + centroid) / 3.0;
      }
      dual.region_measure[sub.dof] += sub.measure;
      moment[sub.dof] += sub.barycenter * sub.measure;
      dual.cell_subregions[c].push_back(sub);
    }

    if (kind == DualKind::vertex) {
      for (int i = 0; i < 3; ++i) {
        const int va = cell.vertices[i];
        const int vb = cell.vertices[(i + 1) % 3];
        DualSegment seg;
        seg.cell = static_cast<int>(c);
        seg.v_lo = std::min(va, vb);
        seg.v_hi = std::max(va, vb);
        const Vec2 edge_mid = (p[i] + p[(i + 1) % 3]) * 0.5;
        seg.midpoint = (edge_mid + centroid) * 0.5;
        const Vec2 t = centroid - edge_mid;
        seg.length = t.norm();
        Vec2 n = t.perp() / seg.length;
        // Orient from the lower-id vertex region towards the higher-id one.
        const Vec2 lo_to_hi = mesh.vertices()[seg.v_hi] - mesh.vertices()[seg.v_lo];
        if (n.dot(lo_to_hi) < 0.0) n = n * -1.0;
        seg.normal = n;
        dual.segments.push_back(seg);
      }
    }
  }

  dual.region_barycenter.resize(ndof);
  for (std::size_t i = 0; i < ndof; ++i)
    dual.region_barycenter[i] = moment[i] / dual.region_measure[i];
  return dual;
}

}  // namespace gdm
