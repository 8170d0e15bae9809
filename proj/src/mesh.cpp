#include "gdm/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gdm/errors.hpp"

namespace gdm {

namespace {

double cell_diameter(const std::vector<Vec2>& verts,
                     const std::vector<int>& ids) {
  double d = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      d = std::max(d, (verts[ids[i]] - verts[ids[j]]).norm());
  return d;
}

}  // namespace

Mesh Mesh::build(std::vector<Vec2> vertices,
                 std::vector<std::vector<int>> cell_vertices,
                 bool require_unit_domain) {
  Mesh m;
  m.vertices_ = std::move(vertices);
  const int nv = static_cast<int>(m.vertices_.size());

  m.cells_.resize(cell_vertices.size());
  std::map<std::pair<int, int>, int> face_index;

  for (std::size_t c = 0; c < cell_vertices.size(); ++c) {
    Cell& cell = m.cells_[c];
    cell.vertices = std::move(cell_vertices[c]);
    if (cell.vertices.size() < 3)
      throw GeometryError("cell " + std::to_string(c) + " has fewer than 3 vertices");
    for (int v : cell.vertices)
      if (v < 0 || v >= nv)
        throw GeometryError("cell " + std::to_string(c) +
                            " references missing vertex " + std::to_string(v));

    std::vector<Vec2> poly;
    poly.reserve(cell.vertices.size());
    for (int v : cell.vertices) poly.push_back(m.vertices_[v]);
    double area = polygon_signed_area(poly);
    if (area < 0.0) {  // store counter-clockwise
      std::reverse(cell.vertices.begin(), cell.vertices.end());
      std::reverse(poly.begin(), poly.end());
      area = -area;
    }
    if (!(area > 0.0))
      throw GeometryError("cell " + std::to_string(c) + " is degenerate");
    cell.area = area;
    cell.centroid = polygon_centroid(poly);
    cell.point = cell.centroid;

    const std::size_t k = cell.vertices.size();
    cell.faces.resize(k);
    cell.normals.resize(k);
    cell.face_distance.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const int va = cell.vertices[i];
      const int vb = cell.vertices[(i + 1) % k];
      auto key = std::minmax(va, vb);
      auto [it, inserted] = face_index.try_emplace(key, static_cast<int>(m.faces_.size()));
      if (inserted) {
        Face f;
        f.vertices = {va, vb};
        const Vec2 a = m.vertices_[va], b = m.vertices_[vb];
        f.measure = (b - a).norm();
        f.midpoint = (a + b) * 0.5;
        f.cells = {static_cast<int>(c), -1};
        m.faces_.push_back(f);
      } else {
        Face& f = m.faces_[it->second];
        if (f.cells[1] >= 0)
          throw GeometryError("face shared by more than two cells");
        f.cells[1] = static_cast<int>(c);
      }
      cell.faces[i] = it->second;

      // Outward normal of the edge va->vb of a CCW polygon.
      const Vec2 t = m.vertices_[vb] - m.vertices_[va];
      const Vec2 n = Vec2{t.y, -t.x} / t.norm();
      cell.normals[i] = n;
      const double d = (m.faces_[cell.faces[i]].midpoint - cell.point).dot(n);
      if (!(d > 0.0))
        throw GeometryError("cell " + std::to_string(c) +
                            " is not star-shaped with respect to its point");
      cell.face_distance[i] = d;
    }

    // Closed-polygon identity: sum |sigma| n_{K,sigma} = 0.
    Vec2 s{0.0, 0.0};
    for (std::size_t i = 0; i < k; ++i)
      s += cell.normals[i] * m.faces_[cell.faces[i]].measure;
    if (s.norm() > 1e-12)
      throw GeometryError("cell " + std::to_string(c) + " boundary does not close");

    m.total_area_ += cell.area;
    m.h_ = std::max(m.h_, cell_diameter(m.vertices_, cell.vertices));
  }

  if (require_unit_domain && std::abs(m.total_area_ - 1.0) > 1e-12)
    throw GeometryError("cell areas sum to " + std::to_string(m.total_area_) +
                        ", expected 1");
  return m;
}

bool Mesh::is_simplicial() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return c.vertices.size() == 3; });
}

std::vector<Vec2> Mesh::cell_polygon(int cell) const {
  std::vector<Vec2> poly;
  poly.reserve(cells_[cell].vertices.size());
  for (int v : cells_[cell].vertices) poly.push_back(vertices_[v]);
  return poly;
}

int Mesh::locate_cell(const Vec2& p) const {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (point_in_convex_polygon(p, cell_polygon(static_cast<int>(c)), 1e-12))
      return static_cast<int>(c);
  }
  return -1;
}

Mesh generate_triangular_mesh(int n) {
  std::vector<Vec2> vertices;
  vertices.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      vertices.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});

  auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::vector<int>> cells;
  cells.reserve(2 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      // Split along the lower-left -> upper-right diagonal.
      cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      cells.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }
  Mesh m = Mesh::build(std::move(vertices), std::move(cells));
  m.h_ = std::sqrt(2.0) / n;  // exact halving under n -> 2n
  return m;
}

Mesh generate_refined_nonconforming_mesh(int level) {
  const int nc = 1 << level;       // coarse cells per side
  const int half = nc / 2;         // refined quadrant is [0,1/2]^2
  const double hc = 1.0 / nc;
  const double hf = hc / 2.0;

  // Vertices live on the fine lattice (spacing hf); only the ones used by a
  // cell polygon are emitted.
  const int nfine = 2 * nc;
  std::map<std::pair<int, int>, int> lattice;
  std::vector<Vec2> vertices;
  auto vid = [&](int i, int j) {
    auto [it, inserted] = lattice.try_emplace({i, j}, static_cast<int>(vertices.size()));
    if (inserted)
      vertices.push_back({static_cast<double>(i) / nfine, static_cast<double>(j) / nfine});
    return it->second;
  };

  std::vector<std::vector<int>> cells;
  // Fine cells in the lower-left quadrant.
  for (int j = 0; j < nc; ++j)
    for (int i = 0; i < nc; ++i)
      cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
  // Coarse cells elsewhere; sides facing the refined quadrant carry the
  // hanging mid-side vertex so each half becomes its own face.
  for (int j = 0; j < nc; ++j) {
    for (int i = 0; i < nc; ++i) {
      if (i < half && j < half) continue;  // refined
      const int i0 = 2 * i, j0 = 2 * j;
      std::vector<int> poly;
      poly.push_back(vid(i0, j0));
      if (i < half && j == half) poly.push_back(vid(i0 + 1, j0));  // hanging on bottom
      poly.push_back(vid(i0 + 2, j0));
      poly.push_back(vid(i0 + 2, j0 + 2));
      poly.push_back(vid(i0, j0 + 2));
      if (i == half && j < half) poly.push_back(vid(i0, j0 + 1));  // hanging on left
      cells.push_back(std::move(poly));
    }
  }
  Mesh m = Mesh::build(std::move(vertices), std::move(cells));
  m.h_ = std::sqrt(2.0) / nc;
  return m;
}

void write_mesh(const Mesh& mesh, std::ostream& out) {
  out << "gdmmesh 1\n";
  out << "vertices " << mesh.vertices().size() << "\n";
  char buf[64];
  for (const Vec2& v : mesh.vertices()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.x, v.y);
    out << buf;
  }
  out << "cells " << mesh.cells().size() << "\n";
  for (const Cell& c : mesh.cells()) {
    out << c.vertices.size();
    for (int v : c.vertices) out << ' ' << v;
    out << '\n';
  }
}

void write_mesh(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_mesh(mesh, out);
}

namespace {

struct LineReader {
  std::istream& in;
  int line_number = 0;
  std::string next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError("unexpected end of file", line_number);
  }
};

}  // namespace

Mesh read_mesh(std::istream& in) {
  LineReader reader{in};

  std::string line = reader.next();
  if (line != "gdmmesh 1")
    throw ParseError("expected header 'gdmmesh 1', got '" + line + "'",
                     reader.line_number);

  auto expect_count = [&](const char* keyword) {
    std::string l = reader.next();
    std::istringstream ss(l);
    std::string word;
    long count = -1;
    if (!(ss >> word >> count) || word != keyword || count < 0)
      throw ParseError(std::string("expected '") + keyword + " N'",
                       reader.line_number);
    return count;
  };

  const long nv = expect_count("vertices");
  std::vector<Vec2> vertices;
  vertices.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    std::istringstream ss(reader.next());
    Vec2 v;
    if (!(ss >> v.x >> v.y))
      throw ParseError("expected 'x y'", reader.line_number);
  vertices.push_back(v);
  }

  const long ncells = expect_count("cells");
  std::vector<std::vector<int>> cells;
  cells.reserve(ncells);
  for (long i = 0; i < ncells; ++i) {
    std::istringstream ss(reader.next());
    int k = 0;
    if (!(ss >> k) || k < 3)
      throw ParseError("expected 'k v1 ... vk' with k >= 3", reader.line_number);
    std::vector<int> poly(k);
    for (int& v : poly) {
      if (!(ss >> v))
        throw ParseError("truncated cell vertex list", reader.line_number);
      if (v < 0 || v >= nv)
        throw ParseError("cell references missing vertex " + std::to_string(v),
                         reader.line_number);
    }
    cells.push_back(std::move(poly));
  }

  return Mesh::build(std::move(vertices), std::move(cells));
}

Mesh read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_mesh(in);
}

}  // namespace gdm
