// Structured triangular meshes of an axis-aligned rectangle with tagged
// boundary (Gamma0: no-slip, Gamma1: frictional slip) and outward frames.
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace miscflow {

using Vec2 = Eigen::Vector2d;

enum class BoundaryTag { Gamma0, Gamma1 };
enum class Side { Bottom = 0, Right = 1, Top = 2, Left = 3 };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::Bottom: return "bottom";
    case Side::Right: return "right";
    case Side::Top: return "top";
    case Side::Left: return "left";
  }
  return "?";
}

struct MeshPartition {
  std::array<BoundaryTag, 4> side_tags{BoundaryTag::Gamma0, BoundaryTag::Gamma0,
                                       BoundaryTag::Gamma0, BoundaryTag::Gamma0};

  BoundaryTag tag(Side s) const { return side_tags[static_cast<int>(s)]; }

  static MeshPartition all_gamma0() { return MeshPartition{}; }

  static MeshPartition gamma1_on(std::initializer_list<Side> sides) {
    MeshPartition p;
    for (Side s : sides) p.side_tags[static_cast<int>(s)] = BoundaryTag::Gamma1;
    return p;
  }

  // Every side must be named exactly once across the two lists.
  static MeshPartition from_lists(const std::vector<std::string>& gamma0,
                                  const std::vector<std::string>& gamma1);

  bool has_gamma0() const {
    for (auto t : side_tags)
      if (t == BoundaryTag::Gamma0) return true;
    return false;
  }
};

// Edge on the outer boundary, oriented as in its owner triangle (CCW, so the
// domain lies to the left of a->b).
struct BoundaryEdge {
  int a, b;
  int tri;
  Side side;
  BoundaryTag tag;
};

struct BoundaryFrame {
  Vec2 normal;   // outward unit normal
  Vec2 tangent;  // tangent = (-n2, n1), fixed rotation convention
};

struct Mesh {
  int nx = 0, ny = 0;
  double Lx = 0.0, Ly = 0.0;
  std::vector<Vec2> nodes;
  std::vector<std::array<int, 3>> triangles;  // CCW
  std::vector<BoundaryEdge> boundary_edges;

  int n_vertices() const { return static_cast<int>(nodes.size()); }
  int n_triangles() const { return static_cast<int>(triangles.size()); }

  double triangle_area(int t) const {
    const auto& tri = triangles[t];
    const Vec2 e1 = nodes[tri[1]] - nodes[tri[0]];
    const Vec2 e2 = nodes[tri[2]] - nodes[tri[0]];
    return 0.5 * (e1.x() * e2.y() - e1.y() * e2.x());
  }

  double total_area() const {
    double a = 0.0;
    for (int t = 0; t < n_triangles(); ++t) a += triangle_area(t);
    return a;
  }

  double edge_length(const BoundaryEdge& e) const {
    return (nodes[e.b] - nodes[e.a]).norm();
  }

  double gamma_length(BoundaryTag tag) const {
    double len = 0.0;
    for (const auto& e : boundary_edges)
      if (e.tag == tag) len += edge_length(e);
    return len;
  }

  // Locate a point of the rectangle: owner triangle plus reference coords.
  // Points outside are clamped onto the closure.
  struct Location {
    int tri;
    double xi, eta;
  };
  Location locate(const Vec2& p) const {
    const double hx = Lx / nx, hy = Ly / ny;
    int i = std::min(std::max(static_cast<int>(std::floor(p.x() / hx)), 0), nx - 1);
    int j = std::min(std::max(static_cast<int>(std::floor(p.y() / hy)), 0), ny - 1);
    double lx = p.x() / hx - i, ly = p.y() / hy - j;
    lx = std::min(std::max(lx, 0.0), 1.0);
    ly = std::min(std::max(ly, 0.0), 1.0);
    const int cell = 2 * (j * nx + i);
    if (lx >= ly) {
      // lower triangle (v00, v10, v11): x = v00 + e1*xi + e2*eta with
      // e1 = (hx,0), e2 = (hx,hy) -> xi = lx - ly, eta = ly
      return {cell, lx - ly, ly};
    }
    // upper triangle (v00, v11, v01): e1 = (hx,hy), e2 = (0,hy)
    return {cell + 1, lx, ly - lx};
  }
};

inline MeshPartition MeshPartition::from_lists(const std::vector<std::string>& gamma0,
                                               const std::vector<std::string>& gamma1) {
  const std::map<std::string, Side> by_name = {{"bottom", Side::Bottom},
                                               {"right", Side::Right},
                                               {"top", Side::Top},
                                               {"left", Side::Left}};
  std::array<int, 4> seen{0, 0, 0, 0};
  MeshPartition p;
  auto apply = [&](const std::vector<std::string>& names, BoundaryTag tag) {
    for (const auto& n : names) {
      auto it = by_name.find(n);
      if (it == by_name.end())
        throw std::invalid_argument("unknown boundary side '" + n + "'");
      const int k = static_cast<int>(it->second);
      if (seen[k]++)
        throw std::invalid_argument("boundary side '" + n + "' assigned twice");
      p.side_tags[k] = tag;
    }
  };
  apply(gamma0, BoundaryTag::Gamma0);
  apply(gamma1, BoundaryTag::Gamma1);
  for (int k = 0; k < 4; ++k)
    if (!seen[k])
      throw std::invalid_argument(std::string("boundary side '") +
                                  side_name(static_cast<Side>(k)) +
                                  "' not assigned to Gamma0 or Gamma1");
  if (!p.has_gamma0())
    throw std::invalid_argument(
        "all four sides tagged Gamma1: the no-slip part Gamma0 must have "
        "positive length");
  return p;
}

// Which side an edge with both endpoints on the outer boundary lies on.
inline Side classify_side(const Mesh& mesh, int a, int b) {
  const double tol = 1e-12 * std::max(mesh.Lx, mesh.Ly);
  const Vec2& pa = mesh.nodes[a];
  const Vec2& pb = mesh.nodes[b];
  if (std::abs(pa.y()) < tol && std::abs(pb.y()) < tol) return Side::Bottom;
  if (std::abs(pa.x() - mesh.Lx) < tol && std::abs(pb.x() - mesh.Lx) < tol)
    return Side::Right;
  if (std::abs(pa.y() - mesh.Ly) < tol && std::abs(pb.y() - mesh.Ly) < tol)
    return Side::Top;
  if (std::abs(pa.x()) < tol && std::abs(pb.x()) < tol) return Side::Left;
  throw std::logic_error("boundary edge not on any rectangle side");
}

inline void classify_boundary(Mesh& mesh, const MeshPartition& partition) {
  if (!partition.has_gamma0())
    throw std::invalid_argument(
        "all four sides tagged Gamma1: the no-slip part Gamma0 must have "
        "positive length");
  for (auto& e : mesh.boundary_edges) {
    e.side = classify_side(mesh, e.a, e.b);
    e.tag = partition.tag(e.side);
  }
}

inline Mesh build_rect_mesh(int nx, int ny, double Lx, double Ly,
                            const MeshPartition& partition) {
  if (nx < 1 || ny < 1)
    throw std::invalid_argument("build_rect_mesh: cell counts must be >= 1");
  if (!(Lx > 0.0) || !(Ly > 0.0))
    throw std::invalid_argument("build_rect_mesh: side lengths must be > 0");

  Mesh m;
  m.nx = nx;
  m.ny = ny;
  m.Lx = Lx;
  m.Ly = Ly;

  const int npx = nx + 1;
  m.nodes.reserve(static_cast<size_t>(npx) * (ny + 1));
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      m.nodes.emplace_back(Lx * i / nx, Ly * j / ny);

  auto vid = [npx](int i, int j) { return j * npx + i; };
  m.triangles.reserve(2 * static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const int v00 = vid(i, j), v10 = vid(i + 1, j);
      const int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
      m.triangles.push_back({v00, v10, v11});
      m.triangles.push_back({v00, v11, v01});
    }

  // boundary edges = triangle edges seen once, kept in owner orientation
  std::map<std::pair<int, int>, std::pair<int, int>> once;  // key -> (tri, a<<1|dir)
  std::map<std::pair<int, int>, int> count;
  for (int t = 0; t < m.n_triangles(); ++t) {
    const auto& tri = m.triangles[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k], b = tri[(k + 1) % 3];
      const auto key = std::minmax(a, b);
      ++count[key];
      once[key] = {t, a};
    }
  }
  for (int t = 0; t < m.n_triangles(); ++t) {
    const auto& tri = m.triangles[t];
    for (int k = 0; k < 3; ++k) {
      const int a = tri[k], b = tri[(k + 1) % 3];
      if (count[std::minmax(a, b)] == 1)
        m.boundary_edges.push_back({a, b, t, Side::Bottom, BoundaryTag::Gamma0});
    }
  }

  classify_boundary(m, partition);
  return m;
}

inline BoundaryFrame boundary_frame(const Mesh& mesh, int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(mesh.boundary_edges.size()))
    throw std::out_of_range("boundary_frame: not a boundary edge index");
  const auto& e = mesh.boundary_edges[edge_index];
  const Vec2 dir = (mesh.nodes[e.b] - mesh.nodes[e.a]).normalized();
  BoundaryFrame f;
  f.normal = Vec2(dir.y(), -dir.x());  // CCW orientation puts the domain left
  f.tangent = Vec2(-f.normal.y(), f.normal.x());
  // outwardness check against the opposite vertex of the owner triangle
  const auto& tri = mesh.triangles[e.tri];
  for (int k = 0; k < 3; ++k) {
    const int v = tri[k];
    if (v != e.a && v != e.b) {
      const Vec2 mid = 0.5 * (mesh.nodes[e.a] + mesh.nodes[e.b]);
      if (f.normal.dot(mesh.nodes[v] - mid) > 0.0)
        throw std::logic_error("boundary_frame: normal points into the domain");
    }
  }
  return f;
}

}  // namespace miscflow
