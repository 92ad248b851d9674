#include "objf/voxelize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace objf {

namespace {

// Akenine-Moller style separating axis test, specialized helpers.
bool axis_separates(const Vec3& axis, const Vec3& v0, const Vec3& v1, const Vec3& v2,
                    const Vec3& half) {
  const Scalar p0 = axis.dot(v0);
  const Scalar p1 = axis.dot(v1);
  const Scalar p2 = axis.dot(v2);
  const Scalar r = half.x() * std::abs(axis.x()) + half.y() * std::abs(axis.y()) +
                   half.z() * std::abs(axis.z());
  const Scalar mn = std::min({p0, p1, p2});
  const Scalar mx = std::max({p0, p1, p2});
  return mn > r || mx < -r;
}

}  // namespace

bool triangle_box_overlap(const Vec3& box_center, const Vec3& box_half, const Vec3& a,
                          const Vec3& b, const Vec3& c) {
  const Vec3 v0 = a - box_center;
  const Vec3 v1 = b - box_center;
  const Vec3 v2 = c - box_center;

  // box face normals
  for (int ax = 0; ax < 3; ++ax) {
    const Scalar mn = std::min({v0[ax], v1[ax], v2[ax]});
    const Scalar mx = std::max({v0[ax], v1[ax], v2[ax]});
    if (mn > box_half[ax] || mx < -box_half[ax]) return false;
  }

  const Vec3 e0 = v1 - v0;
  const Vec3 e1 = v2 - v1;
  const Vec3 e2 = v0 - v2;

  // triangle normal
  if (axis_separates(e0.cross(e1), v0, v1, v2, box_half)) return false;

  // 9 edge cross products
  const std::array<Vec3, 3> axes = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  for (const Vec3& e : {e0, e1, e2})
    for (const Vec3& u : axes) {
      const Vec3 cr = u.cross(e);
      if (cr.squaredNorm() < 1e-30) continue;
      if (axis_separates(cr, v0, v1, v2, box_half)) return false;
    }
  return true;
}

HexMesh voxelize(const TriangleMesh& mesh, int resolution, int threads) {
  if (resolution < 1) throw InputError("voxel resolution must be >= 1");
  validate_mesh(mesh);

  const Aabb box = mesh_aabb(mesh);
  const Vec3 ext = box.extent();
  const Scalar edge = ext.maxCoeff() / resolution;

  Vec3i dims;
  for (int ax = 0; ax < 3; ++ax)
    dims[ax] = std::max(1, static_cast<int>(std::ceil(ext[ax] / edge - 1e-9)));

  HexMesh hex;
  hex.voxel_edge = edge;
  hex.grid_origin = box.min;
  hex.grid_dims = dims;
  hex.occupancy.assign(static_cast<size_t>(dims.x()) * dims.y() * dims.z(), 0);

  // Pass 1: voxels intersecting the surface.
  const Vec3 half = Vec3::Constant(edge / 2);
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    const auto tri = mesh.triangles.row(t);
    const Vec3 a = mesh.vertices.row(tri[0]);
    const Vec3 b = mesh.vertices.row(tri[1]);
    const Vec3 c = mesh.vertices.row(tri[2]);
    Aabb tb;
    tb.expand(a);
    tb.expand(b);
    tb.expand(c);
    Vec3i lo, hi;
    for (int ax = 0; ax < 3; ++ax) {
      lo[ax] = std::clamp(static_cast<int>(std::floor((tb.min[ax] - box.min[ax]) / edge)), 0,
                          dims[ax] - 1);
      hi[ax] = std::clamp(static_cast<int>(std::floor((tb.max[ax] - box.min[ax]) / edge)), 0,
                          dims[ax] - 1);
    }
    for (int iz = lo.z(); iz <= hi.z(); ++iz)
      for (int iy = lo.y(); iy <= hi.y(); ++iy)
        for (int ix = lo.x(); ix <= hi.x(); ++ix) {
          const Index vi = hex.voxel_index(ix, iy, iz);
          if (hex.occupancy[vi]) continue;
          const Vec3 center = box.min + edge * Vec3(ix + 0.5, iy + 0.5, iz + 0.5);
          if (triangle_box_overlap(center, half, a, b, c)) hex.occupancy[vi] = 1;
        }
  }

  // Pass 2: interior fill by +x parity ray cast from voxel centers. The
  // row line is nudged off the lattice to avoid exact edge hits; the
  // nudge follows the grid, so occupancy is translation-equivariant.
  const Scalar nudge_y = 7.3e-8 * edge;
  const Scalar nudge_z = 3.1e-8 * edge;
  const Index rows = static_cast<Index>(dims.y()) * dims.z();
  parallel_for(rows, threads, [&](Index row) {
    const int iy = static_cast<int>(row % dims.y());
    const int iz = static_cast<int>(row / dims.y());
    const Scalar cy = box.min.y() + edge * (iy + 0.5) + nudge_y;
    const Scalar cz = box.min.z() + edge * (iz + 0.5) + nudge_z;

    // x coordinates where the row line crosses the surface
    std::vector<Scalar> crossings;
    for (Index t = 0; t < mesh.triangle_count(); ++t) {
      const auto tri = mesh.triangles.row(t);
      const Vec3 a = mesh.vertices.row(tri[0]);
      const Vec3 b = mesh.vertices.row(tri[1]);
      const Vec3 c = mesh.vertices.row(tri[2]);
      // solve [b-a, c-a]_yz * (u,v) = (cy,cz) - a_yz
      const Scalar m00 = b.y() - a.y(), m01 = c.y() - a.y();
      const Scalar m10 = b.z() - a.z(), m11 = c.z() - a.z();
      const Scalar det = m00 * m11 - m01 * m10;
      if (std::abs(det) < 1e-30) continue;  // edge-on to x; neighbors cover it
      const Scalar ry = cy - a.y(), rz = cz - a.z();
      const Scalar u = (ry * m11 - rz * m01) / det;
      const Scalar v = (m00 * rz - m10 * ry) / det;
      if (u < 0 || v < 0 || u + v > 1) continue;
      crossings.push_back(a.x() + u * (b.x() - a.x()) + v * (c.x() - a.x()));
    }
    std::sort(crossings.begin(), crossings.end());

    for (int ix = 0; ix < dims.x(); ++ix) {
      const Index vi = hex.voxel_index(ix, iy, iz);
      if (hex.occupancy[vi]) continue;
      const Scalar cx = box.min.x() + edge * (ix + 0.5);
      const auto it = std::upper_bound(crossings.begin(), crossings.end(), cx);
      const size_t behind = static_cast<size_t>(it - crossings.begin());
      if (behind % 2 == 1) hex.occupancy[vi] = 1;
    }
  });

  // Pass 3: build deduplicated lattice nodes and element connectivity.
  const Index nnx = dims.x() + 1, nny = dims.y() + 1, nnz = dims.z() + 1;
  std::vector<Index> node_id(static_cast<size_t>(nnx * nny * nnz), -1);
  auto lattice = [&](int ix, int iy, int iz) { return ix + nnx * (iy + nny * iz); };

  // corner order: standard hex8 numbering, bottom face CCW then top
  static const int corner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                   {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};

  Index n_elem = 0;
  for (const auto occ : hex.occupancy) n_elem += occ;
  if (n_elem == 0) throw InputError("mesh is unvoxelizable: no occupied voxels");

  Index next_node = 0;
  for (int iz = 0; iz < dims.z(); ++iz)
    for (int iy = 0; iy < dims.y(); ++iy)
      for (int ix = 0; ix < dims.x(); ++ix) {
        if (!hex.occupancy[hex.voxel_index(ix, iy, iz)]) continue;
        for (const auto& c : corner) {
          const Index li = lattice(ix + c[0], iy + c[1], iz + c[2]);
          if (node_id[static_cast<size_t>(li)] < 0) node_id[static_cast<size_t>(li)] = 1;
        }
      }
  // number nodes in ascending lattice order for determinism
  for (Index li = 0; li < static_cast<Index>(node_id.size()); ++li)
    if (node_id[static_cast<size_t>(li)] > 0) node_id[static_cast<size_t>(li)] = next_node++;

  hex.nodes.resize(next_node, 3);
  for (int iz = 0; iz < nnz; ++iz)
    for (int iy = 0; iy < nny; ++iy)
      for (int ix = 0; ix < nnx; ++ix) {
        const Index id = node_id[static_cast<size_t>(lattice(ix, iy, iz))];
        if (id >= 0) hex.nodes.row(id) = (box.min + edge * Vec3(ix, iy, iz)).transpose();
      }

  hex.elements.resize(n_elem, 8);
  Index e = 0;
  for (int iz = 0; iz < dims.z(); ++iz)
    for (int iy = 0; iy < dims.y(); ++iy)
      for (int ix = 0; ix < dims.x(); ++ix) {
        if (!hex.occupancy[hex.voxel_index(ix, iy, iz)]) continue;
        for (int k = 0; k < 8; ++k)
          hex.elements(e, k) = static_cast<int>(
              node_id[static_cast<size_t>(lattice(ix + corner[k][0], iy + corner[k][1],
                                                  iz + corner[k][2]))]);
        ++e;
      }
  return hex;
}

SurfaceToHexMap map_surface_to_hex(const TriangleMesh& mesh, const HexMesh& hex) {
  if (hex.node_count() < 4) throw InputError("hex mesh has fewer than 4 nodes");

  SurfaceToHexMap map;
  map.node_indices.resize(mesh.vertex_count(), 4);

  for (Index v = 0; v < mesh.vertex_count(); ++v) {
    const Vec3 p = mesh.vertices.row(v);
    // keep the 4 best (squared distance, node index) pairs
    std::array<std::pair<Scalar, Index>, 4> best;
    best.fill({std::numeric_limits<Scalar>::max(), -1});
    for (Index n = 0; n < hex.node_count(); ++n) {
      const Scalar d2 = (hex.nodes.row(n).transpose() - p).squaredNorm();
      const std::pair<Scalar, Index> cand{d2, n};
      if (cand < best[3]) {
        best[3] = cand;
        for (int k = 3; k > 0 && best[k] < best[k - 1]; --k) std::swap(best[k], best[k - 1]);
      }
    }
    for (int k = 0; k < 4; ++k) map.node_indices(v, k) = static_cast<int>(best[k].second);
  }
  return map;
}

}  // namespace objf
