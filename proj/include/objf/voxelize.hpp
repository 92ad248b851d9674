// voxelize.hpp
//
// Conversion of a closed triangle mesh into a regular hexahedral voxel
// mesh, plus the surface-vertex -> nearest-4-hex-nodes map used when
// exciting modes at surface locations.

#pragma once

#include "objf/mesh.hpp"
#include "objf/types.hpp"

#include <vector>

namespace objf {

struct HexMesh {
  MatX3 nodes;            // lattice node coordinates, meters
  MatX8i elements;        // one row per occupied voxel, 8 node indices
  Scalar voxel_edge = 0;  // meters
  Vec3 grid_origin = Vec3::Zero();  // AABB min corner of the source mesh
  Vec3i grid_dims = Vec3i::Zero();  // voxels per axis
  std::vector<std::uint8_t> occupancy;  // grid_dims.prod() flags, x-fastest

  Index node_count() const { return nodes.rows(); }
  Index element_count() const { return elements.rows(); }
  Index voxel_index(int ix, int iy, int iz) const {
    return ix + static_cast<Index>(grid_dims.x()) * (iy + static_cast<Index>(grid_dims.y()) * iz);
  }
};

// 4 nearest hex nodes per surface vertex, each weighted 1/4. Ties are
// broken by ascending node index.
struct SurfaceToHexMap {
  MatX4i node_indices;  // one row per surface vertex
  static constexpr Scalar weight = 0.25;

  Index vertex_count() const { return node_indices.rows(); }
};

// Voxelize on a cubic lattice anchored at the mesh AABB min corner, with
// `resolution` voxels along the longest axis. A voxel is occupied when it
// intersects the surface or its center lies inside the solid (parity ray
// cast along +x). Throws InputError when nothing is occupied.
HexMesh voxelize(const TriangleMesh& mesh, int resolution, int threads = 1);

SurfaceToHexMap map_surface_to_hex(const TriangleMesh& mesh, const HexMesh& hex);

// Exact triangle / axis-aligned-box overlap (separating axis test).
bool triangle_box_overlap(const Vec3& box_center, const Vec3& box_half,
                          const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace objf
