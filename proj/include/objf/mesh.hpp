// mesh.hpp
//
// Triangle surface meshes: OBJ loading, area-weighted vertex normals,
// and exact volume/area via the divergence theorem.

#pragma once

#include "objf/types.hpp"

#include <string>

namespace objf {

struct TriangleMesh {
  MatX3 vertices;   // meters, one row per vertex
  MatX3i triangles; // 0-based vertex indices
  MatX3 normals;    // unit vertex normals (zero rows for unreferenced vertices)
  MatX3 colors;     // optional per-vertex RGB in [0,1]; 0 rows when absent

  Index vertex_count() const { return vertices.rows(); }
  Index triangle_count() const { return triangles.rows(); }
  bool has_colors() const { return colors.rows() == vertices.rows() && colors.rows() > 0; }
};

// Parse an ASCII OBJ file. `v` and `f` records are honored (vertex colors
// on `v` lines are kept when present); `vn`/`vt` and grouping records are
// ignored. Polygon faces are fan-triangulated. Indices are 1-based;
// negative (relative) indices are rejected. Errors carry the line number.
TriangleMesh load_mesh(const std::string& path);

// Same parser over an in-memory buffer; `label` names the source in errors.
TriangleMesh parse_obj(const std::string& text, const std::string& label = "<obj>");

// Area-weighted vertex normals. Vertices with no incident area get a zero
// normal; everything else is unit length.
void compute_vertex_normals(TriangleMesh& mesh);

// Index ranges, unit normals on referenced vertices, positive AABB extent.
// Throws InputError on violation.
void validate_mesh(const TriangleMesh& mesh);

Aabb mesh_aabb(const TriangleMesh& mesh);

// Signed volume via the divergence theorem; exact for watertight meshes
// with outward orientation.
Scalar mesh_volume(const TriangleMesh& mesh);

Scalar mesh_area(const TriangleMesh& mesh);

}  // namespace objf
