#include "objf/mesh.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace objf {

namespace {

bool parse_double(std::string_view tok, Scalar& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

[[noreturn]] void fail(const std::string& label, Index line, const std::string& msg) {
  std::ostringstream os;
  os << label << ":" << line << ": " << msg;
  throw InputError(os.str());
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Vertex index of an `f` token ("7", "7/1", "7//2", "7/1/2").
long face_vertex_index(std::string_view tok, const std::string& label, Index line) {
  const size_t slash = tok.find('/');
  std::string_view head = slash == std::string_view::npos ? tok : tok.substr(0, slash);
  long idx = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), idx);
  if (ec != std::errc() || ptr != head.data() + head.size())
    fail(label, line, "malformed face index '" + std::string(tok) + "'");
  if (idx < 0) fail(label, line, "negative face indices are not supported");
  if (idx == 0) fail(label, line, "face index 0 is invalid (OBJ indices are 1-based)");
  return idx;
}

}  // namespace

TriangleMesh parse_obj(const std::string& text, const std::string& label) {
  std::vector<Vec3> verts;
  std::vector<Vec3> cols;
  std::vector<Eigen::Vector3i> tris;
  bool any_color = false;

  std::istringstream in(text);
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string_view rec = toks[0];
    if (rec == "v") {
      if (toks.size() != 4 && toks.size() != 7)
        fail(label, line_no, "vertex record needs 3 coordinates (optionally followed by RGB)");
      Vec3 p;
      for (int a = 0; a < 3; ++a)
        if (!parse_double(toks[1 + a], p[a]))
          fail(label, line_no, "malformed vertex coordinate '" + std::string(toks[1 + a]) + "'");
      verts.push_back(p);
      Vec3 c = Vec3::Zero();
      if (toks.size() == 7) {
        for (int a = 0; a < 3; ++a)
          if (!parse_double(toks[4 + a], c[a]))
            fail(label, line_no, "malformed vertex color '" + std::string(toks[4 + a]) + "'");
        any_color = true;
      }
      cols.push_back(c);
    } else if (rec == "f") {
      if (toks.size() < 4) fail(label, line_no, "face record needs at least 3 vertices");
      std::vector<long> idx;
      idx.reserve(toks.size() - 1);
      for (size_t t = 1; t < toks.size(); ++t) {
        long i = face_vertex_index(toks[t], label, line_no);
        if (i > static_cast<long>(verts.size())) {
          std::ostringstream os;
          os << "face references vertex " << i << " of " << verts.size();
          fail(label, line_no, os.str());
        }
        idx.push_back(i - 1);
      }
      for (size_t t = 1; t + 1 < idx.size(); ++t)
        tris.push_back(Eigen::Vector3i(static_cast<int>(idx[0]), static_cast<int>(idx[t]),
                                       static_cast<int>(idx[t + 1])));
    }
    // vn, vt, o, g, s, usemtl, mtllib: ignored
  }

  TriangleMesh mesh;
  mesh.vertices.resize(static_cast<Index>(verts.size()), 3);
  for (size_t i = 0; i < verts.size(); ++i) mesh.vertices.row(static_cast<Index>(i)) = verts[i];
  mesh.triangles.resize(static_cast<Index>(tris.size()), 3);
  for (size_t i = 0; i < tris.size(); ++i) mesh.triangles.row(static_cast<Index>(i)) = tris[i];
  if (any_color) {
    mesh.colors.resize(static_cast<Index>(cols.size()), 3);
    for (size_t i = 0; i < cols.size(); ++i) mesh.colors.row(static_cast<Index>(i)) = cols[i];
  }
  compute_vertex_normals(mesh);
  return mesh;
}

TriangleMesh load_mesh(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open mesh file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_obj(buf.str(), path);
}

void compute_vertex_normals(TriangleMesh& mesh) {
  mesh.normals = MatX3::Zero(mesh.vertex_count(), 3);
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    const auto tri = mesh.triangles.row(t);
    const Vec3 a = mesh.vertices.row(tri[0]);
    const Vec3 b = mesh.vertices.row(tri[1]);
    const Vec3 c = mesh.vertices.row(tri[2]);
    const Vec3 n = (b - a).cross(c - a); // magnitude = 2 * area
    for (int k = 0; k < 3; ++k) mesh.normals.row(tri[k]) += n.transpose();
  }
  for (Index v = 0; v < mesh.vertex_count(); ++v) {
    const Scalar len = mesh.normals.row(v).norm();
    if (len > 1e-20)
      mesh.normals.row(v) /= len;
    else
      mesh.normals.row(v).setZero();
  }
}

void validate_mesh(const TriangleMesh& mesh) {
  if (mesh.vertex_count() == 0) throw InputError("mesh has no vertices");
  if (mesh.triangle_count() == 0) throw InputError("mesh has no triangles");
  const int nv = static_cast<int>(mesh.vertex_count());
  std::vector<bool> referenced(static_cast<size_t>(nv), false);
  for (Index t = 0; t < mesh.triangle_count(); ++t)
    for (int k = 0; k < 3; ++k) {
      const int idx = mesh.triangles(t, k);
      if (idx < 0 || idx >= nv) throw InputError("triangle index out of range");
      referenced[static_cast<size_t>(idx)] = true;
    }
  for (Index v = 0; v < mesh.vertex_count(); ++v) {
    if (!referenced[static_cast<size_t>(v)]) continue;
    if (std::abs(mesh.normals.row(v).norm() - 1.0) > 1e-6)
      throw InputError("vertex normal is not unit length");
  }
  if (!mesh_aabb(mesh).valid()) throw InputError("mesh bounding box has zero extent");
}

Aabb mesh_aabb(const TriangleMesh& mesh) {
  Aabb box;
  for (Index v = 0; v < mesh.vertex_count(); ++v) box.expand(mesh.vertices.row(v).transpose());
  return box;
}

Scalar mesh_volume(const TriangleMesh& mesh) {
  Scalar six_v = 0;
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    const auto tri = mesh.triangles.row(t);
    const Vec3 a = mesh.vertices.row(tri[0]);
    const Vec3 b = mesh.vertices.row(tri[1]);
    const Vec3 c = mesh.vertices.row(tri[2]);
    six_v += a.dot(b.cross(c));
  }
  return six_v / 6.0;
}

Scalar mesh_area(const TriangleMesh& mesh) {
  Scalar area = 0;
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    const auto tri = mesh.triangles.row(t);
    const Vec3 a = mesh.vertices.row(tri[0]);
    const Vec3 b = mesh.vertices.row(tri[1]);
    const Vec3 c = mesh.vertices.row(tri[2]);
    area += 0.5 * (b - a).cross(c - a).norm();
  }
  return area;
}

}  // namespace objf
