#pragma once

#include "s3min/assemble.hpp"
#include "s3min/plateau.hpp"

#include <string>
#include <vector>

namespace s3min {

enum class MeshFormat { obj, ply };

enum class Projection {
  stereographic,  // project from a pole onto R^3
  raw,            // write all four coordinates
};

struct MeshData {
  std::vector<Vec4> vertices;  // last coordinate 0 when read from 3d files
  std::vector<std::array<int, 3>> triangles;
};

/// Writes an ASCII mesh file, vertices to 12 significant digits, newline
/// terminated.  In stereographic mode the pole must keep distance > 1e-3
/// from every vertex (PoleOnSurface otherwise); the projection convention
/// is documented in the file header.
void write_mesh(const std::string& path, const std::vector<Vec4>& vertices,
                const std::vector<std::array<int, 3>>& triangles, MeshFormat format,
                Projection projection, const Vec4& pole = Vec4(0, 0, 0, 1));

void write_mesh(const std::string& path, const DiscMesh& mesh, MeshFormat format,
                Projection projection, const Vec4& pole = Vec4(0, 0, 0, 1));
void write_mesh(const std::string& path, const AssembledSurface& surface, MeshFormat format,
                Projection projection, const Vec4& pole = Vec4(0, 0, 0, 1));

/// Reads back an ASCII OBJ or PLY written by write_mesh (format from the
/// file content).  Raw-mode files restore all four coordinates.
MeshData read_mesh(const std::string& path);

}  // namespace s3min
