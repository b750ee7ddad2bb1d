#include "s3min/mesh_io.hpp"

#include "s3min/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace s3min {

namespace {

std::string fmt12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct Frame {
  Vec4 b1, b2, b3;  // orthonormal basis of the pole's complement
};

Frame pole_frame(const Vec4& pole) {
  Frame f;
  Vec4 basis[3];
  int found = 0;
  for (int axis = 0; axis < 4 && found < 3; ++axis) {
    Vec4 e = Vec4::Zero();
    e[axis] = 1.0;
    Vec4 w = e - pole.dot(e) * pole;
    for (int k = 0; k < found; ++k) w -= basis[k].dot(w) * basis[k];
    double n = w.norm();
    if (n > 1e-6) basis[found++] = w / n;
  }
  if (found != 3) throw Error("degenerate projection pole");
  f.b1 = basis[0];
  f.b2 = basis[1];
  f.b3 = basis[2];
  return f;
}

}  // namespace

void write_mesh(const std::string& path, const std::vector<Vec4>& vertices,
                const std::vector<std::array<int, 3>>& triangles, MeshFormat format,
                Projection projection, const Vec4& pole) {
  if (vertices.empty() || triangles.empty())
    throw IOFailure("refusing to write an empty mesh");

  Vec4 p = pole.normalized();
  Frame frame{};
  if (projection == Projection::stereographic) {
    double clearance_cos = std::cos(1e-3);
    for (const auto& v : vertices)
      if (v.normalized().dot(p) > clearance_cos)
        throw PoleOnSurface("projection pole is closer than 1e-3 to a vertex");
    frame = pole_frame(p);
  }

  auto coords = [&](const Vec4& v) -> std::array<double, 4> {
    if (projection == Projection::raw) return {v[0], v[1], v[2], v[3]};
    Vec4 u = v.normalized();
    double denom = 1.0 - u.dot(p);
    return {u.dot(frame.b1) / denom, u.dot(frame.b2) / denom, u.dot(frame.b3) / denom, 0.0};
  };

  std::ofstream out(path);
  if (!out) throw IOFailure("cannot open " + path + " for writing");

  std::string header_comment;
  if (projection == Projection::stereographic) {
    header_comment = "stereographic projection from pole (" + fmt12(p[0]) + ", " + fmt12(p[1]) +
                     ", " + fmt12(p[2]) + ", " + fmt12(p[3]) +
                     "): y_i = (x . b_i) / (1 - x . pole), b_i the coordinate-axis "
                     "Gram-Schmidt frame of the pole's orthogonal complement";
  } else {
    header_comment = "raw mode: four ambient coordinates per vertex";
  }

  if (format == MeshFormat::obj) {
    out << "# " << header_comment << "\n";
    for (const auto& v : vertices) {
      auto c = coords(v);
      out << "v " << fmt12(c[0]) << " " << fmt12(c[1]) << " " << fmt12(c[2]);
      if (projection == Projection::raw) out << " " << fmt12(c[3]);
      out << "\n";
    }
    for (const auto& t : triangles)
      out << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  } else {
    out << "ply\nformat ascii 1.0\n";
    out << "comment " << header_comment << "\n";
    out << "element vertex " << vertices.size() << "\n";
    out << "property double x\nproperty double y\nproperty double z\n";
    if (projection == Projection::raw) out << "property double w\n";
    out << "element face " << triangles.size() << "\n";
    out << "property list uchar int vertex_indices\n";
    out << "end_header\n";
    for (const auto& v : vertices) {
      auto c = coords(v);
      out << fmt12(c[0]) << " " << fmt12(c[1]) << " " << fmt12(c[2]);
      if (projection == Projection::raw) out << " " << fmt12(c[3]);
      out << "\n";
    }
    for (const auto& t : triangles) out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  if (!out) throw IOFailure("write to " + path + " failed");
}

void write_mesh(const std::string& path, const DiscMesh& mesh, MeshFormat format,
                Projection projection, const Vec4& pole) {
  write_mesh(path, mesh.vertices, mesh.triangles, format, projection, pole);
}

void write_mesh(const std::string& path, const AssembledSurface& surface, MeshFormat format,
                Projection projection, const Vec4& pole) {
  write_mesh(path, surface.vertices, surface.triangles, format, projection, pole);
}

MeshData read_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOFailure("cannot open " + path);
  std::string first;
  std::getline(in, first);
  in.seekg(0);

  MeshData data;
  if (first.rfind("ply", 0) == 0) {
    std::string line;
    std::size_t nv = 0, nf = 0;
    int vertex_props = 0;
    bool in_vertex_element = false;
    while (std::getline(in, line)) {
      std::istringstream ss(line);
      std::string tok;
      ss >> tok;
      if (tok == "element") {
        std::string what;
        std::size_t count;
        ss >> what >> count;
        in_vertex_element = (what == "vertex");
        if (what == "vertex") nv = count;
        if (what == "face") nf = count;
      } else if (tok == "property" && in_vertex_element) {
        std::string type;
        ss >> type;
        if (type != "list") ++vertex_props;
      } else if (tok == "end_header") {
        break;
      }
    }
    for (std::size_t i = 0; i < nv; ++i) {
      Vec4 v = Vec4::Zero();
      for (int k = 0; k < vertex_props; ++k) {
        double x;
        in >> x;
        if (k < 4) v[k] = x;
      }
      data.vertices.push_back(v);
    }
    for (std::size_t i = 0; i < nf; ++i) {
      int n, a, b, c;
      in >> n >> a >> b >> c;
      if (n != 3) throw IOFailure("non-triangular face in PLY");
      data.triangles.push_back({a, b, c});
    }
  } else {
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ss(line);
      std::string tok;
      ss >> tok;
      if (tok == "v") {
        Vec4 v = Vec4::Zero();
        ss >> v[0] >> v[1] >> v[2];
        if (!(ss >> v[3])) v[3] = 0.0;
        data.vertices.push_back(v);
      } else if (tok == "f") {
        std::array<int, 3> t{};
        for (int k = 0; k < 3; ++k) {
          std::string field;
          ss >> field;
          t[k] = std::stoi(field.substr(0, field.find('/'))) - 1;
        }
        data.triangles.push_back(t);
      }
    }
  }
  if (data.vertices.empty() || data.triangles.empty())
    throw IOFailure("no mesh content in " + path);
  return data;
}

}  // namespace s3min
