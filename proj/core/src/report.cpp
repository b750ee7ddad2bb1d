#include "s3min/report.hpp"

namespace s3min {

Json to_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json to_json(const Vec4& v) { return Json::array({v[0], v[1], v[2], v[3]}); }

namespace {

const char* circle_set_name(CircleSet s) {
  switch (s) {
    case CircleSet::acol: return "acol";
    case CircleSet::rcol: return "rcol";
    case CircleSet::scaf: return "scaf";
  }
  return "?";
}

}  // namespace

Json configuration_summary(const Configuration& cfg) {
  Json j;
  j["N"] = cfg.N;
  j["full"] = cfg.full;
  j["counts"] = {{"acol", cfg.acol.size()},
                 {"rcol", cfg.rcol.size()},
                 {"scaf", cfg.scaf.size()},
                 {"points_per_circle", cfg.ptcol.empty() ? 0 : cfg.ptcol[0].size()},
                 {"prisms", cfg.prisms.size()},
                 {"shared_edges", cfg.shared_edges.size()}};

  Json acol = Json::array();
  for (const auto& c : cfg.acol)
    acol.push_back({{"u", to_json(c.u())}, {"v", to_json(c.v())}});
  j["acol"] = acol;

  Json rcol = Json::array();
  for (const auto& c : cfg.rcol) {
    Vec3 image = hopf_project(Vec4(c.point(0.0)));
    rcol.push_back(
        {{"u", to_json(c.u())}, {"v", to_json(c.v())}, {"hopf_image", to_json(image)}});
  }
  j["rcol"] = rcol;

  Json scaf = Json::array();
  for (std::size_t i = 0; i < cfg.scaf.size(); ++i)
    scaf.push_back({{"torus", cfg.scaf_torus[i]},
                    {"u", to_json(cfg.scaf[i].u())},
                    {"v", to_json(cfg.scaf[i].v())}});
  j["scaf"] = scaf;

  if (cfg.full) {
    Json prisms = Json::array();
    for (const auto& p : cfg.prisms) {
      Json edges = Json::array();
      for (const auto& e : p.edges)
        edges.push_back({{"set", circle_set_name(e.circle.set)},
                         {"index", e.circle.index},
                         {"shared_edge", e.shared_edge}});
      prisms.push_back({{"axis_circle", p.axis_circle},
                        {"j", p.j},
                        {"l", p.l},
                        {"center", to_json(p.center.vec())},
                        {"edges", edges}});
    }
    j["prisms"] = prisms;

    Json edges = Json::array();
    for (const auto& e : cfg.shared_edges)
      edges.push_back({{"set", circle_set_name(e.circle.set)},
                       {"index", e.circle.index},
                       {"prisms", e.prisms}});
    j["shared_edges"] = edges;
  }
  return j;
}

}  // namespace s3min
