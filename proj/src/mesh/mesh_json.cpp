#include <json.hpp>

#include "maxwell/mesh.hpp"

namespace maxwell {

using nlohmann::json;

namespace {

json vec(const Vec2& v) { return json::array({v.x, v.y}); }

Vec2 to_vec(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string mesh_to_json(const Mesh& mesh) {
  json doc;
  doc["format"] = 1;
  json nodes = json::array();
  for (const Vec2& p : mesh.nodes) nodes.push_back(vec(p));
  doc["nodes"] = std::move(nodes);
  json cells = json::array();
  for (const Cell& c : mesh.cells) {
    cells.push_back({{"kind", std::string(to_string(c.kind))},
                     {"nodes", c.nodes},
                     {"material", c.material}});
  }
  doc["cells"] = std::move(cells);
  json boundary = json::array();
  for (const BoundarySide& b : mesh.boundary) boundary.push_back({b.cell, b.side, b.curve});
  doc["boundary"] = std::move(boundary);
  json seams = json::array();
  for (const SeamPair& s : mesh.seams) seams.push_back({s.a, s.b});
  doc["seams"] = std::move(seams);
  json curves = json::array();
  for (const BoundaryCurve& cv : mesh.curves) {
    if (cv.type == BoundaryCurve::Type::line) {
      curves.push_back({{"type", "line"}, {"from", vec(cv.from)}, {"to", vec(cv.to)}});
    } else {
      curves.push_back({{"type", "arc"},
                        {"center", vec(cv.center)},
                        {"radius", cv.radius},
                        {"theta0", cv.theta0},
                        {"theta1", cv.theta1},
                        {"outward", cv.outward}});
    }
  }
  doc["curves"] = std::move(curves);
  return doc.dump();
}

Mesh mesh_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("mesh JSON: ") + e.what());
  }
  Mesh mesh;
  try {
    if (doc.value("format", 0) != 1) throw InputError("mesh JSON: unsupported format version");
    for (const json& p : doc.at("nodes")) mesh.nodes.push_back(to_vec(p));
    for (const json& c : doc.at("cells")) {
      Cell cell;
      cell.kind = parse_kind(c.at("kind").get<std::string>());
      cell.nodes = c.at("nodes").get<std::vector<int>>();
      cell.material = c.value("material", 1);
      mesh.cells.push_back(std::move(cell));
    }
    if (doc.contains("curves")) {
      for (const json& c : doc["curves"]) {
        BoundaryCurve cv;
        const std::string type = c.at("type").get<std::string>();
        if (type == "line") {
          cv.type = BoundaryCurve::Type::line;
          cv.from = to_vec(c.at("from"));
          cv.to = to_vec(c.at("to"));
        } else if (type == "arc") {
          cv.type = BoundaryCurve::Type::arc;
          cv.center = to_vec(c.at("center"));
          cv.radius = c.at("radius").get<double>();
          cv.theta0 = c.at("theta0").get<double>();
          cv.theta1 = c.at("theta1").get<double>();
          cv.outward = c.value("outward", 1);
        } else {
          throw InputError("mesh JSON: unknown curve type '" + type + "'");
        }
        mesh.curves.push_back(cv);
      }
    }
    if (doc.contains("seams")) {
      for (const json& s : doc["seams"]) mesh.seams.push_back({s.at(0).get<int>(), s.at(1).get<int>()});
    }
    if (doc.contains("boundary")) {
      for (const json& b : doc["boundary"]) {
        if (!b.is_array() || b.size() < 2) throw InputError("mesh JSON: bad boundary entry");
        BoundarySide side{b[0].get<int>(), b[1].get<int>(), -1};
        if (b.size() > 2) side.curve = b[2].get<int>();
        mesh.boundary.push_back(side);
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("mesh JSON: ") + e.what());
  }
  mesh.validate();
  for (BoundarySide& b : mesh.boundary) {
    if (b.curve < 0) b.curve = classify_side(mesh, b.cell, b.side);
  }
  return mesh;
}

}  // namespace maxwell
