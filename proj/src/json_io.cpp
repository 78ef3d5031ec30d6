#include "pentaplex/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pentaplex {

using ordered_json = nlohmann::ordered_json;

static std::vector<EdgeEndRef> canonical_rot(const std::vector<EdgeEndRef>& rot) {
  if (rot.size() <= 1) return rot;
  std::size_t best = 0;
  for (std::size_t s = 1; s < rot.size(); ++s) {
    for (std::size_t k = 0; k < rot.size(); ++k) {
      EdgeEndRef a = rot[(s + k) % rot.size()];
      EdgeEndRef b = rot[(best + k) % rot.size()];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  std::vector<EdgeEndRef> out(rot.size());
  for (std::size_t k = 0; k < rot.size(); ++k) out[k] = rot[(best + k) % rot.size()];
  return out;
}

std::string to_json(const PentComplex& c) {
  ordered_json root;
  auto& vs = root["vertices"] = ordered_json::array();
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertex_count()); ++v) {
    const auto& vr = c.vertices[v];
    ordered_json jv;
    jv["id"] = v;
    jv["rot"] = canonical_rot(vr.rot);
    jv["boundary"] = vr.boundary;
    if (vr.mark_degree >= 0) jv["mark_degree"] = vr.mark_degree;
    if (!vr.mark_decoration.empty()) {
      ordered_json seq = ordered_json::array();
      for (Label l : vr.mark_decoration) seq.push_back(l.value());
      jv["mark_decoration"] = seq;
    }
    vs.push_back(std::move(jv));
  }
  auto& es = root["edges"] = ordered_json::array();
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edge_count()); ++e) {
    const auto& er = c.edges[e];
    ordered_json je;
    je["id"] = e;
    je["v"] = {er.v[0], er.v[1]};
    ordered_json jf = ordered_json::array();
    for (int side = 0; side < 2; ++side)
      if (er.face[side] != kNone) jf.push_back(er.face[side]);
    je["faces"] = std::move(jf);
    es.push_back(std::move(je));
  }
  auto& fs = root["faces"] = ordered_json::array();
  for (FaceId f = 0; f < static_cast<FaceId>(c.face_count()); ++f) {
    ordered_json jfc = ordered_json::array();
    int start = c.label1_index(f);
    for (int k = 0; k < 5; ++k) {
      const Corner& corner = c.faces[f].corner[(start + k) % 5];
      jfc.push_back({{"v", corner.v}, {"label", corner.label.value()}});
    }
    fs.push_back({{"id", f}, {"corners", std::move(jfc)}});
  }
  return root.dump(1) + "\n";
}

PentComplex from_json(const std::string& bytes) {
  ordered_json root;
  try {
    root = ordered_json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("json parse error: ") + e.what());
  }
  PentComplex c;
  try {
    const auto& vs = root.at("vertices");
    const auto& es = root.at("edges");
    const auto& fs = root.at("faces");
    c.vertices.resize(vs.size());
    c.edges.resize(es.size());
    c.faces.resize(fs.size());
    for (const auto& jv : vs) {
      VertexId id = jv.at("id").get<VertexId>();
      if (id < 0 || id >= static_cast<VertexId>(c.vertices.size()))
        throw Error(Errc::parse_error, "vertex id out of range");
      auto& vr = c.vertices[id];
      for (const auto& r : jv.at("rot")) vr.rot.push_back(r.get<EdgeEndRef>());
      if (jv.contains("mark_degree")) vr.mark_degree = jv["mark_degree"].get<std::int16_t>();
      if (jv.contains("mark_decoration"))
        for (const auto& l : jv["mark_decoration"]) vr.mark_decoration.push_back(Label(l.get<int>()));
      vr.mark_decoration = canonical_rotation(std::move(vr.mark_decoration));
    }
    for (const auto& je : es) {
      EdgeId id = je.at("id").get<EdgeId>();
      if (id < 0 || id >= static_cast<EdgeId>(c.edges.size()))
        throw Error(Errc::parse_error, "edge id out of range");
      auto& er = c.edges[id];
      er.v = {je.at("v").at(0).get<VertexId>(), je.at("v").at(1).get<VertexId>()};
      if (er.v[0] < 0 || er.v[1] < 0 || er.v[0] >= static_cast<VertexId>(c.vertices.size()) ||
          er.v[1] >= static_cast<VertexId>(c.vertices.size()))
        throw Error(Errc::parse_error, "edge endpoint out of range");
    }
    for (const auto& jf : fs) {
      FaceId id = jf.at("id").get<FaceId>();
      if (id < 0 || id >= static_cast<FaceId>(c.faces.size()))
        throw Error(Errc::parse_error, "face id out of range");
      const auto& corners = jf.at("corners");
      if (corners.size() != 5) throw Error(Errc::parse_error, "face must have 5 corners");
      for (int k = 0; k < 5; ++k) {
        VertexId v = corners.at(k).at("v").get<VertexId>();
        int label = corners.at(k).at("label").get<int>();
        if (v < 0 || v >= static_cast<VertexId>(c.vertices.size()))
          throw Error(Errc::parse_error, "corner vertex out of range");
        if (label < 1 || label > 5) throw Error(Errc::parse_error, "corner label out of range");
        c.faces[id].corner[k] = Corner{v, Label(label)};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("json structure error: ") + e.what());
  }
  // Edge face sides are derived from the face corner orders, not trusted.
  std::map<std::pair<VertexId, VertexId>, EdgeId> lookup;
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edge_count()); ++e) {
    auto key = std::minmax(c.edges[e].v[0], c.edges[e].v[1]);
    lookup[{key.first, key.second}] = e;
  }
  for (FaceId f = 0; f < static_cast<FaceId>(c.face_count()); ++f) {
    for (int k = 0; k < 5; ++k) {
      VertexId a = c.faces[f].corner[k].v;
      VertexId b = c.faces[f].corner[(k + 1) % 5].v;
      auto key = std::minmax(a, b);
      auto it = lookup.find({key.first, key.second});
      if (it == lookup.end()) throw Error(Errc::parse_error, "face side without an edge");
      auto& er = c.edges[it->second];
      int side = er.v[0] == a ? 0 : 1;
      if (er.face[side] != kNone && er.face[side] != f)
        throw Error(Errc::parse_error, "edge side claimed by two faces");
      er.face[side] = f;
    }
  }
  for (auto& vr : c.vertices) {
    bool boundary = false;
    for (EdgeEndRef r : vr.rot) {
      EdgeId e = edge_of(r);
      if (e < 0 || e >= static_cast<EdgeId>(c.edge_count()))
        throw Error(Errc::parse_error, "rotation references unknown edge");
      if (c.is_boundary_edge(e)) boundary = true;
    }
    vr.boundary = boundary;
  }
  return c;
}

void save_complex(const PentComplex& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_input, "cannot open " + path + " for writing");
  out << to_json(c);
}

PentComplex load_complex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace pentaplex
