#include "spherewright/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "spherewright/errors.hpp"

namespace spherewright {

using nlohmann::json;

std::string to_string(DocFormat f) {
  return f == DocFormat::Json ? "json" : "facets";
}

namespace {

Variant parse_variant(const std::string& s, int line = 0) {
  if (s == "literal") return Variant::Literal;
  if (s == "extended") return Variant::Extended;
  throw ParseError("unknown variant '" + s + "'", line);
}

std::vector<VertexId> cell_vertex_union(const SphereDocument& doc) {
  std::set<VertexId> vs;
  for (const Simplex& s : doc.simplex_cells) {
    vs.insert(s.vertices().begin(), s.vertices().end());
  }
  for (const BipyramidCell& b : doc.bipyramid_cells) {
    const Simplex v = b.vertex_set();
    vs.insert(v.vertices().begin(), v.vertices().end());
  }
  return {vs.begin(), vs.end()};
}

json simplex_json(const Simplex& s) {
  return json(s.vertices());
}

Simplex json_simplex(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of labels");
  std::vector<VertexId> vs;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw ParseError(what + " must contain integer labels");
    vs.push_back(e.get<VertexId>());
  }
  try {
    return Simplex(std::move(vs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string to_json_text(const SphereDocument& doc) {
  json cells = json::array();
  for (const Simplex& s : doc.simplex_cells) {
    cells.push_back({{"type", "simplex"}, {"vertices", simplex_json(s)}});
  }
  for (const BipyramidCell& b : doc.bipyramid_cells) {
    cells.push_back(
        {{"type", "bipyramid"}, {"apexes", simplex_json(b.apexes)}, {"equator", simplex_json(b.equator)}});
  }
  json apexes = json::object();
  for (const auto& [a, q] : doc.apexes) apexes[std::to_string(a)] = q;
  const json out = {
      {"n", doc.n},
      {"variant", to_string(doc.variant)},
      {"vertices", doc.vertices},
      {"apexes", apexes},
      {"cells", cells},
  };
  return out.dump(2) + "\n";
}

SphereDocument from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, static_cast<int>(e.byte));
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  SphereDocument doc;
  try {
    doc.n = j.at("n").get<int>();
    doc.variant = parse_variant(j.at("variant").get<std::string>());
    for (const auto& v : j.at("vertices")) doc.vertices.push_back(v.get<VertexId>());
    for (const auto& [key, value] : j.at("apexes").items()) {
      doc.apexes[std::stoi(key)] = value.get<VertexId>();
    }
    for (const auto& cell : j.at("cells")) {
      const std::string type = cell.at("type").get<std::string>();
      if (type == "simplex") {
        doc.simplex_cells.push_back(json_simplex(cell.at("vertices"), "simplex cell"));
      } else if (type == "bipyramid") {
        BipyramidCell b;
        b.apexes = json_simplex(cell.at("apexes"), "bipyramid apexes");
        b.equator = json_simplex(cell.at("equator"), "bipyramid equator");
        if (b.apexes.size() != 2 || b.equator.size() != 3) {
          throw ParseError("bipyramid needs 2 apexes and a 3-vertex equator");
        }
        if (!b.apexes.intersection(b.equator).empty()) {
          throw ParseError("bipyramid apexes meet its equator");
        }
        doc.bipyramid_cells.push_back(std::move(b));
      } else {
        throw ParseError("unknown cell type '" + type + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  std::sort(doc.simplex_cells.begin(), doc.simplex_cells.end());
  std::sort(doc.bipyramid_cells.begin(), doc.bipyramid_cells.end());
  return doc;
}

std::string to_facets_text(const SphereDocument& doc) {
  std::ostringstream os;
  os << "# meta n=" << doc.n << " variant=" << to_string(doc.variant) << " apexes=";
  bool first = true;
  for (const auto& [a, q] : doc.apexes) {
    if (!first) os << ',';
    os << a << ':' << q;
    first = false;
  }
  os << '\n';
  for (const Simplex& s : doc.simplex_cells) {
    os << 'S';
    for (VertexId v : s.vertices()) os << ' ' << v;
    os << '\n';
  }
  for (const BipyramidCell& b : doc.bipyramid_cells) {
    os << 'B';
    for (VertexId v : b.apexes.vertices()) os << ' ' << v;
    os << " |";
    for (VertexId v : b.equator.vertices()) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

SphereDocument from_facets_text(const std::string& text) {
  SphereDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool saw_meta = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;  // blank
    if (head == "#") {
      std::string tag;
      line >> tag;
      if (tag != "meta") continue;  // plain comment
      saw_meta = true;
      std::string kv;
      while (line >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParseError("meta entries are key=value", line_no);
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        try {
          if (key == "n") {
            doc.n = std::stoi(value);
          } else if (key == "variant") {
            doc.variant = parse_variant(value, line_no);
          } else if (key == "apexes") {
            std::istringstream pairs(value);
            std::string pair;
            while (std::getline(pairs, pair, ',')) {
              if (pair.empty()) continue;
              const auto colon = pair.find(':');
              if (colon == std::string::npos) {
                throw ParseError("apex entries are center:label", line_no);
              }
              doc.apexes[std::stoi(pair.substr(0, colon))] = std::stoi(pair.substr(colon + 1));
            }
          } else {
            throw ParseError("unknown meta key '" + key + "'", line_no);
          }
        } catch (const std::logic_error&) {
          throw ParseError("bad meta value '" + kv + "'", line_no);
        }
      }
      continue;
    }
    auto read_labels = [&](int count) {
      std::vector<VertexId> vs;
      for (int i = 0; i < count; ++i) {
        VertexId v;
        if (!(line >> v)) {
          const int col = std::max(0, static_cast<int>(line.tellg()));
          throw ParseError("expected " + std::to_string(count) + " labels", line_no, col);
        }
        vs.push_back(v);
      }
      return vs;
    };
    try {
      if (head == "S") {
        doc.simplex_cells.emplace_back(read_labels(4));
      } else if (head == "B") {
        BipyramidCell b;
        b.apexes = Simplex(read_labels(2));
        std::string bar;
        if (!(line >> bar) || bar != "|") throw ParseError("expected '|'", line_no);
        b.equator = Simplex(read_labels(3));
        if (!b.apexes.intersection(b.equator).empty()) {
          throw ParseError("bipyramid apexes meet its equator", line_no);
        }
        doc.bipyramid_cells.push_back(std::move(b));
      } else {
        throw ParseError("unknown cell tag '" + head + "'", line_no, 1);
      }
      std::string trailing;
      if (line >> trailing) throw ParseError("trailing tokens '" + trailing + "'", line_no);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!saw_meta) throw ParseError("missing '# meta' header", line_no);
  std::sort(doc.simplex_cells.begin(), doc.simplex_cells.end());
  std::sort(doc.bipyramid_cells.begin(), doc.bipyramid_cells.end());
  doc.vertices = cell_vertex_union(doc);
  return doc;
}

}  // namespace

SphereDocument to_document(const PolyhedralSphere& q) {
  SphereDocument doc;
  doc.n = q.n;
  doc.variant = q.variant;
  doc.vertices = q.vertex_set();
  doc.apexes = q.apex_of;
  doc.simplex_cells = q.tetrahedra;
  doc.bipyramid_cells = q.bipyramids;
  std::sort(doc.simplex_cells.begin(), doc.simplex_cells.end());
  std::sort(doc.bipyramid_cells.begin(), doc.bipyramid_cells.end());
  for (BipyramidCell& b : doc.bipyramid_cells) b.site = Site{};  // not serialized
  return doc;
}

SphereDocument to_document(const SimplicialComplex& x, int n, Variant variant,
                           std::map<int, VertexId> apexes) {
  SphereDocument doc;
  doc.n = n;
  doc.variant = variant;
  doc.vertices = x.vertex_set();
  doc.apexes = std::move(apexes);
  doc.simplex_cells = x.facets();
  return doc;
}

std::string serialize(const SphereDocument& doc, DocFormat format) {
  return format == DocFormat::Json ? to_json_text(doc) : to_facets_text(doc);
}

SphereDocument deserialize(const std::string& text, DocFormat format) {
  return format == DocFormat::Json ? from_json_text(text) : from_facets_text(text);
}

namespace {

json report_json(const LemmaReport& r) {
  json faces = json::array();
  for (const Simplex& w : r.witnesses) faces.push_back(simplex_json(w));
  json computed = json::array();
  for (const Simplex& f : r.computed_truth) computed.push_back(simplex_json(f));
  json claimed = json::array();
  for (const Simplex& f : r.claimed) claimed.push_back(simplex_json(f));
  return json{
      {"lemma", to_string(r.id)},
      {"n", r.n},
      {"variant", to_string(r.variant)},
      {"params", r.params},
      {"verdict", r.pass ? "PASS" : "FAIL"},
      {"construction_sound", r.construction_sound},
      {"witnesses", faces},
      {"computed_truth", computed},
      {"claimed", claimed},
      {"notes", r.notes},
  };
}

}  // namespace

std::string report_to_json(const LemmaReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<LemmaReport>& reports) {
  json arr = json::array();
  for (const LemmaReport& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace spherewright
