#include "json_io.hpp"

#include <json.hpp>

#include <sstream>

namespace kmss {

using nlohmann::json;

namespace {

json diagram_json(const AffineDiagram& d) {
  json j;
  j["schema"] = "kmss/1";
  j["series"] = std::string(1, series_letter(d.series));
  j["rank"] = d.rank;
  j["twist"] = 1;
  json edges = json::array();
  for (const Bond& b : d.bonds) edges.push_back({b.i, b.j, b.mult, b.short_node});
  j["edges"] = edges;
  j["marks"] = d.marks;
  return j;
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error("schema violation at " + where + ": " + what);
}

AffineDiagram diagram_from(const json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  if (!j.contains("schema") || j["schema"] != "kmss/1")
    schema_error(where + ".schema", "missing or unsupported schema tag (want \"kmss/1\")");
  if (!j.contains("series") || !j["series"].is_string() || j["series"].get<std::string>().size() != 1)
    schema_error(where + ".series", "expected a one-letter series tag");
  Series s;
  try {
    s = series_from_letter(j["series"].get<std::string>()[0]);
  } catch (const Error& e) {
    schema_error(where + ".series", e.what());
  }
  if (!j.contains("rank") || !j["rank"].is_number_integer())
    schema_error(where + ".rank", "expected an integer rank");
  int rank = j["rank"].get<int>();
  if (j.contains("twist") && j["twist"] != 1)
    schema_error(where + ".twist", "only untwisted diagrams (twist 1) are supported");
  AffineDiagram d;
  try {
    d = build_affine_diagram(s, rank);
  } catch (const Error& e) {
    schema_error(where + ".rank", e.what());
  }
  // Edges and marks, when present, must agree with the canonical diagram.
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) schema_error(where + ".edges", "expected an array");
    if (edges.size() != d.bonds.size())
      schema_error(where + ".edges", "expected " + std::to_string(d.bonds.size()) + " edges");
    for (size_t k = 0; k < edges.size(); ++k) {
      const json& e = edges[k];
      std::string ew = where + ".edges[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 4) schema_error(ew, "expected [i,j,mult,arrow]");
      int i = e[0].get<int>(), jj = e[1].get<int>(), mult = e[2].get<int>(),
          arrow = e[3].get<int>();
      const Bond* b = d.bond_between(i, jj);
      if (b == nullptr) schema_error(ew, "no such bond in the canonical diagram");
      if (b->mult != mult) schema_error(ew, "bond multiplicity mismatch");
      if (b->short_node != arrow) schema_error(ew, "arrow mismatch");
    }
  }
  if (j.contains("marks")) {
    std::vector<long> marks = j["marks"].get<std::vector<long>>();
    if (marks != d.marks) schema_error(where + ".marks", "marks do not solve A*marks = 0");
  }
  return d;
}

}  // namespace

std::string diagram_to_json(const AffineDiagram& d) { return diagram_json(d).dump(2); }

AffineDiagram diagram_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("JSON parse error: ") + e.what());
  }
  return diagram_from(j, "$");
}

std::string vogan_to_json(const VoganDiagram& vd) {
  json j = diagram_json(vd.diagram);
  j["painted"] = std::vector<int>(vd.painted.begin(), vd.painted.end());
  j["automorphism"] = {{"name", vd.automorphism.name}, {"map", vd.automorphism.perm}};
  return j.dump(2);
}

VoganDiagram vogan_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("JSON parse error: ") + e.what());
  }
  AffineDiagram d = diagram_from(j, "$");
  std::set<int> painted;
  if (j.contains("painted")) {
    if (!j["painted"].is_array()) schema_error("$.painted", "expected an array");
    for (const auto& p : j["painted"]) painted.insert(p.get<int>());
  }
  DiagramAutomorphism aut = identity_automorphism(d.nodes());
  if (j.contains("automorphism")) {
    const json& a = j["automorphism"];
    if (!a.is_object() || !a.contains("map"))
      schema_error("$.automorphism", "expected {\"name\",\"map\"}");
    aut.perm = a["map"].get<std::vector<int>>();
    if (aut.perm.size() != static_cast<size_t>(d.nodes()))
      schema_error("$.automorphism.map", "length must equal the node count");
    aut.name = a.value("name", "aut");
    try {
      aut.order = permutation_order(aut.perm);
    } catch (const Error& e) {
      schema_error("$.automorphism.map", e.what());
    }
  }
  try {
    return make_vogan(d, painted, aut);
  } catch (const Error& e) {
    schema_error("$", e.what());
  }
}

std::string render_ascii(const VoganDiagram& vd) {
  std::ostringstream os;
  os << vd.diagram.name() << "\n";
  os << "nodes:";
  for (int i = 0; i < vd.diagram.nodes(); ++i)
    os << " " << i << (vd.painted.count(i) ? "*" : "o");
  os << "   (* painted, o unpainted)\n";
  for (const Bond& b : vd.diagram.bonds) {
    os << "  " << b.i << " ";
    switch (b.mult) {
      case 1: os << "---"; break;
      case 2: os << (b.short_node == b.j ? "==>" : "<=="); break;
      case 3: os << (b.short_node == b.j ? "≡≡>" : "<≡≡"); break;
      case 4: os << "<<=>>"; break;
    }
    os << " " << b.j << "\n";
  }
  std::vector<bool> done(vd.diagram.nodes(), false);
  for (int i = 0; i < vd.diagram.nodes(); ++i) {
    int j = vd.automorphism.perm[i];
    if (j != i && !done[i]) {
      done[i] = done[j] = true;
      os << "  " << i << " <~~> " << j << "\n";
    }
  }
  return os.str();
}

std::string affine_to_json(const AffineElement& x) {
  json j;
  j["schema"] = "kmss/1";
  j["dim"] = x.dim();
  json entries = json::array();
  for (int i = 0; i < x.dim(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < x.dim(); ++jj) {
      json cell = json::object();
      for (const auto& [deg, c] : x.loop.at(i, jj).coefficients())
        cell[std::to_string(deg)] = to_string(c.re) + "," + to_string(c.im);
      row.push_back(cell);
    }
    entries.push_back(row);
  }
  j["loop"] = entries;
  j["c"] = to_string(x.c.re) + "," + to_string(x.c.im);
  j["d"] = to_string(x.d.re) + "," + to_string(x.d.im);
  return j.dump();
}

std::string render_dot(const VoganDiagram& vd) {
  std::ostringstream os;
  os << "graph vogan {\n";
  os << "  label=\"" << vd.diagram.name() << "\";\n";
  for (int i = 0; i < vd.diagram.nodes(); ++i) {
    os << "  n" << i << " [shape=circle,label=\"" << i << "\""
       << (vd.painted.count(i) ? ",style=filled,fillcolor=black,fontcolor=white" : "") << "];\n";
  }
  for (const Bond& b : vd.diagram.bonds) {
    os << "  n" << b.i << " -- n" << b.j;
    std::string attrs;
    if (b.mult == 2 || b.mult == 3) {
      attrs = "label=\"" + std::to_string(b.mult) + "\"";
      // Arrow toward the short root.
      attrs += ",dir=forward";
      if (b.short_node == b.i) attrs += ",arrowhead=none,arrowtail=normal";
    } else if (b.mult == 4) {
      attrs = "label=\"4\",dir=both";
    }
    if (!attrs.empty()) os << " [" << attrs << "]";
    os << ";\n";
  }
  for (int i = 0; i < vd.diagram.nodes(); ++i) {
    int j = vd.automorphism.perm[i];
    if (j > i) os << "  n" << i << " -- n" << j << " [style=dashed,dir=both,constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace kmss
