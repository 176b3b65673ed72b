#include "lenshom/json_io.hpp"

#include "lenshom/errors.hpp"
#include "lenshom/laurent.hpp"
#include "lenshom/metrics.hpp"

#include <json.hpp>

#include <sstream>

namespace lenshom {

using nlohmann::json;

namespace {

json cells_to_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.strip, c.row});
  return out;
}

std::vector<Cell> cells_from_json(const json& arr, const char* label) {
  if (!arr.is_array())
    throw ParseError(std::string(label) + " must be an array of [strip,row] pairs", 0);
  std::vector<Cell> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError(std::string(label) + " entries must be [strip,row]", 0);
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

json move_to_json(const MoveRecord& m) {
  json out;
  switch (m.kind) {
    case MoveRecord::Kind::ColumnCommute:
      out["kind"] = "commute-cols";
      out["at"] = m.index;
      break;
    case MoveRecord::Kind::RowCommute:
      out["kind"] = "commute-rows";
      out["at"] = m.index;
      break;
    case MoveRecord::Kind::CrossingChange:
      out["kind"] = "crossing-change";
      out["at"] = m.index;
      break;
    case MoveRecord::Kind::Resolve:
      out["kind"] = "resolve";
      out["at"] = m.index;
      out["sign"] = to_string(m.sign);
      break;
    case MoveRecord::Kind::Stabilize:
      out["kind"] = "stabilize";
      out["type"] = to_string(m.stab_type);
      out["corner"] = to_string(m.corner);
      out["at"] = {m.stab_at.strip, m.stab_at.row};
      break;
    case MoveRecord::Kind::Destabilize:
      out["kind"] = "destabilize";
      out["a"] = {m.triple.a.strip, m.triple.a.row};
      out["b"] = {m.triple.b.strip, m.triple.b.row};
      out["c"] = {m.triple.c.strip, m.triple.c.row};
      break;
  }
  return out;
}

}  // namespace

std::string diagram_to_json(const GridDiagram& d) {
  json out;
  out["p"] = d.p();
  out["q"] = d.q();
  out["n"] = d.n();
  out["O"] = cells_to_json(d.o_marks());
  out["X"] = cells_to_json(d.x_marks());
  return out.dump();
}

GridDiagram diagram_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  for (const char* field : {"p", "q", "n", "O", "X"})
    if (!doc.contains(field))
      throw ParseError(std::string("missing field \"") + field + "\"", 0);
  if (!doc["p"].is_number_integer() || !doc["q"].is_number_integer() ||
      !doc["n"].is_number_integer())
    throw ParseError("p, q, n must be integers", 0);
  return GridDiagram(doc["p"].get<int>(), doc["q"].get<int>(),
                     doc["n"].get<int>(), cells_from_json(doc["O"], "O"),
                     cells_from_json(doc["X"], "X"));
}

std::string info_to_json(const GridDiagram& d) {
  auto comps = components(d);
  json out;
  out["p"] = d.p();
  out["q"] = d.q();
  out["n"] = d.n();
  out["components"] = comps.count;
  out["mu"] = comps.mu;
  out["grid_numbers"] = comps.grid_number;
  out["total_mu"] = total_mu(d);
  out["scr"] = scr(d);
  return out.dump();
}

NormalizationTable normalization_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array())
    throw ParseError("normalization file must be an array of entries", 0);
  NormalizationTable out;
  for (const auto& entry : doc) {
    if (!entry.contains("index") || !entry.contains("value"))
      throw ParseError("normalization entries need \"index\" and \"value\"", 0);
    std::vector<int> m = entry["index"].get<std::vector<int>>();
    out.set(std::move(m), LaurentPoly::parse(entry["value"].get<std::string>()));
  }
  return out;
}

namespace {

json index_set_to_json(const IndexSet& idx) {
  json out;
  out["p"] = idx.p;
  out["q"] = idx.q;
  out["m"] = idx.m;
  return out;
}

}  // namespace

std::string skein_tree_to_json(const SkeinTree& tree) {
  json out;
  out["root"] = tree.root;
  out["u_bound"] = tree.u_bound;
  json nodes = json::array();
  for (const auto& [key, node] : tree.nodes) {
    json jn;
    jn["key"] = key;
    jn["role"] = node.role;
    jn["diagram"] = json::parse(diagram_to_json(node.diagram));
    if (node.index_set) jn["index_set"] = index_set_to_json(*node.index_set);
    if (node.value) jn["value"] = node.value->str();
    nodes.push_back(std::move(jn));
  }
  out["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& e : tree.edges) {
    json je;
    je["from"] = e.from;
    je["to"] = e.to;
    json moves = json::array();
    for (const auto& m : e.moves) moves.push_back(move_to_json(m));
    je["moves"] = std::move(moves);
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  json branches = json::array();
  for (const auto& b : tree.branches) {
    json jb;
    jb["at"] = b.at;
    jb["column"] = b.column;
    jb["sign"] = to_string(b.sign);
    jb["child_after_change"] = b.child_after_change;
    jb["child_resolution"] = b.child_resolution;
    branches.push_back(std::move(jb));
  }
  out["branches"] = std::move(branches);
  return out.dump(2);
}

std::string skein_tree_to_dot(const SkeinTree& tree) {
  std::ostringstream os;
  os << "digraph skein_tree {\n  rankdir=TB;\n  node [shape=box,fontname=\"monospace\"];\n";
  std::map<std::string, int> ids;
  for (const auto& [key, node] : tree.nodes) {
    int id = static_cast<int>(ids.size());
    ids[key] = id;
    std::string label = node.role;
    if (node.value) label += "\\n" + node.value->str();
    os << "  n" << id << " [label=\"" << label << "\"";
    if (key == tree.root) os << ",style=bold";
    if (node.role == "leaf") os << ",shape=ellipse";
    os << "];\n";
  }
  for (const auto& e : tree.edges)
    os << "  n" << ids.at(e.from) << " -> n" << ids.at(e.to) << " [label=\""
       << e.moves.size() << " moves\"];\n";
  for (const auto& b : tree.branches)
    os << "  n" << ids.at(b.at) << " -> n" << ids.at(b.child_resolution)
       << " [label=\"resolve " << to_string(b.sign) << "\",style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::string trace_to_json(const std::vector<TraceStep>& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    json js;
    js["node"] = step.node_key;
    js["move"] = move_to_json(step.move);
    js["class"] = to_string(step.cls);
    js["complexity"] = {step.after.gn, step.after.scr_value,
                        step.after.plan_remaining};
    js["key_after"] = step.key_after;
    out.push_back(std::move(js));
  }
  return out.dump(2);
}

}  // namespace lenshom
