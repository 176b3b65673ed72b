// Command-line front end: diagram I/O, invariant reports, move application,
// trivial-link generation, polynomial evaluation, skein-tree export.
//
// Exit codes: 0 success, 1 input or validation error, 2 internal invariant
// violation (termination measure, illegal row commutation in a reduction).

#include "lenshom/diagram.hpp"
#include "lenshom/engine.hpp"
#include "lenshom/errors.hpp"
#include "lenshom/json_io.hpp"
#include "lenshom/laurent.hpp"
#include "lenshom/metrics.hpp"
#include "lenshom/moves.hpp"
#include "lenshom/trivial.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lenshom;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file " + path, 0);
  out << text;
}

GridDiagram load_diagram(const std::string& path) {
  return diagram_from_json(slurp(path));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  return out;
}

struct MoveArgs {
  std::string op;
  std::string at;
};

GridDiagram run_move(const GridDiagram& d, const MoveArgs& args) {
  if (args.op == "commute-cols")
    return commute_columns(d, std::stoi(args.at));
  if (args.op == "commute-rows")
    return commute_rows(d, std::stoi(args.at));
  if (args.op == "crossing-change" || args.op == "resolve") {
    int j = std::stoi(args.at);
    auto crossing = skein_crossing_at(d, j);
    if (!crossing)
      throw MoveError("IllegalExchange",
                      "no skein crossing at interface " + args.at);
    return args.op == "resolve" ? resolve(d, *crossing)
                                : crossing_change(d, *crossing);
  }
  if (args.op == "stabilize") {
    // --at TYPE,CORNER,STRIP,ROW e.g. X,NW,3,0
    std::stringstream ss(args.at);
    std::string type_s, corner_s, strip_s, row_s;
    if (!std::getline(ss, type_s, ',') || !std::getline(ss, corner_s, ',') ||
        !std::getline(ss, strip_s, ',') || !std::getline(ss, row_s, ','))
      throw ParseError("stabilize wants --at TYPE,CORNER,STRIP,ROW", 0);
    MarkType type = type_s == "O" ? MarkType::O : MarkType::X;
    StabCorner corner;
    if (corner_s == "NW") corner = StabCorner::NW;
    else if (corner_s == "NE") corner = StabCorner::NE;
    else if (corner_s == "SW") corner = StabCorner::SW;
    else if (corner_s == "SE") corner = StabCorner::SE;
    else throw ParseError("unknown corner " + corner_s, 0);
    return stabilize(d, type, {std::stoi(strip_s), std::stoi(row_s)}, corner);
  }
  if (args.op == "destabilize") {
    auto v = parse_int_list(args.at);
    if (v.size() != 6)
      throw ParseError("destabilize wants --at aS,aR,bS,bR,cS,cR", 0);
    return destabilize(d, {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}});
  }
  throw ParseError("unknown move op " + args.op, 0);
}

std::string info_text(const GridDiagram& d) {
  auto comps = components(d);
  std::ostringstream os;
  os << "p=" << d.p() << " q=" << d.q() << " n=" << d.n() << "\n";
  os << "components=" << comps.count << "\n";
  os << "mu=[";
  for (int i = 0; i < comps.count; ++i)
    os << (i ? "," : "") << comps.mu[i];
  os << "]\n";
  os << "grid_numbers=[";
  for (int i = 0; i < comps.count; ++i)
    os << (i ? "," : "") << comps.grid_number[i];
  os << "]\n";
  os << "total_mu=" << total_mu(d) << "\n";
  os << "scr=" << scr(d) << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY-type polynomial invariant of links in lens spaces "
               "via toroidal grid diagrams"};
  app.require_subcommand(1);

  std::string file, format = "text";
  std::string trace_path, tree_path, normalization_path;
  MoveArgs move_args;
  int triv_p = 1, triv_q = 0;
  std::string triv_index;

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram document");
  validate_cmd->add_option("file", file)->required();

  auto* info_cmd = app.add_subcommand("info", "Report p, q, n, components, mu, scr");
  info_cmd->add_option("file", file)->required();
  info_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* lift_cmd = app.add_subcommand("lift", "Emit the p-fold cover diagram");
  lift_cmd->add_option("file", file)->required();

  auto* scr_cmd = app.add_subcommand("scr", "Print the skein-crossing count of the lift");
  scr_cmd->add_option("file", file)->required();

  auto* trivial_cmd = app.add_subcommand("trivial", "Emit the trivial link diagram D(I)");
  trivial_cmd->add_option("--p", triv_p)->required();
  trivial_cmd->add_option("--q", triv_q)->required();
  trivial_cmd->add_option("--index", triv_index, "m0,...,m{p-1}")->required();

  auto* move_cmd = app.add_subcommand("move", "Apply one grid move and emit the diagram");
  move_cmd->add_option("file", file)->required();
  move_cmd->add_option("--op", move_args.op)
      ->required()
      ->check(CLI::IsMember({"commute-cols", "commute-rows", "stabilize",
                             "destabilize", "resolve", "crossing-change"}));
  move_cmd->add_option("--at", move_args.at)->required();

  auto* homfly_cmd = app.add_subcommand("homfly", "Evaluate the polynomial invariant");
  homfly_cmd->add_option("file", file)->required();
  homfly_cmd->add_option("--trace", trace_path, "Write the reduction trace");
  homfly_cmd->add_option("--tree", tree_path, "Write the skein tree");
  homfly_cmd->add_option("--normalization", normalization_path,
                         "Normalization override table");
  homfly_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tree_cmd = app.add_subcommand("tree", "Export the skein tree");
  tree_cmd->add_option("file", file)->required();
  tree_cmd->add_option("--normalization", normalization_path);
  tree_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      GridDiagram d = load_diagram(file);
      std::cout << "ok\n";
      return 0;
    }
    if (info_cmd->parsed()) {
      GridDiagram d = load_diagram(file);
      if (format == "json")
        std::cout << info_to_json(d) << "\n";
      else
        std::cout << info_text(d);
      return 0;
    }
    if (lift_cmd->parsed()) {
      std::cout << diagram_to_json(lift(load_diagram(file))) << "\n";
      return 0;
    }
    if (scr_cmd->parsed()) {
      std::cout << scr(load_diagram(file)) << "\n";
      return 0;
    }
    if (trivial_cmd->parsed()) {
      IndexSet idx{triv_p, triv_q, parse_int_list(triv_index)};
      if (static_cast<int>(idx.m.size()) != triv_p)
        throw ParseError("--index needs exactly p entries", 0);
      std::cout << diagram_to_json(build_trivial_diagram(idx)) << "\n";
      return 0;
    }
    if (move_cmd->parsed()) {
      std::cout << diagram_to_json(run_move(load_diagram(file), move_args))
                << "\n";
      return 0;
    }
    if (homfly_cmd->parsed() || tree_cmd->parsed()) {
      GridDiagram d = load_diagram(file);
      NormalizationTable table;
      EvalOptions options;
      if (!normalization_path.empty()) {
        table = normalization_from_json(slurp(normalization_path));
        options.normalization = &table;
      }
      options.record_trace = !trace_path.empty();
      Evaluator evaluator(options);
      EvalResult result = evaluator.evaluate(d);
      if (!trace_path.empty()) spill(trace_path, trace_to_json(result.trace));
      if (!tree_path.empty()) spill(tree_path, skein_tree_to_json(result.tree));
      if (tree_cmd->parsed()) {
        std::cout << (format == "dot" ? skein_tree_to_dot(result.tree)
                                      : skein_tree_to_json(result.tree))
                  << "\n";
      } else if (format == "json") {
        std::cout << "{\"value\":\"" << result.value.str()
                  << "\",\"u_bound\":" << result.tree.u_bound << "}\n";
      } else {
        std::cout << result.value.str() << "\n";
      }
      return 0;
    }
  } catch (const InternalInvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
