#ifndef LENSHOM_JSON_IO_HPP
#define LENSHOM_JSON_IO_HPP

#include "lenshom/diagram.hpp"
#include "lenshom/engine.hpp"
#include "lenshom/trivial.hpp"

#include <string>
#include <vector>

namespace lenshom {

// Diagram document: {"p":5,"q":1,"n":2,"O":[[0,0],[1,1]],"X":[[3,0],[8,1]]}.
std::string diagram_to_json(const GridDiagram& d);
GridDiagram diagram_from_json(const std::string& text);

// Structured report for the info subcommand.
std::string info_to_json(const GridDiagram& d);

// Normalization override file: [{"index":[m0,...],"value":"a^2"}, ...].
NormalizationTable normalization_from_json(const std::string& text);

std::string skein_tree_to_json(const SkeinTree& tree);
std::string skein_tree_to_dot(const SkeinTree& tree);

std::string trace_to_json(const std::vector<TraceStep>& trace);

}  // namespace lenshom

#endif
