#pragma once

#include <optional>
#include <string>

#include "hamcut/instance.hpp"
#include "hamcut/solver.hpp"
#include "hamcut/sweep.hpp"

namespace hamcut {

// Instances are stored as JSON with every number written as a string:
// integers, ratios "p/q", or decimals, all parsed exactly.
//
//   { "dimension": 2, "kind": "hyperplane",
//     "families": [ { "name": "F0",
//                     "elements": [ { "f": ["1","0"], "y": "1", "w": "1" } ] } ] }
//
// Point instances use kind "points" and elements { "v": [...], "w": ... }.

Instance<Rat> parse_instance_json(const std::string& text);
Instance<Rat> load_instance(const std::string& path);

// Serialization is canonical: normalized weights, canonical hyperplanes,
// sorted atoms, so parse(serialize(x)) == x and files are byte-stable.
std::string instance_to_json(const Instance<Rat>& inst);
void save_instance(const Instance<Rat>& inst, const std::string& path);

// scalar -> string forms used in files
std::string number_string(const Rat& v);
std::string number_string(double v);

// Solution documents. The top-level fields carry the first (representative)
// solution; the "solutions" array lists all of them, including arcs.
std::string solutions_to_json(const Instance<Rat>& inst, const std::vector<Solution<Rat>>& sols);
std::string sweep_to_json(const Instance<double>& inst, const SweepOutcome& outcome,
                          const SweepConfig& cfg);

// Minimal parsed view of a solution file: enough to re-verify or plot.
struct SolutionView {
    InstanceKind kind = InstanceKind::Hyperplane;
    bool feasible = false;
    Vec<Rat> direction;  // e (hyperplane mode) or f (classical mode)
    Rat value;           // x or y
    std::optional<Rat> eps;  // certificate eps, when present
};

SolutionView parse_solution_json(const std::string& text);
SolutionView load_solution(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hamcut
