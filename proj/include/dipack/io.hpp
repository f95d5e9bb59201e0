#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dipack/digraph.hpp"

namespace dipack {

// Instance text format:
//   digraph <name>
//   vertex <label>            (order defines internal ids 0..n-1)
//   arc <tail> <head> <weight>
//   claim <key> <value...>    (optional; gate transcription slots)
struct Instance {
    std::string name;
    WeightedDigraph digraph;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> claims;

    int vertex_by_label(const std::string& label) const;
    std::optional<std::string> claim(const std::string& key) const;
};

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

std::string to_dot(const Instance& inst,
                   const std::vector<std::pair<double, double>>* coords = nullptr);

// built-in library; transcription slots carry their claim lines
const std::vector<Instance>& builtin_instances();
std::optional<Instance> find_builtin(const std::string& name);

// name from the builtin library, or a path to an instance file. Builtins with
// no arcs are unfilled transcription slots and are rejected.
Instance load_instance(const std::string& name_or_path);

}  // namespace dipack
