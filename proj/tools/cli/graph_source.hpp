// graph_source.hpp - resolve a command-line graph argument.
#ifndef CHIPFIRE_CLI_GRAPH_SOURCE_HPP
#define CHIPFIRE_CLI_GRAPH_SOURCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chipfire/chipfire.hpp"

namespace chipfire::cli {

struct LoadedGraph {
  Graph graph;
  std::optional<FamilyTag> tag;  // set for family specs
  std::string display_name;
  nlohmann::json provenance;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// An existing file path is read as an edge list; anything else must be a
/// family spec. Throws GeneratorError, GraphError or std::ios_base::failure.
LoadedGraph load_graph(const std::string& source);

}  // namespace chipfire::cli

#endif  // CHIPFIRE_CLI_GRAPH_SOURCE_HPP
