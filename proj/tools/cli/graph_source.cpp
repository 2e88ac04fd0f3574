#include "graph_source.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace chipfire::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

LoadedGraph load_graph(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    std::istringstream parse(bytes);
    Graph g = read_edge_list(parse);
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(bytes);
    nlohmann::json prov{{"kind", "file"},
                        {"path", source},
                        {"fnv1a64", hex.str()},
                        {"n", g.vertex_count()},
                        {"m", g.edge_count()}};
    return {std::move(g), std::nullopt, source, std::move(prov)};
  }
  auto gen = generate(FamilySpec::parse(source));
  nlohmann::json prov{{"kind", "family"},
                      {"family", gen.tag.spec.to_string()},
                      {"display_name", gen.tag.display_name},
                      {"n", gen.graph.vertex_count()},
                      {"m", gen.graph.edge_count()}};
  auto name = gen.tag.display_name;
  return {std::move(gen.graph), std::move(gen.tag), std::move(name), std::move(prov)};
}

}  // namespace chipfire::cli
