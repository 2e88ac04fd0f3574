#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "chipfire/graph.hpp"

namespace chipfire {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& msg) {
  throw GraphError(GraphErrc::Malformed, "edge list line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) malformed(line_no, "missing 'n m' header");

  long long n = -1;
  long long m = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra) || n <= 0 || m < 0) {
      malformed(line_no, "header must be two integers 'n m' with n > 0");
    }
  }

  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  while (static_cast<long long>(pairs.size()) < m) {
    if (!next_content_line(in, line, line_no)) {
      malformed(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
    }
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) malformed(line_no, "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError(GraphErrc::VertexOutOfRange,
                       "edge list line " + std::to_string(line_no) + ": vertex out of range");
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, line_no)) malformed(line_no, "trailing content after the last edge");
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace chipfire
