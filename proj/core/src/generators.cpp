#include "chipfire/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace chipfire {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
    throw GeneratorError("bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

// std::from_chars for double is missing from older libstdc++.
double parse_probability(std::string_view tok) {
  std::string s(tok);
  std::istringstream in(s);
  in.imbue(std::locale::classic());
  double value = 0.0;
  char extra = 0;
  if (s.empty() || !(in >> value) || (in >> extra)) {
    throw GeneratorError("bad probability '" + s + "'");
  }
  return value;
}

GeneratedGraph tagged(Graph g, FamilySpec spec, std::string name, bool transitive,
                      std::optional<srg::SrgParams> claimed) {
  return {std::move(g), FamilyTag{spec, std::move(name), transitive, claimed}};
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(seed ^ mix64(stream + kGolden))) {}

std::uint64_t CounterRng::draw(std::uint64_t counter) const noexcept {
  return mix64(key_ + (counter + 1) * kGolden);
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
  return static_cast<double>(draw(counter) >> 11) * 0x1.0p-53;
}

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

GeneratedGraph petersen() {
  // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint.
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < pairs.size(); ++u) {
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      const auto& x = pairs[u];
      const auto& y = pairs[v];
      if (x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1]) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return tagged(Graph::from_edge_list(pairs.size(), edges), {Family::Petersen}, "Petersen", true,
                srg::SrgParams{10, 3, 0, 1});
}

Graph twenty_seven_lines_graph() {
  // Double-six labelling: a_1..a_6, b_1..b_6 and c_ij for i < j.
  struct Line {
    char kind;
    int i;
    int j;
  };
  std::vector<Line> lines;
  for (int i = 0; i < 6; ++i) lines.push_back({'a', i, -1});
  for (int i = 0; i < 6; ++i) lines.push_back({'b', i, -1});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) lines.push_back({'c', i, j});

  auto meet = [](const Line& x, const Line& y) {
    if (x.kind == 'c' && y.kind == 'c') {
      return x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
    }
    if (x.kind == 'c' || y.kind == 'c') {
      const Line& ab = x.kind == 'c' ? y : x;
      const Line& c = x.kind == 'c' ? x : y;
      return ab.i == c.i || ab.i == c.j;
    }
    return x.kind != y.kind && x.i != y.i;
  };

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < lines.size(); ++u)
    for (std::size_t v = u + 1; v < lines.size(); ++v)
      if (meet(lines[u], lines[v])) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edge_list(lines.size(), edges);
}

GeneratedGraph schlafli() {
  return tagged(twenty_seven_lines_graph().complement(), {Family::Schlafli}, "Schläfli", true,
                srg::SrgParams{27, 16, 10, 8});
}

GeneratedGraph paley(std::int64_t q) {
  if (!is_prime(q)) throw GeneratorError("paley: q=" + std::to_string(q) + " is not prime");
  if (q % 4 != 1) throw GeneratorError("paley: q=" + std::to_string(q) + " is not 1 mod 4");
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (std::int64_t x = 1; x < q; ++x) residue[static_cast<std::size_t>((x * x) % q)] = true;
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < q; ++i)
    for (std::int64_t j = i + 1; j < q; ++j)
      if (residue[static_cast<std::size_t>(j - i)]) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  FamilySpec spec{Family::Paley, q};
  return tagged(Graph::from_edge_list(static_cast<std::size_t>(q), edges), spec,
                "Paley(" + std::to_string(q) + ")", true,
                srg::SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4});
}

GeneratedGraph triangular(std::int64_t m) {
  if (m < 4) throw GeneratorError("triangular: m must be >= 4");
  std::vector<std::array<std::int64_t, 2>> pairs;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i + 1; j < m; ++j) pairs.push_back({i, j});
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < pairs.size(); ++u) {
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      const auto& x = pairs[u];
      const auto& y = pairs[v];
      const int shared = (x[0] == y[0]) + (x[0] == y[1]) + (x[1] == y[0]) + (x[1] == y[1]);
      if (shared == 1) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  FamilySpec spec{Family::Triangular, m};
  return tagged(Graph::from_edge_list(pairs.size(), edges), spec, "T(" + std::to_string(m) + ")", true,
                srg::SrgParams{m * (m - 1) / 2, 2 * (m - 2), m - 2, 4});
}

GeneratedGraph complete(std::int64_t n) {
  if (n < 1) throw GeneratorError("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return tagged(Graph::from_edge_list(static_cast<std::size_t>(n), edges), {Family::Complete, n},
                "K_" + std::to_string(n), true, std::nullopt);
}

GeneratedGraph cycle(std::int64_t n) {
  if (n < 3) throw GeneratorError("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  std::optional<srg::SrgParams> claimed;
  if (n == 4) claimed = srg::SrgParams{4, 2, 0, 2};
  if (n == 5) claimed = srg::SrgParams{5, 2, 0, 1};
  return tagged(Graph::from_edge_list(static_cast<std::size_t>(n), edges), {Family::Cycle, n},
                "C_" + std::to_string(n), true, claimed);
}

GeneratedGraph gnp(std::int64_t n, double p, std::uint64_t seed) {
  if (n < 1) throw GeneratorError("gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GeneratorError("gnp: p must lie in [0,1]");
  constexpr std::uint64_t kAttempts = 1000;
  for (std::uint64_t attempt = 0; attempt < kAttempts; ++attempt) {
    const CounterRng rng(seed, attempt);
    std::vector<Edge> edges;
    std::uint64_t counter = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (rng.uniform(counter++) < p) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
    auto g = Graph::from_edge_list(static_cast<std::size_t>(n), edges);
    if (is_connected(g)) {
      FamilySpec spec{Family::Gnp, n, p, seed};
      std::ostringstream name;
      name << "G(" << n << "," << p << ";" << seed << ")";
      return tagged(std::move(g), spec, name.str(), false, std::nullopt);
    }
  }
  throw GeneratorError("gnp: no connected sample within 1000 attempts");
}

GeneratedGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Petersen: return petersen();
    case Family::Schlafli: return schlafli();
    case Family::Paley: return paley(spec.size);
    case Family::Triangular: return triangular(spec.size);
    case Family::Complete: return complete(spec.size);
    case Family::Cycle: return cycle(spec.size);
    case Family::Gnp: return gnp(spec.size, spec.p, spec.seed);
  }
  throw GeneratorError("unknown family");
}

FamilySpec FamilySpec::parse(std::string_view text) {
  const auto parts = split(text, ':');
  const auto name = parts.front();
  auto arity = [&](std::size_t args) {
    if (parts.size() != args + 1) {
      throw GeneratorError("family '" + std::string(name) + "' takes " + std::to_string(args) + " argument(s)");
    }
  };
  FamilySpec spec;
  if (name == "petersen") {
    arity(0);
    spec.family = Family::Petersen;
  } else if (name == "schlafli") {
    arity(0);
    spec.family = Family::Schlafli;
  } else if (name == "paley" || name == "triangular" || name == "complete" || name == "cycle") {
    arity(1);
    spec.family = name == "paley"        ? Family::Paley
                  : name == "triangular" ? Family::Triangular
                  : name == "complete"   ? Family::Complete
                                         : Family::Cycle;
    spec.size = parse_number<std::int64_t>(parts[1], "size");
  } else if (name == "gnp") {
    arity(3);
    spec.family = Family::Gnp;
    spec.size = parse_number<std::int64_t>(parts[1], "vertex count");
    spec.p = parse_probability(parts[2]);
    spec.seed = parse_number<std::uint64_t>(parts[3], "seed");
  } else {
    throw GeneratorError("unknown family '" + std::string(name) + "'");
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (family) {
    case Family::Petersen: return "petersen";
    case Family::Schlafli: return "schlafli";
    case Family::Paley: return "paley:" + std::to_string(size);
    case Family::Triangular: return "triangular:" + std::to_string(size);
    case Family::Complete: return "complete:" + std::to_string(size);
    case Family::Cycle: return "cycle:" + std::to_string(size);
    case Family::Gnp: {
      std::ostringstream out;
      out.imbue(std::locale::classic());
      out << "gnp:" << size << ':' << p << ':' << seed;
      return out.str();
    }
  }
  return "?";
}

}  // namespace chipfire
