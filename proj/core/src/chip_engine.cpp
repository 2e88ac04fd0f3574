#include "chipfire/chip_engine.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "chipfire/bounds.hpp"
#include "chipfire/generators.hpp"

namespace chipfire {

namespace {

std::int64_t parse_int(std::string_view tok, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw EngineError("bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return v;
}

// Set of currently fireable vertices, ordered by the strategy.
class Frontier {
 public:
  Frontier(const FiringStrategy& s, std::size_t n)
      : kind_(s.kind), rng_(s.seed, 0), pos_(n, kAbsent), queued_(n, false) {}

  bool empty(const std::vector<std::int64_t>& chips, const Graph& g) {
    if (kind_ == StrategyKind::Fifo) {
      while (!queue_.empty() && chips[idx(queue_.front())] < g.degree(queue_.front())) {
        queued_[idx(queue_.front())] = false;
        queue_.pop_front();
      }
      return queue_.empty();
    }
    switch (kind_) {
      case StrategyKind::MinIndex: return by_index_.empty();
      case StrategyKind::MaxChips: return by_chips_.empty();
      default: return pool_.empty();
    }
  }

  Vertex pick() {
    switch (kind_) {
      case StrategyKind::MinIndex: return *by_index_.begin();
      case StrategyKind::MaxChips: return by_chips_.begin()->second;
      case StrategyKind::Random: return pool_[rng_.below(pool_.size())];
      case StrategyKind::Fifo: {
        Vertex v = queue_.front();
        queue_.pop_front();
        queued_[idx(v)] = false;
        return v;
      }
    }
    return -1;
  }

  void update(Vertex v, std::int64_t old_chips, std::int64_t new_chips, bool was, bool now) {
    switch (kind_) {
      case StrategyKind::MinIndex:
        if (was && !now) by_index_.erase(v);
        if (!was && now) by_index_.insert(v);
        break;
      case StrategyKind::MaxChips:
        if (was) by_chips_.erase({-old_chips, v});
        if (now) by_chips_.insert({-new_chips, v});
        break;
      case StrategyKind::Random:
        if (was && !now) {
          const std::size_t at = pos_[idx(v)];
          pool_[at] = pool_.back();
          pos_[idx(pool_[at])] = at;
          pool_.pop_back();
          pos_[idx(v)] = kAbsent;
        }
        if (!was && now) {
          pos_[idx(v)] = pool_.size();
          pool_.push_back(v);
        }
        break;
      case StrategyKind::Fifo:
        if (now && !queued_[idx(v)]) {
          queue_.push_back(v);
          queued_[idx(v)] = true;
        }
        break;
    }
  }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  StrategyKind kind_;
  CounterRng rng_;
  std::set<Vertex> by_index_;
  std::set<std::pair<std::int64_t, Vertex>> by_chips_;
  std::vector<Vertex> pool_;
  std::vector<std::size_t> pos_;
  std::deque<Vertex> queue_;
  std::vector<bool> queued_;
};

}  // namespace

std::int64_t ChipConfig::total() const { return std::accumulate(chips.begin(), chips.end(), std::int64_t{0}); }

ChipConfig single_vertex_config(const Graph& g, Vertex v, std::int64_t N) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
    throw EngineError("vertex " + std::to_string(v) + " out of range");
  }
  if (N < 0) throw EngineError("chip count must be non-negative");
  ChipConfig c{std::vector<std::int64_t>(g.vertex_count(), 0)};
  c.chips[static_cast<std::size_t>(v)] = N;
  return c;
}

ChipConfig parse_chip_config(std::string_view text, const Graph& g) {
  if (text.starts_with("single:")) {
    auto rest = text.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw EngineError("expected single:<v>:<N>");
    return single_vertex_config(g, static_cast<Vertex>(parse_int(rest.substr(0, colon), "vertex")),
                                parse_int(rest.substr(colon + 1), "chip count"));
  }
  if (text.starts_with("csv:")) {
    ChipConfig c;
    auto rest = text.substr(4);
    while (true) {
      auto comma = rest.find(',');
      const auto value = parse_int(rest.substr(0, comma), "chip count");
      if (value < 0) throw EngineError("chip counts must be non-negative");
      c.chips.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (c.size() != g.vertex_count()) {
      throw EngineError("configuration has " + std::to_string(c.size()) + " entries, graph has " +
                        std::to_string(g.vertex_count()) + " vertices");
    }
    return c;
  }
  throw EngineError("chip configuration must be single:<v>:<N> or csv:<c0>,<c1>,...");
}

FiringStrategy FiringStrategy::parse(std::string_view name, std::uint64_t seed) {
  if (name == "min-index") return min_index();
  if (name == "max-chips") return max_chips();
  if (name == "fifo") return fifo();
  if (name == "random") return random(seed);
  throw EngineError("unknown strategy '" + std::string(name) + "'");
}

std::string FiringStrategy::to_string() const {
  switch (kind) {
    case StrategyKind::MinIndex: return "min-index";
    case StrategyKind::MaxChips: return "max-chips";
    case StrategyKind::Fifo: return "fifo";
    case StrategyKind::Random: return "random:" + std::to_string(seed);
  }
  return "?";
}

const char* to_string(DivergenceReason r) {
  switch (r) {
    case DivergenceReason::ExceededCutoff: return "ExceededCutoff";
    case DivergenceReason::NecessaryConditionViolated: return "NecessaryConditionViolated";
  }
  return "?";
}

const char* to_string(TerminationClass c) {
  switch (c) {
    case TerminationClass::GuaranteedTerminates: return "GuaranteedTerminates";
    case TerminationClass::MayTerminate: return "MayTerminate";
    case TerminationClass::NeverTerminates: return "NeverTerminates";
  }
  return "?";
}

TerminationClass termination_class(const Graph& g, std::int64_t N) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  if (N < m) return TerminationClass::GuaranteedTerminates;
  if (N > 2 * m - n) return TerminationClass::NeverTerminates;
  return TerminationClass::MayTerminate;
}

std::int64_t default_cutoff(const Graph& g, std::int64_t N) { return best_bound(g, N).best.floor_value; }

GameOutcome play(const Graph& g, const ChipConfig& a, const FiringStrategy& strategy, const PlayOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (a.size() != n) {
    throw EngineError("configuration length " + std::to_string(a.size()) + " does not match vertex count " +
                      std::to_string(n));
  }
  if (n < 2) throw EngineError("play needs at least two vertices");
  if (std::any_of(a.chips.begin(), a.chips.end(), [](std::int64_t c) { return c < 0; })) {
    throw EngineError("chip counts must be non-negative");
  }
  if (!is_connected(g)) throw GraphError(GraphErrc::Disconnected, "play: graph is disconnected");

  const std::int64_t N = a.total();
  if (termination_class(g, N) == TerminationClass::NeverTerminates) {
    GameOutcome out(Divergence{DivergenceReason::NecessaryConditionViolated, 0, 0});
    out.set_cutoff_used(opts.cutoff.value_or(0));
    return out;
  }
  const std::int64_t cutoff = opts.cutoff ? *opts.cutoff : default_cutoff(g, N);

  std::vector<std::int64_t> chips = a.chips;
  std::vector<std::int64_t> x(n, 0);
  std::optional<std::vector<Vertex>> sequence;
  if (opts.record_sequence) sequence.emplace();

  Frontier frontier(strategy, n);
  for (std::size_t v = 0; v < n; ++v) {
    if (chips[v] >= g.degrees()[v]) frontier.update(static_cast<Vertex>(v), chips[v], chips[v], false, true);
  }

  std::int64_t s = 0;
  while (!frontier.empty(chips, g)) {
    if (s == cutoff) {
      GameOutcome out(Divergence{DivergenceReason::ExceededCutoff, s, cutoff});
      out.set_cutoff_used(cutoff);
      return out;
    }
    const Vertex v = frontier.pick();
    const auto vi = static_cast<std::size_t>(v);
    const std::int64_t deg = g.degrees()[vi];

    const std::int64_t before_v = chips[vi];
    chips[vi] -= deg;
    frontier.update(v, before_v, chips[vi], true, chips[vi] >= deg);
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      const std::int64_t before = chips[wi];
      chips[wi] += 1;
      frontier.update(w, before, chips[wi], before >= g.degrees()[wi], chips[wi] >= g.degrees()[wi]);
    }
    if (x[vi] == std::numeric_limits<std::int64_t>::max() || s == std::numeric_limits<std::int64_t>::max()) {
      throw EngineError("firing count overflow");
    }
    ++x[vi];
    ++s;
    if (sequence) sequence->push_back(v);
  }

  GameOutcome out(GameTrace{s, std::move(x), a, ChipConfig{std::move(chips)}, std::move(sequence)});
  out.set_cutoff_used(cutoff);
  return out;
}

ConfluenceReport confluence_check(const Graph& g, const ChipConfig& a, std::span<const FiringStrategy> strategies,
                                  const PlayOptions& opts) {
  if (strategies.size() < 2) throw std::invalid_argument("confluence_check needs at least two strategies");
  PlayOptions shared = opts;
  if (!shared.cutoff) shared.cutoff = default_cutoff(g, a.total());

  ConfluenceReport rep;
  for (const auto& strat : strategies) {
    auto outcome = play(g, a, strat, shared);
    if (!outcome.terminated()) {
      throw EngineError("strategy " + strat.to_string() + " diverged (" + to_string(outcome.divergence().reason) + ")");
    }
    rep.strategies.push_back(strat);
    rep.traces.push_back(outcome.trace());
  }
  const auto& ref = rep.traces.front();
  for (std::size_t i = 1; i < rep.traces.size() && rep.agree; ++i) {
    const auto& t = rep.traces[i];
    std::string what;
    if (t.s != ref.s) {
      what = "move count " + std::to_string(t.s) + " vs " + std::to_string(ref.s);
    } else if (t.x != ref.x) {
      what = "firing vector";
    } else if (t.final != ref.final) {
      what = "final configuration";
    }
    if (!what.empty()) {
      rep.agree = false;
      rep.mismatch = rep.strategies[i].to_string() + " differs from " + rep.strategies[0].to_string() + ": " + what;
    }
  }
  return rep;
}

bool verify_firing_identity(const Graph& g, const GameTrace& trace) {
  const std::size_t n = g.vertex_count();
  if (trace.x.size() != n || trace.initial.size() != n || trace.final.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    // (L x)_i = d_i x_i - sum_{j ~ i} x_j
    std::int64_t lx = g.degrees()[i] * trace.x[i];
    for (Vertex j : g.neighbors(static_cast<Vertex>(i))) lx -= trace.x[static_cast<std::size_t>(j)];
    if (lx != trace.initial.chips[i] - trace.final.chips[i]) return false;
  }
  return true;
}

double verify_duration_identity(const Graph& g, const GameTrace& trace, const Eigen::MatrixXd& ldag) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::VectorXd diff(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    diff(i) = static_cast<double>(trace.initial.chips[static_cast<std::size_t>(i)] -
                                  trace.final.chips[static_cast<std::size_t>(i)]);
  }
  double worst = -1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (trace.x[static_cast<std::size_t>(k)] != 0) continue;
    const double value = -static_cast<double>(n) * ldag.row(k).dot(diff);
    worst = std::max(worst, std::abs(static_cast<double>(trace.s) - value));
  }
  if (worst < 0.0) throw EngineError("every vertex fired; a terminated game always leaves one unfired");
  return worst;
}

}  // namespace chipfire
