// chip_engine.hpp - deterministic chip-firing game simulation.

#ifndef CHIPFIRE_CHIP_ENGINE_HPP
#define CHIPFIRE_CHIP_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "chipfire/graph.hpp"

namespace chipfire {

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChipConfig {
  std::vector<std::int64_t> chips;

  std::int64_t total() const;
  std::size_t size() const noexcept { return chips.size(); }
  friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

/// All N chips on vertex v.
ChipConfig single_vertex_config(const Graph& g, Vertex v, std::int64_t N);

/// CLI syntax: "single:<v>:<N>" or "csv:<c0>,<c1>,...".
ChipConfig parse_chip_config(std::string_view text, const Graph& g);

enum class StrategyKind { MinIndex, MaxChips, Random, Fifo };

struct FiringStrategy {
  StrategyKind kind = StrategyKind::MinIndex;
  std::uint64_t seed = 0;  // Random only

  static FiringStrategy min_index() { return {StrategyKind::MinIndex, 0}; }
  static FiringStrategy max_chips() { return {StrategyKind::MaxChips, 0}; }
  static FiringStrategy fifo() { return {StrategyKind::Fifo, 0}; }
  static FiringStrategy random(std::uint64_t seed) { return {StrategyKind::Random, seed}; }

  /// "min-index", "max-chips", "fifo" or "random"; `seed` applies to random.
  static FiringStrategy parse(std::string_view name, std::uint64_t seed = 0);
  /// "min-index", ..., "random:<seed>".
  std::string to_string() const;
  friend bool operator==(const FiringStrategy&, const FiringStrategy&) = default;
};

struct GameTrace {
  std::int64_t s = 0;                 // total moves
  std::vector<std::int64_t> x;        // firings per vertex
  ChipConfig initial;
  ChipConfig final;
  std::optional<std::vector<Vertex>> fired_sequence;
};

enum class DivergenceReason { ExceededCutoff, NecessaryConditionViolated };

const char* to_string(DivergenceReason r);

struct Divergence {
  DivergenceReason reason = DivergenceReason::ExceededCutoff;
  std::int64_t moves_played = 0;
  std::int64_t cutoff = 0;
};

class GameOutcome {
 public:
  GameOutcome(GameTrace t) : v_(std::move(t)) {}
  GameOutcome(Divergence d) : v_(d) {}

  bool terminated() const noexcept { return std::holds_alternative<GameTrace>(v_); }
  const GameTrace& trace() const { return std::get<GameTrace>(v_); }
  const Divergence& divergence() const { return std::get<Divergence>(v_); }
  std::int64_t cutoff_used() const noexcept { return cutoff_used_; }
  void set_cutoff_used(std::int64_t c) noexcept { cutoff_used_ = c; }

 private:
  std::variant<GameTrace, Divergence> v_;
  std::int64_t cutoff_used_ = 0;
};

enum class TerminationClass { GuaranteedTerminates, MayTerminate, NeverTerminates };

const char* to_string(TerminationClass c);

/// N < m: every configuration terminates. N > 2m - n: none does.
TerminationClass termination_class(const Graph& g, std::int64_t N);

struct PlayOptions {
  /// Maximum number of moves; unset means the floor of the best proven
  /// upper bound on a terminating game with this many chips.
  std::optional<std::int64_t> cutoff;
  bool record_sequence = false;
};

/// floor of best_bound(g, N).
std::int64_t default_cutoff(const Graph& g, std::int64_t N);

/// Plays the game to completion. Needs a connected graph with at least
/// two vertices and a configuration of matching length.
GameOutcome play(const Graph& g, const ChipConfig& a, const FiringStrategy& strategy,
                 const PlayOptions& opts = {});

struct ConfluenceReport {
  bool agree = true;
  std::vector<FiringStrategy> strategies;
  std::vector<GameTrace> traces;
  std::string mismatch;  // first disagreement, if any
};

/// Plays `a` under every strategy and compares (s, x, final). Throws
/// EngineError if any run diverges and std::invalid_argument for fewer than
/// two strategies.
ConfluenceReport confluence_check(const Graph& g, const ChipConfig& a,
                                  std::span<const FiringStrategy> strategies, const PlayOptions& opts = {});

/// L x == initial - final in exact integer arithmetic.
bool verify_firing_identity(const Graph& g, const GameTrace& trace);

/// For each unfired vertex k, |s + n (L^dagger row k) . (a - b)|; returns the
/// largest. Throws EngineError when every vertex fired.
double verify_duration_identity(const Graph& g, const GameTrace& trace, const Eigen::MatrixXd& ldag);

}  // namespace chipfire

#endif  // CHIPFIRE_CHIP_ENGINE_HPP
