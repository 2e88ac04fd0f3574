// generators.hpp - named graph families used as experiment inputs.

#ifndef CHIPFIRE_GENERATORS_HPP
#define CHIPFIRE_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chipfire/graph.hpp"
#include "chipfire/srg.hpp"

namespace chipfire {

enum class Family { Petersen, Schlafli, Paley, Triangular, Complete, Cycle, Gnp };

/// Family plus the integer/real arguments it was built from.
struct FamilySpec {
  Family family = Family::Petersen;
  std::int64_t size = 0;  // q, m or n depending on the family
  double p = 0.0;         // gnp only
  std::uint64_t seed = 0; // gnp only

  /// CLI syntax: petersen, schlafli, paley:109, triangular:21, complete:4,
  /// cycle:6, gnp:30:0.5:42.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyTag {
  FamilySpec spec;
  std::string display_name;  // e.g. "Paley(109)"
  bool vertex_transitive = false;
  std::optional<srg::SrgParams> claimed_srg;
};

struct GeneratedGraph {
  Graph graph;
  FamilyTag tag;
};

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

GeneratedGraph petersen();
GeneratedGraph schlafli();
/// The intersection graph of the 27 lines (complement of the Schlafli graph).
Graph twenty_seven_lines_graph();
GeneratedGraph paley(std::int64_t q);
GeneratedGraph triangular(std::int64_t m);
GeneratedGraph complete(std::int64_t n);
GeneratedGraph cycle(std::int64_t n);
/// Erdos-Renyi G(n,p), deterministic in (n, p, seed); resamples until the
/// result is connected and gives up after 1000 attempts.
GeneratedGraph gnp(std::int64_t n, double p, std::uint64_t seed);

GeneratedGraph generate(const FamilySpec& spec);

bool is_prime(std::int64_t q);

/// Counter-based generator: draw(i) depends only on (seed, stream, i).
/// SplitMix64 finalizer over a Weyl sequence.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t draw(std::uint64_t counter) const noexcept;
  /// Uniform in [0, 1) with 53 bits.
  double uniform(std::uint64_t counter) const noexcept;

  /// Sequential convenience wrapper.
  std::uint64_t next() noexcept { return draw(counter_++); }
  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace chipfire

#endif  // CHIPFIRE_GENERATORS_HPP
