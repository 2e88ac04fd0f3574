// golden.hpp - published reference cells for the two reproduction tables.
//
// Chips all start on vertex 0. Paley(109) uses the computed c = 27.
#ifndef CHIPFIRE_CLI_GOLDEN_HPP
#define CHIPFIRE_CLI_GOLDEN_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace chipfire::cli {

struct GoldenRow {
  std::string_view family;
  std::string_view label;
  std::int64_t N;
  std::int64_t tardos;
  std::int64_t bls;
  std::int64_t main_implicit;
  std::int64_t srg;
  std::int64_t s;
};

inline constexpr std::array<GoldenRow, 3> kGoldenRows{{
    {"petersen", "Petersen", 14, 280, 140, 24, 72, 8},
    {"schlafli", "Schläfli", 215, 11610, 967, 81, 132, 13},
    {"paley:109", "Paley(109)", 2900, 632200, 12828, 318, 536, 53},
}};

}  // namespace chipfire::cli

#endif  // CHIPFIRE_CLI_GOLDEN_HPP
