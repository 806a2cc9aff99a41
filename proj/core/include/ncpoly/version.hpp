#pragma once

#include <cstdint>

namespace ncpoly {

inline constexpr const char* kVersion = "0.1.0";

// Default seed for every sampled check; reports embed the seed actually used.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// Enumeration caps. Operations throw SizeLimitError above these unless the
// caller raises them explicitly.
struct Caps {
  int graph_vertices = 24;        // subset enumeration on graphs
  int polytope_dim = 16;          // double-description dimension
  std::uint64_t basis_subsets = 2'000'000;  // C(m, d) bound for the brute-force oracle
  int cycle_verifier = 13;        // largest n for cycle theorem verifiers
  int anticycle_verifier = 9;     // largest n for anti-cycle theorem verifiers
  int scenario_measurements = 12; // global-section enumeration (2^|X| vertices)
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace ncpoly
