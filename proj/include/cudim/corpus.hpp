#pragma once

// Seeded random finite presentations for the permanence suites.

#include "cudim/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cudim {

struct CorpusEntry {
  std::string origin;  // e.g. "sub(E(3);1)" or "quot(sub(E(1)+E(2);(1,0)))"
  FinitePresentation presentation;
};

/// The sub-monoid generated by `gens`, elements renumbered with zero first
/// and the rest in index order of `s`.
FinitePresentation generated_submonoid(const FinitePresentation& s,
                                       const std::vector<ElementId>& gens);

/// `count` valid presentations with at most `max_size` elements. Sources:
/// sub-monoids of E_m and of E_a + E_b, their quotients by ideals, and
/// truncations of NbarPrime. Deterministic in `seed`.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed,
                                       std::size_t max_size = 6);

inline constexpr std::uint64_t default_seed = 20240611;

}  // namespace cudim
