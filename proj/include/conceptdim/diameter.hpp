#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conceptdim/concept_enum.hpp"
#include "conceptdim/context.hpp"
#include "conceptdim/measure.hpp"
#include "conceptdim/pattern_structure.hpp"

namespace conceptdim {

enum class DiameterMode { kExact, kSearch };

const char* to_string(DiameterMode mode);
DiameterMode diameter_mode_from_string(const std::string& name);

// Result of one observed-diameter evaluation over a binary context.
// value = |extent| / |G| of the best concept whose intent measure lies
// strictly inside the band, or 0 when no concept qualifies.
struct BinaryDiameter {
  double value = 0.0;
  std::int64_t extent_count = 0;
  std::int64_t denom = 0;  // |G|
  bool found = false;
  std::optional<FormalConcept> witness;
  std::uint64_t prime_ops = 0;
  std::size_t band_count = 0;  // concepts inside the band; exact mode only
};

// Full-enumeration oracle for the observed diameter.
BinaryDiameter observed_diameter_exact(const FormalContext& context, const AlphaBand& band,
                                       std::size_t max_concepts = kDefaultConceptLimit);

// Targeted search: seeds concepts from single attributes, then grows frontier
// intents one attribute at a time, pruning duplicates with a canonicity check
// plus canonical-intent dedup. Branches already inside the band are recorded
// and not expanded; branches at or past the upper bound are dropped. Agrees
// with the oracle by construction.
BinaryDiameter observed_diameter_search(const FormalContext& context, const AlphaBand& band,
                                        std::size_t max_concepts = kDefaultConceptLimit);

BinaryDiameter observed_diameter(const FormalContext& context, const AlphaBand& band,
                                 DiameterMode mode,
                                 std::size_t max_concepts = kDefaultConceptLimit);

// Convenience overloads taking a plain alpha.
double observed_diameter_exact(const FormalContext& context, double alpha);
double observed_diameter_search(const FormalContext& context, double alpha);

// Pattern-structure variant of the observed diameter.
struct PsDiameter {
  double value = 0.0;
  std::int64_t extent_count = 0;
  std::int64_t denom = 0;  // |G|
  bool found = false;
  std::optional<PatternConcept> witness;
  std::uint64_t diamond_ops = 0;
  std::size_t band_count = 0;  // exact mode only
};

// Exact mode enumerates all pattern concepts. Search mode starts from the
// top concept and shrinks extents via object-removal closures; the interval
// measure only grows as extents shrink, so band pruning mirrors the binary
// search and both modes return the same value.
PsDiameter observed_diameter_ps(const IntervalPatternStructure& ps, const AlphaBand& band,
                                const MeasureSpec& spec,
                                DiameterMode mode = DiameterMode::kExact,
                                std::size_t max_concepts = kDefaultConceptLimit);

double observed_diameter_ps(const IntervalPatternStructure& ps, double alpha,
                            const MeasureSpec& spec);

// Diam evaluated on the grid alpha = i/ell for i = 0..ell, plus the total
// number of prime/diamond applications spent.
struct DiameterProfile {
  std::size_t ell = 1;
  std::vector<double> alphas;
  std::vector<double> diam;
  std::vector<std::int64_t> diam_counts;  // extent cardinalities; empty if unknown
  std::int64_t denom = 0;                 // |G|; 0 if unknown
  std::uint64_t prime_ops = 0;
  DiameterMode mode = DiameterMode::kExact;
};

// Per-grid-point evaluations are independent; `threads` > 1 fans them out
// without changing any output.
DiameterProfile diameter_profile(const FormalContext& context, std::size_t ell,
                                 DiameterMode mode, std::size_t threads = 1,
                                 std::size_t max_concepts = kDefaultConceptLimit);

DiameterProfile diameter_profile(const IntervalPatternStructure& ps, const MeasureSpec& spec,
                                 std::size_t ell, DiameterMode mode, std::size_t threads = 1,
                                 std::size_t max_concepts = kDefaultConceptLimit);

// Empirical data for the complexity claim: prime applications spent by the
// search versus the number k(alpha) of band concepts reported by the oracle.
struct PrimeOpCensus {
  std::uint64_t search_ops = 0;
  std::uint64_t oracle_ops = 0;
  std::size_t band_concepts = 0;
  double search_value = 0.0;
  double exact_value = 0.0;
};

PrimeOpCensus prime_op_census(const FormalContext& context, const AlphaBand& band,
                              std::size_t max_concepts = kDefaultConceptLimit);

}  // namespace conceptdim
