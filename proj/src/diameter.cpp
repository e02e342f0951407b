#include "conceptdim/diameter.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim {

const char* to_string(DiameterMode mode) {
  return mode == DiameterMode::kExact ? "exact" : "search";
}

DiameterMode diameter_mode_from_string(const std::string& name) {
  if (name == "exact") return DiameterMode::kExact;
  if (name == "search") return DiameterMode::kSearch;
  throw InvalidInputError("unknown diameter mode: " + name);
}

namespace {

// Shared best-so-far tracking; ties go to the lectically smallest key so
// exact and search modes report identical witnesses.
template <typename ConceptT>
struct Best {
  std::int64_t count = -1;
  DynamicBitset key;
  std::optional<ConceptT> witness;

  void offer(std::int64_t candidate_count, const DynamicBitset& candidate_key,
             const ConceptT& c) {
    if (candidate_count > count ||
        (candidate_count == count && DynamicBitset::lectic_less(candidate_key, key))) {
      count = candidate_count;
      key = candidate_key;
      witness = c;
    }
  }
};

}  // namespace

BinaryDiameter observed_diameter_exact(const FormalContext& context, const AlphaBand& band,
                                       std::size_t max_concepts) {
  BinaryDiameter result;
  result.denom = static_cast<std::int64_t>(context.object_count());
  if (band.empty()) return result;

  const auto m = static_cast<std::int64_t>(context.attribute_count());
  Best<FormalConcept> best;
  NextClosureEnumerator en(context);
  std::size_t seen = 0;
  while (auto c = en.next()) {
    if (++seen > max_concepts)
      throw ResourceLimitError("diameter oracle exceeded the concept bound of " +
                               std::to_string(max_concepts));
    MeasureValue nu = MeasureValue::ratio(static_cast<std::int64_t>(c->intent.count()), m);
    if (!band.contains(nu)) continue;
    ++result.band_count;
    best.offer(static_cast<std::int64_t>(c->extent.count()), c->intent, *c);
  }
  result.prime_ops = en.prime_ops();
  if (best.count >= 0) {
    result.found = true;
    result.extent_count = best.count;
    result.witness = std::move(best.witness);
    if (result.denom > 0)
      result.value = static_cast<double>(result.extent_count) /
                     static_cast<double>(result.denom);
  }
  return result;
}

BinaryDiameter observed_diameter_search(const FormalContext& context, const AlphaBand& band,
                                        std::size_t max_concepts) {
  BinaryDiameter result;
  result.denom = static_cast<std::int64_t>(context.object_count());
  if (band.empty()) return result;

  const std::size_t attr_count = context.attribute_count();
  const auto m = static_cast<std::int64_t>(attr_count);
  Best<FormalConcept> best;
  std::unordered_set<DynamicBitset, BitsetHash> visited;
  std::deque<FormalConcept> frontier;  // intents with measure at or below alpha

  auto classify = [&](FormalConcept&& c) {
    MeasureValue nu = MeasureValue::ratio(static_cast<std::int64_t>(c.intent.count()), m);
    if (band.contains(nu)) {
      best.offer(static_cast<std::int64_t>(c.extent.count()), c.intent, c);
    } else if (band.below_or_at_lower(nu)) {
      if (visited.size() > max_concepts)
        throw ResourceLimitError("diameter search exceeded the concept bound of " +
                                 std::to_string(max_concepts));
      frontier.push_back(std::move(c));
    }
    // Measures at or past the upper bound only grow with the intent; drop.
  };

  // Seed concepts from single attributes: (m', m'') for every attribute.
  for (std::size_t j = 0; j < attr_count; ++j) {
    DynamicBitset single(attr_count);
    single.set(j);
    DynamicBitset extent = context.intent_prime(single);
    DynamicBitset intent = context.extent_prime(extent);
    result.prime_ops += 2;
    if (visited.insert(intent).second)
      classify(FormalConcept{std::move(extent), std::move(intent)});
  }

  // Grow frontier intents one attribute at a time.
  while (!frontier.empty()) {
    FormalConcept node = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t n = 0; n < attr_count; ++n) {
      if (node.intent.test(n)) continue;
      DynamicBitset candidate = node.intent;
      candidate.set(n);
      DynamicBitset extent = context.intent_prime(candidate);
      DynamicBitset intent = context.extent_prime(extent);
      result.prime_ops += 2;
      // Canonicity check: reject generations that introduce an attribute
      // below the one just added.
      if (intent.any_diff_below(node.intent, n)) continue;
      if (!visited.insert(intent).second) continue;
      classify(FormalConcept{std::move(extent), std::move(intent)});
    }
  }

  if (best.count >= 0) {
    result.found = true;
    result.extent_count = best.count;
    result.witness = std::move(best.witness);
    if (result.denom > 0)
      result.value = static_cast<double>(result.extent_count) /
                     static_cast<double>(result.denom);
  }
  return result;
}

BinaryDiameter observed_diameter(const FormalContext& context, const AlphaBand& band,
                                 DiameterMode mode, std::size_t max_concepts) {
  return mode == DiameterMode::kExact
             ? observed_diameter_exact(context, band, max_concepts)
             : observed_diameter_search(context, band, max_concepts);
}

double observed_diameter_exact(const FormalContext& context, double alpha) {
  return observed_diameter_exact(context, AlphaBand::from_double(alpha)).value;
}

double observed_diameter_search(const FormalContext& context, double alpha) {
  return observed_diameter_search(context, AlphaBand::from_double(alpha)).value;
}

PsDiameter observed_diameter_ps(const IntervalPatternStructure& ps, const AlphaBand& band,
                                const MeasureSpec& spec, DiameterMode mode,
                                std::size_t max_concepts) {
  spec.validate(ps.component_count());
  PsDiameter result;
  result.denom = static_cast<std::int64_t>(ps.object_count());
  if (band.empty() || ps.object_count() == 0) return result;

  Best<PatternConcept> best;
  auto offer = [&](const PatternConcept& c) {
    best.offer(static_cast<std::int64_t>(c.extent.count()), c.extent, c);
  };

  if (mode == DiameterMode::kExact) {
    PatternConceptEnumerator en(ps);
    std::size_t seen = 0;
    while (auto c = en.next()) {
      if (++seen > max_concepts)
        throw ResourceLimitError("pattern diameter oracle exceeded the concept bound of " +
                                 std::to_string(max_concepts));
      MeasureValue nu = interval_measure(c->description, spec);
      if (!band.contains(nu)) continue;
      ++result.band_count;
      offer(*c);
    }
    result.diamond_ops = en.diamond_ops();
  } else {
    // Shrink extents from the top concept; the interval measure is monotone
    // non-decreasing along extent removal, so the band rules mirror the
    // binary search.
    std::unordered_set<DynamicBitset, BitsetHash> visited;
    std::deque<PatternConcept> frontier;

    auto classify = [&](PatternConcept&& c) {
      MeasureValue nu = interval_measure(c.description, spec);
      if (band.contains(nu)) {
        offer(c);
      } else if (band.below_or_at_lower(nu)) {
        if (visited.size() > max_concepts)
          throw ResourceLimitError("pattern diameter search exceeded the concept bound of " +
                                   std::to_string(max_concepts));
        frontier.push_back(std::move(c));
      }
    };

    DynamicBitset all = DynamicBitset::full(ps.object_count());
    PatternConcept top = ps.pattern_close(all);
    result.diamond_ops += 2;
    visited.insert(top.extent);
    classify(std::move(top));

    while (!frontier.empty()) {
      PatternConcept node = std::move(frontier.front());
      frontier.pop_front();
      if (node.extent.count() <= 1) continue;  // nothing left to remove
      std::vector<std::size_t> members = node.extent.to_indices();
      for (std::size_t g : members) {
        DynamicBitset shrunk = node.extent;
        shrunk.reset(g);
        PatternConcept closed = ps.pattern_close(shrunk);
        result.diamond_ops += 2;
        if (!visited.insert(closed.extent).second) continue;
        classify(std::move(closed));
      }
    }
  }

  if (best.count >= 0) {
    result.found = true;
    result.extent_count = best.count;
    result.witness = std::move(best.witness);
    if (result.denom > 0)
      result.value = static_cast<double>(result.extent_count) /
                     static_cast<double>(result.denom);
  }
  return result;
}

double observed_diameter_ps(const IntervalPatternStructure& ps, double alpha,
                            const MeasureSpec& spec) {
  return observed_diameter_ps(ps, AlphaBand::from_double(alpha), spec).value;
}

namespace {

template <typename EvalFn>
DiameterProfile profile_on_grid(std::size_t ell, DiameterMode mode, std::size_t threads,
                                std::int64_t denom, EvalFn&& eval) {
  if (ell < 1) throw InvalidInputError("profile resolution ell must be at least 1");
  DiameterProfile profile;
  profile.ell = ell;
  profile.mode = mode;
  profile.denom = denom;
  profile.alphas.resize(ell + 1);
  profile.diam.resize(ell + 1);
  profile.diam_counts.resize(ell + 1);
  std::vector<std::uint64_t> ops(ell + 1, 0);
  parallel_for_index(ell + 1, threads, [&](std::size_t i) {
    Fraction alpha(static_cast<std::int64_t>(i), static_cast<std::int64_t>(ell));
    auto [value, count, op_count] = eval(AlphaBand::from_fraction(alpha));
    profile.alphas[i] = alpha.to_double();
    profile.diam[i] = value;
    profile.diam_counts[i] = count;
    ops[i] = op_count;
  });
  for (std::uint64_t o : ops) profile.prime_ops += o;
  for (std::size_t i = 0; i + 1 < profile.diam_counts.size(); ++i) {
    if (profile.diam_counts[i] < profile.diam_counts[i + 1])
      throw std::logic_error("diameter profile is not non-increasing in alpha");
  }
  return profile;
}

}  // namespace

DiameterProfile diameter_profile(const FormalContext& context, std::size_t ell,
                                 DiameterMode mode, std::size_t threads,
                                 std::size_t max_concepts) {
  return profile_on_grid(
      ell, mode, threads, static_cast<std::int64_t>(context.object_count()),
      [&](const AlphaBand& band) {
        BinaryDiameter d = observed_diameter(context, band, mode, max_concepts);
        return std::tuple<double, std::int64_t, std::uint64_t>(d.value, d.extent_count,
                                                               d.prime_ops);
      });
}

DiameterProfile diameter_profile(const IntervalPatternStructure& ps, const MeasureSpec& spec,
                                 std::size_t ell, DiameterMode mode, std::size_t threads,
                                 std::size_t max_concepts) {
  return profile_on_grid(
      ell, mode, threads, static_cast<std::int64_t>(ps.object_count()),
      [&](const AlphaBand& band) {
        PsDiameter d = observed_diameter_ps(ps, band, spec, mode, max_concepts);
        return std::tuple<double, std::int64_t, std::uint64_t>(d.value, d.extent_count,
                                                               d.diamond_ops);
      });
}

PrimeOpCensus prime_op_census(const FormalContext& context, const AlphaBand& band,
                              std::size_t max_concepts) {
  PrimeOpCensus census;
  BinaryDiameter search = observed_diameter_search(context, band, max_concepts);
  BinaryDiameter exact = observed_diameter_exact(context, band, max_concepts);
  census.search_ops = search.prime_ops;
  census.oracle_ops = exact.prime_ops;
  census.band_concepts = exact.band_count;
  census.search_value = search.value;
  census.exact_value = exact.value;
  return census;
}

}  // namespace conceptdim
