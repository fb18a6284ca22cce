#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/complex.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/order_complex.hpp"
#include "lefschetz/topology.hpp"

namespace lefschetz {

/// Every 1-cell's facet coefficients sum to zero in the ring (vacuous
/// without 1-cells).
bool is_augmentable(const LefschetzComplex& x);

/// Lefschetz homology of the closure of one cell against the point profile.
struct LocalCheck {
  std::string cell;
  bool passes = false;
  HomologyProfile profile;
};

/// One entry per cell, in canonical order. X is first re-read in `ring`.
std::vector<LocalCheck> local_condition(const LefschetzComplex& x, const Ring& ring);

/// The acyclic-closure theorem evaluated on one complex: hypotheses,
/// conclusion, and whether the instance is consistent with the theorem.
struct TheoremReport {
  Ring ring = Ring::integers();
  bool augmentable = false;
  std::vector<LocalCheck> local_condition;
  bool hypothesis_holds = false;
  HomologyProfile lefschetz_profile;
  HomologyProfile singular_profile;
  bool conclusion_holds = false;
  /// False only for an augmentable complex meeting the local condition whose
  /// Lefschetz and singular homologies differ.
  bool consistent_with_theorem = true;

  std::vector<std::string> failing_cells() const;
};

TheoremReport check_main_theorem(const LefschetzComplex& x, const Ring& ring,
                                 std::size_t simplex_cap = kDefaultSimplexCap);

struct CorollaryReport {
  Ring ring = Ring::integers();
  bool augmentable = false;
  std::size_t closed_sets = 0;
  /// Closure of every cell has point homology.
  bool local_condition_holds = false;
  /// Every closed subcomplex has isomorphic Lefschetz and singular homology.
  bool all_closed_isomorphic = false;
  /// First closed subcomplex (enumeration order) where they differ.
  std::optional<std::vector<std::string>> first_failure;
  bool directions_agree = false;
  /// The equivalence is only claimed for augmentable complexes.
  bool consistent_with_corollary = true;
};

/// Throws TooManyClosedSets.
CorollaryReport check_corollary_all_closed(const LefschetzComplex& x, const Ring& ring,
                                           std::size_t cap = kDefaultClosedSetCap);

struct SearchConfig {
  std::uint64_t seed = 42;
  std::size_t budget = 10000;
  std::size_t jobs = 1;
  Ring ring = Ring::integers();
  /// Generator bounds; seed and mode are set per candidate.
  GeneratorConfig generator;
  /// Candidate i is drawn with modes[i % modes.size()].
  std::vector<GeneratorMode> modes{GeneratorMode::BasisChange};
  /// Additionally require isomorphic homology on every closed subcomplex.
  bool corollary_filter = false;
  std::size_t closed_set_cap = kDefaultClosedSetCap;
  std::size_t simplex_cap = kDefaultSimplexCap;
};

/// An augmentable complex whose Lefschetz and singular homologies agree
/// although some cell closure is not acyclic.
struct ConverseCandidate {
  std::size_t index = 0;
  GeneratorConfig config;
  LefschetzComplex complex;
  TheoremReport report;
  /// render_lef of the complex; the candidate was re-checked from this text.
  std::string serialized;
};

struct SearchSummary {
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::size_t hypothesis_holds = 0;
  /// Instances contradicting the theorem; expected to stay zero.
  std::size_t theorem_violations = 0;
  /// render_lef of every violating complex.
  std::vector<std::string> violation_dumps;
  std::vector<ConverseCandidate> candidates;
};

/// Seed of candidate `index` under master seed `seed`, independent of
/// scheduling.
std::uint64_t candidate_seed(std::uint64_t seed, std::size_t index);

/// Evaluates `budget` generated complexes on `jobs` worker threads. Each
/// candidate is reported through `on_candidate` in index order after being
/// re-verified from its serialized form. Complexes exceeding the simplex or
/// closed-set caps are counted as skipped.
SearchSummary search_converse(
    const SearchConfig& cfg,
    const std::function<void(const ConverseCandidate&)>& on_candidate = {});

/// Provenance header plus .lef body, for appending to a results file.
std::string render_candidate(const SearchConfig& cfg, const ConverseCandidate& c,
                             const std::string& timestamp);

}  // namespace lefschetz
