#include "lefschetz/theorem.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lefschetz/errors.hpp"

namespace lefschetz {

bool is_augmentable(const LefschetzComplex& x) {
  for (CellIndex e : x.cells_of_dim(1)) {
    Integer sum = 0;
    for (const auto& [y, v] : x.boundary(e)) sum += v;
    if (x.ring().reduce(sum) != 0) return false;
  }
  return true;
}

std::vector<LocalCheck> local_condition(const LefschetzComplex& x, const Ring& ring) {
  const LefschetzComplex y = with_ring(x, ring);
  const HomologyProfile point = HomologyProfile::point(ring);
  std::vector<LocalCheck> out;
  out.reserve(y.size());
  for (CellIndex c = 0; c < y.size(); ++c) {
    LocalCheck check;
    check.cell = y.id(c);
    check.profile = lefschetz_homology(restrict_to(y, closure(y, {c})), ring);
    check.passes = check.profile == point;
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<std::string> TheoremReport::failing_cells() const {
  std::vector<std::string> out;
  for (const auto& c : local_condition) {
    if (!c.passes) out.push_back(c.cell);
  }
  return out;
}

TheoremReport check_main_theorem(const LefschetzComplex& x, const Ring& ring,
                                 std::size_t simplex_cap) {
  const LefschetzComplex y = with_ring(x, ring);
  TheoremReport r;
  r.ring = ring;
  r.augmentable = is_augmentable(y);
  r.local_condition = local_condition(y, ring);
  r.hypothesis_holds = r.augmentable && r.failing_cells().empty();
  r.lefschetz_profile = lefschetz_homology(y, ring);
  r.singular_profile = finite_space_homology(y, ring, simplex_cap);
  r.conclusion_holds = r.lefschetz_profile == r.singular_profile;
  r.consistent_with_theorem = !(r.hypothesis_holds && !r.conclusion_holds);
  return r;
}

CorollaryReport check_corollary_all_closed(const LefschetzComplex& x, const Ring& ring,
                                           std::size_t cap) {
  const LefschetzComplex y = with_ring(x, ring);
  CorollaryReport r;
  r.ring = ring;
  r.augmentable = is_augmentable(y);
  const auto local = local_condition(y, ring);
  r.local_condition_holds =
      std::all_of(local.begin(), local.end(), [](const LocalCheck& c) { return c.passes; });

  const auto closed_sets = enumerate_closed_sets(y, cap);
  r.closed_sets = closed_sets.size();
  r.all_closed_isomorphic = true;
  for (const auto& set : closed_sets) {
    const LefschetzComplex sub = restrict_to(y, set);
    if (lefschetz_homology(sub, ring) != finite_space_homology(sub, ring)) {
      r.all_closed_isomorphic = false;
      r.first_failure = cell_ids(y, set);
      break;
    }
  }
  r.directions_agree = r.local_condition_holds == r.all_closed_isomorphic;
  r.consistent_with_corollary = !r.augmentable || r.directions_agree;
  return r;
}

std::uint64_t candidate_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer over (seed, index).
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(static_cast<std::uint64_t>(index)));
}

namespace {

enum class Verdict { Skipped, Rejected, Candidate };

struct Outcome {
  Verdict verdict = Verdict::Rejected;
  bool hypothesis = false;
  bool violation = false;
  std::string dump;
  std::optional<ConverseCandidate> candidate;
};

bool is_converse_candidate(const TheoremReport& r) {
  return r.augmentable && r.conclusion_holds && !r.hypothesis_holds;
}

Outcome evaluate(const SearchConfig& cfg, std::size_t index) {
  Outcome out;
  GeneratorConfig gen = cfg.generator;
  gen.seed = candidate_seed(cfg.seed, index);
  gen.mode = cfg.modes[index % cfg.modes.size()];
  try {
    const LefschetzComplex x = with_ring(random_complex(gen), cfg.ring);
    TheoremReport report = check_main_theorem(x, cfg.ring, cfg.simplex_cap);
    out.hypothesis = report.hypothesis_holds;
    if (!report.consistent_with_theorem) {
      out.violation = true;
      out.dump = render_lef(x);
    }
    if (!is_converse_candidate(report)) return out;
    if (cfg.corollary_filter &&
        !check_corollary_all_closed(x, cfg.ring, cfg.closed_set_cap).all_closed_isomorphic) {
      return out;
    }

    ConverseCandidate c;
    c.index = index;
    c.config = gen;
    c.serialized = render_lef(x);
    const TheoremReport again =
        check_main_theorem(parse_lef(c.serialized), cfg.ring, cfg.simplex_cap);
    if (!is_converse_candidate(again) || again.lefschetz_profile != report.lefschetz_profile ||
        again.singular_profile != report.singular_profile) {
      throw std::logic_error("converse candidate " + std::to_string(index) +
                             " did not survive re-verification");
    }
    c.complex = x;
    c.report = std::move(report);
    out.verdict = Verdict::Candidate;
    out.candidate = std::move(c);
  } catch (const TooManySimplices&) {
    out.verdict = Verdict::Skipped;
  } catch (const TooManyClosedSets&) {
    out.verdict = Verdict::Skipped;
  }
  return out;
}

}  // namespace

SearchSummary search_converse(const SearchConfig& cfg,
                              const std::function<void(const ConverseCandidate&)>& on_candidate) {
  if (cfg.budget == 0) throw std::invalid_argument("search budget must be positive");
  if (cfg.modes.empty()) throw std::invalid_argument("search needs at least one generator mode");
  cfg.generator.validate();

  SearchSummary summary;
  std::vector<std::optional<Outcome>> slots(cfg.budget);
  std::size_t next_emit = 0;
  std::mutex collector;
  std::atomic<std::size_t> next_index{0};
  std::exception_ptr failure;

  // Outcomes are folded into the summary strictly in index order, whatever
  // order the workers finish in.
  auto collect = [&](std::size_t index, Outcome outcome) {
    std::lock_guard lock(collector);
    slots[index] = std::move(outcome);
    while (next_emit < slots.size() && slots[next_emit]) {
      Outcome& o = *slots[next_emit];
      ++summary.evaluated;
      if (o.verdict == Verdict::Skipped) ++summary.skipped;
      if (o.hypothesis) ++summary.hypothesis_holds;
      if (o.violation) {
        ++summary.theorem_violations;
        summary.violation_dumps.push_back(std::move(o.dump));
      }
      if (o.candidate) {
        if (on_candidate) on_candidate(*o.candidate);
        summary.candidates.push_back(std::move(*o.candidate));
      }
      slots[next_emit].reset();
      ++next_emit;
    }
  };
  auto worker = [&]() {
    try {
      for (std::size_t i = next_index++; i < cfg.budget; i = next_index++) {
        collect(i, evaluate(cfg, i));
      }
    } catch (...) {
      std::lock_guard lock(collector);
      if (!failure) failure = std::current_exception();
      next_index = cfg.budget;
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, cfg.budget));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return summary;
}

std::string render_candidate(const SearchConfig& cfg, const ConverseCandidate& c,
                             const std::string& timestamp) {
  std::ostringstream out;
  out << "# converse candidate: augmentable, homologies agree, local condition fails\n";
  out << "# master_seed: " << cfg.seed << '\n';
  out << "# index: " << c.index << '\n';
  out << "# seed: " << c.config.seed << '\n';
  out << "# generator: mode=" << mode_name(c.config.mode)
      << " max_vertices=" << c.config.max_vertices << " max_facets=" << c.config.max_facets
      << " max_dim=" << c.config.max_dim << " coefficient_bound=" << c.config.coefficient_bound
      << " basis_steps=" << c.config.basis_steps << '\n';
  out << "# timestamp: " << timestamp << '\n';
  out << "# fails_at:";
  for (const auto& id : c.report.failing_cells()) out << ' ' << id;
  out << '\n';
  auto profile = [&](const char* name, const HomologyProfile& p) {
    out << "# " << name << ':';
    for (std::size_t n = 0; n < std::max<std::size_t>(p.degree_count(), 1); ++n) {
      out << " H_" << n << '=' << format_group(p.degree(n), p.ring()) << ';';
    }
    out << '\n';
  };
  profile("lefschetz", c.report.lefschetz_profile);
  profile("singular", c.report.singular_profile);
  out << c.serialized;
  return out.str();
}

}  // namespace lefschetz
