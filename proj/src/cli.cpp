#include "lefschetz/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lefschetz/errors.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/order_complex.hpp"
#include "lefschetz/theorem.hpp"
#include "lefschetz/topology.hpp"

namespace lefschetz::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string format;
  std::string ring;
  std::size_t jobs = 1;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string infer_format(const std::string& path) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".simp") || ends_with(".simplicial")) return "simplicial";
  if (ends_with(".cub") || ends_with(".cubical")) return "cubical";
  return "lef";
}

LefschetzComplex load(const InputOptions& opts, std::istream& in) {
  const std::string text = read_input(opts.path, in);
  const std::string format = opts.format.empty() ? infer_format(opts.path) : opts.format;
  if (format == "simplicial") return import_simplicial(parse_simplicial(text));
  if (format == "cubical") return import_cubical(parse_cubical(text));
  return parse_lef(text);
}

Ring ring_for(const InputOptions& opts, const LefschetzComplex& x) {
  return opts.ring.empty() ? x.ring() : Ring::parse(opts.ring);
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string join(const std::vector<std::string>& ids, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? sep : "") + ids[i];
  return out;
}

void print_profile(std::ostream& out, const std::string& prefix, const HomologyProfile& p,
                   std::size_t degrees) {
  for (std::size_t n = 0; n < degrees; ++n) {
    out << prefix << "H_" << n << ": " << format_group(p.degree(n), p.ring()) << '\n';
  }
}

std::size_t degrees_of(const HomologyProfile& p) {
  return std::max<std::size_t>(p.degree_count(), 1);
}

// Nonzero degrees only, e.g. "H_0: Z^3".
std::string summarize(const HomologyProfile& p) {
  std::vector<std::string> parts;
  for (std::size_t n = 0; n < p.degree_count(); ++n) {
    if (!p.degree(n).is_zero()) {
      parts.push_back("H_" + std::to_string(n) + ": " + format_group(p.degree(n), p.ring()));
    }
  }
  return parts.empty() ? "all zero" : join(parts, ", ");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_homology(const InputOptions& opts, std::istream& in, std::ostream& out) {
  const LefschetzComplex x = load(opts, in);
  const Ring ring = ring_for(opts, x);
  const HomologyProfile p = lefschetz_homology(with_ring(x, ring), ring);
  print_profile(out, "", p, degrees_of(p));
  return kExitOk;
}

int cmd_singular(const InputOptions& opts, std::istream& in, std::ostream& out) {
  const LefschetzComplex x = load(opts, in);
  const Ring ring = ring_for(opts, x);
  const HomologyProfile p = finite_space_homology(with_ring(x, ring), ring);
  print_profile(out, "", p, degrees_of(p));
  return kExitOk;
}

int cmd_check(const InputOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const LefschetzComplex x = load(opts, in);
  const Ring ring = ring_for(opts, x);
  const TheoremReport r = check_main_theorem(x, ring);
  out << "ring: " << ring.name() << '\n';
  out << "cells: " << x.size() << '\n';
  out << "augmentable: " << bool_text(r.augmentable) << '\n';
  for (const auto& c : r.local_condition) {
    out << "local." << c.cell << ": "
        << (c.passes ? std::string("pass") : "fail (" + summarize(c.profile) + ")") << '\n';
  }
  out << "hypothesis: " << bool_text(r.hypothesis_holds);
  if (!r.hypothesis_holds) {
    std::vector<std::string> why;
    if (!r.augmentable) why.push_back("not augmentable");
    const auto failing = r.failing_cells();
    if (!failing.empty()) why.push_back("fails at: " + join(failing));
    out << " (" << join(why, "; ") << ')';
  }
  out << '\n';
  const std::size_t degrees =
      std::max(degrees_of(r.lefschetz_profile), degrees_of(r.singular_profile));
  print_profile(out, "lefschetz.", r.lefschetz_profile, degrees);
  print_profile(out, "singular.", r.singular_profile, degrees);
  out << "conclusion: " << bool_text(r.conclusion_holds) << '\n';
  out << "consistent_with_theorem: " << bool_text(r.consistent_with_theorem) << '\n';
  if (!r.consistent_with_theorem) {
    err << "CRITICAL: hypotheses hold but the homologies differ\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_corollary(const InputOptions& opts, std::size_t cap, std::istream& in,
                  std::ostream& out) {
  const LefschetzComplex x = load(opts, in);
  const Ring ring = ring_for(opts, x);
  const CorollaryReport r = check_corollary_all_closed(x, ring, cap);
  out << "ring: " << ring.name() << '\n';
  out << "augmentable: " << bool_text(r.augmentable) << '\n';
  out << "closed_subcomplexes: " << r.closed_sets << '\n';
  out << "local_condition: " << bool_text(r.local_condition_holds) << '\n';
  out << "all_closed_isomorphic: " << bool_text(r.all_closed_isomorphic);
  if (r.first_failure) out << " (first failure: {" << join(*r.first_failure) << "})";
  out << '\n';
  out << "directions_agree: " << bool_text(r.directions_agree) << '\n';
  out << "consistent_with_corollary: " << bool_text(r.consistent_with_corollary) << '\n';
  return r.consistent_with_corollary ? kExitOk : kExitCheckFailed;
}

int cmd_les(const InputOptions& opts, const std::string& closed, std::istream& in,
            std::ostream& out) {
  const LefschetzComplex x = load(opts, in);
  const Ring ring = opts.ring.empty() && !x.ring().is_field() ? Ring::rationals()
                                                               : ring_for(opts, x);
  const CellSet sub = make_cell_set(x, split_ids(closed));
  const ExactSequenceReport r = long_exact_sequence(x, sub, ring);
  out << "ring: " << ring.name() << '\n';
  out << "closed: " << join(cell_ids(x, sub)) << '\n';
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    DegreeHomology h;
    h.rank = r.nodes[k].dimension;
    out << node_label(r.nodes[k]) << ": " << format_group(h, ring) << '\n';
  }
  for (std::size_t k = 0; k < r.maps.size(); ++k) {
    std::size_t rank = 0;
    {
      // Rank of the reported matrix, recomputed over the ring.
      ExactMatrix m(r.maps[k].size(), r.nodes[k].dimension, ring);
      std::vector<std::vector<Rational>> rows = r.maps[k];
      // Entries are field elements; scale each row to integers first.
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Integer lcm = 1;
        for (const auto& v : rows[i]) {
          lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          m.set(i, j, boost::multiprecision::numerator(Rational(rows[i][j] * lcm)));
        }
      }
      rank = rank_over(m, ring);
    }
    out << "map " << node_label(r.nodes[k]) << " -> " << node_label(r.nodes[k + 1])
        << ": rank " << rank << '\n';
  }
  out << "exact: " << bool_text(r.exact);
  if (r.first_failure) out << " (fails at " << node_label(r.nodes[*r.first_failure]) << ')';
  out << '\n';
  return r.exact ? kExitOk : kExitCheckFailed;
}

int cmd_excision(const InputOptions& opts, const std::string& closed, std::istream& in,
                 std::ostream& out) {
  const LefschetzComplex x = load(opts, in);
  const Ring ring = ring_for(opts, x);
  const LefschetzComplex y = with_ring(x, ring);
  const CellSet sub = make_cell_set(y, split_ids(closed));
  const HomologyProfile open_side = relative_homology(y, sub, ring);
  const HomologyProfile quotient = chain_homology(quotient_chain_complex(y, sub), ring);
  const bool agree = excision_check(y, sub, ring);
  const std::size_t degrees = std::max(degrees_of(open_side), degrees_of(quotient));
  out << "ring: " << ring.name() << '\n';
  out << "closed: " << join(cell_ids(y, sub)) << '\n';
  print_profile(out, "complement.", open_side, degrees);
  print_profile(out, "quotient.", quotient, degrees);
  out << "agree: " << bool_text(agree) << '\n';
  return agree ? kExitOk : kExitCheckFailed;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct SearchOptions {
  SearchConfig cfg;
  std::string mode = "basis-change";
  std::string ring = "Z";
  std::string out_path;
  std::string timestamp;
};

int cmd_search(SearchOptions so, std::size_t jobs, std::ostream& out, std::ostream& err) {
  SearchConfig& cfg = so.cfg;
  cfg.jobs = jobs;
  cfg.ring = Ring::parse(so.ring);
  if (so.mode == "all") {
    cfg.modes = {GeneratorMode::SimplicialRandom, GeneratorMode::CubicalRandom,
                 GeneratorMode::BasisChange};
  } else {
    cfg.modes = {parse_mode(so.mode)};
  }
  const std::string timestamp = so.timestamp.empty() ? utc_now() : so.timestamp;
  std::ofstream results;
  if (!so.out_path.empty()) {
    results.open(so.out_path, std::ios::app);
    if (!results) throw Error("cannot open " + so.out_path);
  }

  std::vector<std::string> lines;
  const SearchSummary s = search_converse(cfg, [&](const ConverseCandidate& c) {
    lines.push_back("candidate: index=" + std::to_string(c.index) +
                    " seed=" + std::to_string(c.config.seed) +
                    " mode=" + mode_name(c.config.mode) +
                    " fails_at=" + join(c.report.failing_cells()) + " reverified=true");
    if (results) results << render_candidate(cfg, c, timestamp) << '\n';
  });

  std::string modes;
  for (std::size_t i = 0; i < cfg.modes.size(); ++i) {
    modes += (i ? "," : "") + mode_name(cfg.modes[i]);
  }
  out << "seed: " << cfg.seed << '\n';
  out << "budget: " << cfg.budget << '\n';
  out << "ring: " << cfg.ring.name() << '\n';
  out << "modes: " << modes << '\n';
  out << "filter: " << (cfg.corollary_filter ? "corollary" : "converse") << '\n';
  out << "evaluated: " << s.evaluated << '\n';
  out << "skipped: " << s.skipped << '\n';
  out << "hypothesis_holds: " << s.hypothesis_holds << '\n';
  out << "theorem_violations: " << s.theorem_violations << '\n';
  out << "candidates: " << s.candidates.size() << '\n';
  for (const auto& l : lines) out << l << '\n';
  if (s.theorem_violations > 0) {
    err << "CRITICAL: " << s.theorem_violations << " complexes contradict the theorem\n";
    for (const auto& dump : s.violation_dumps) err << dump << '\n';
  }
  if (s.candidates.empty()) {
    out << "verdict: no counterexample found at this scale\n";
  } else {
    out << "verdict: CRITICAL: " << s.candidates.size()
        << " re-verified converse candidates found\n";
  }
  return (s.candidates.empty() && s.theorem_violations == 0) ? kExitOk : kExitCheckFailed;
}

int cmd_export_dot(const InputOptions& opts, std::istream& in, std::ostream& out) {
  LefschetzComplex x = load(opts, in);
  if (!opts.ring.empty()) x = with_ring(x, Ring::parse(opts.ring));
  out << export_dot(x);
  return kExitOk;
}

int cmd_validate(const InputOptions& opts, std::istream& in, std::ostream& out) {
  try {
    LefschetzComplex x = load(opts, in);
    if (!opts.ring.empty()) x = with_ring(x, Ring::parse(opts.ring));
    out << "valid: true\n";
    out << "ring: " << x.ring().name() << '\n';
    out << "cells: " << x.size() << '\n';
    out << "kappa_entries: " << x.kappa_entries().size() << '\n';
    return kExitOk;
  } catch (const KappaConditionViolation& e) {
    out << "valid: false\n";
    out << "violation: (" << e.x() << ", " << e.z() << ")\n";
    out << "error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    out << "valid: false\n";
    out << "error: " << e.what() << '\n';
  }
  return kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Lefschetz complexes: homology, finite-space comparison, theorem checks",
               "lefschetz"};
  app.require_subcommand(1);

  InputOptions opts;
  std::vector<std::string> ring_words;
  auto add_input = [&](CLI::App* sub, bool with_ring = true) {
    sub->add_option("input", opts.path, "input file, '-' for standard input")->required();
    sub->add_option("--format", opts.format, "input format (default: from extension, else lef)")
        ->check(CLI::IsMember({"lef", "simplicial", "cubical"}));
    if (with_ring) {
      sub->add_option("--ring", ring_words, "coefficient ring: Z, Q, Zp <p>, Z<p>")
          ->expected(1, 2);
    }
    sub->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* homology = app.add_subcommand("homology", "Lefschetz homology per degree");
  add_input(homology);
  auto* singular = app.add_subcommand("singular", "singular homology of the finite space");
  add_input(singular);
  auto* check = app.add_subcommand("check", "evaluate the acyclic-closure theorem");
  add_input(check);

  std::size_t cap = kDefaultClosedSetCap;
  auto* corollary = app.add_subcommand("corollary", "closed-subcomplex sweep");
  add_input(corollary);
  corollary->add_option("--cap", cap, "maximum number of closed sets");

  std::string closed;
  auto* les = app.add_subcommand("les", "long exact sequence of a pair (field rings)");
  add_input(les);
  les->add_option("--closed", closed, "comma-separated ids of the closed subcomplex");
  auto* excision = app.add_subcommand("excision", "compare H(X,X') with H(X \\ X')");
  add_input(excision);
  excision->add_option("--closed", closed, "comma-separated ids of the closed subcomplex")
      ->required();

  SearchOptions so;
  auto* search = app.add_subcommand("search", "hunt for converse candidates");
  search->add_option("--seed", so.cfg.seed, "master seed");
  search->add_option("--budget", so.cfg.budget, "number of complexes")->check(CLI::PositiveNumber);
  search->add_option("--mode", so.mode, "generator mode")
      ->check(CLI::IsMember({"simplicial-random", "cubical-random", "basis-change", "all"}));
  search->add_option("--ring", ring_words, "coefficient ring")->expected(1, 2);
  search->add_option("--max-vertices", so.cfg.generator.max_vertices)->check(CLI::PositiveNumber);
  search->add_option("--max-facets", so.cfg.generator.max_facets)->check(CLI::PositiveNumber);
  search->add_option("--max-dim", so.cfg.generator.max_dim)->check(CLI::PositiveNumber);
  search->add_option("--coefficient-bound", so.cfg.generator.coefficient_bound)
      ->check(CLI::PositiveNumber);
  search->add_option("--basis-steps", so.cfg.generator.basis_steps);
  search->add_flag("--corollary-filter", so.cfg.corollary_filter,
                   "also require isomorphic homology on every closed subcomplex");
  search->add_option("--out", so.out_path, "append candidates to this file");
  search->add_option("--timestamp", so.timestamp, "provenance timestamp (default: now)");
  search->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  add_input(dot);
  auto* validate = app.add_subcommand("validate", "parse and check the kappa condition");
  add_input(validate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  // "--ring Zp 5" arrives as two words.
  opts.ring = join(ring_words, " ");
  if (!opts.ring.empty()) so.ring = opts.ring;

  try {
    if (homology->parsed()) return cmd_homology(opts, in, out);
    if (singular->parsed()) return cmd_singular(opts, in, out);
    if (check->parsed()) return cmd_check(opts, in, out, err);
    if (corollary->parsed()) return cmd_corollary(opts, cap, in, out);
    if (les->parsed()) return cmd_les(opts, closed, in, out);
    if (excision->parsed()) return cmd_excision(opts, closed, in, out);
    if (search->parsed()) return cmd_search(so, opts.jobs, out, err);
    if (dot->parsed()) return cmd_export_dot(opts, in, out);
    if (validate->parsed()) return cmd_validate(opts, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lefschetz::cli
