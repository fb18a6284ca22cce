// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance <data-dir> <golden-dir> <cli-binary>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "lefschetz/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const Ring Z = Ring::integers();

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failed expectations; the first few are reported.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++count_;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o{count_ == 0, summary};
    for (const auto& f : failures_) o.detail += "; " + f;
    if (count_ > failures_.size()) o.detail += "; ...";
    return o;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string describe(const HomologyProfile& p) {
  std::string out;
  for (std::size_t n = 0; n < std::max<std::size_t>(p.degree_count(), 1); ++n) {
    out += (n ? ", " : "") + std::string("H_") + std::to_string(n) + "=" +
           format_group(p.degree(n), p.ring());
  }
  return out;
}

std::vector<LefschetzComplex> generated(std::uint64_t seeds) {
  std::vector<LefschetzComplex> out;
  for (auto mode : {GeneratorMode::SimplicialRandom, GeneratorMode::CubicalRandom,
                    GeneratorMode::BasisChange}) {
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.mode = mode;
      out.push_back(random_complex(cfg));
    }
  }
  return out;
}

Outcome example1_reproduction(const std::string& data_dir) {
  Ledger l;
  const LefschetzComplex x = parse_lef(read_file(data_dir + "/example1.lef"));
  const TheoremReport r = check_main_theorem(x, Z);
  l.expect(r.augmentable, "not augmentable");
  l.expect(r.failing_cells() == std::vector<std::string>{"e"}, "local condition not failing exactly at e");
  for (const auto& c : r.local_condition) {
    if (c.cell == "e") l.expect(c.profile == z_ranks({3}), "H(cl e) = " + describe(c.profile));
  }
  l.expect(r.lefschetz_profile == z_ranks({3}), "H^k(X) = " + describe(r.lefschetz_profile));
  l.expect(r.singular_profile == z_ranks({1}), "H(X) = " + describe(r.singular_profile));
  l.expect(r.consistent_with_theorem, "inconsistent with the theorem");
  return l.outcome("augmentable, fails at e with H_0(cl e)=Z^3, H^k=" +
                   describe(r.lefschetz_profile) + ", H=" + describe(r.singular_profile));
}

Outcome example2_reproduction(const std::string& data_dir) {
  Ledger l;
  const LefschetzComplex x = parse_lef(read_file(data_dir + "/example2.lef"));
  const TheoremReport r = check_main_theorem(x, Z);
  l.expect(!r.augmentable, "reported augmentable");
  l.expect(r.failing_cells().empty(), "local condition fails somewhere");
  l.expect(r.lefschetz_profile.degree(1).is_zero(), "H^k_1 nonzero");
  l.expect(r.singular_profile.degree(1) == group(1), "H_1 is not Z");

  // H^k_0 from the minors oracle: C_0 has rank 2, the image of the boundary
  // has invariant factors d_i, so H_0 = Z^(2 - r) + sum Z/d_i (d_i > 1).
  const auto divs = divisors_by_minors(boundary_matrix(x, 1).dense());
  DegreeHomology oracle;
  oracle.rank = x.cells_of_dim(0).size() - divs.size();
  for (const auto& d : divs) {
    if (d > 1) oracle.torsion.push_back(d);
  }
  l.expect(r.lefschetz_profile.degree(0) == oracle,
           "H^k_0 = " + format_group(r.lefschetz_profile.degree(0), Z) + ", oracle " +
               format_group(oracle, Z));
  return l.outcome("not augmentable, local condition holds, H^k=" +
                   describe(r.lefschetz_profile) + " (minors oracle H^k_0=" +
                   format_group(oracle, Z) + "), H=" + describe(r.singular_profile));
}

Outcome soundness_sweep() {
  Ledger l;
  std::size_t total = 0, hypothesis = 0, violations = 0;
  for (const auto& x : generated(1000)) {
    ++total;
    const TheoremReport r = check_main_theorem(x, Z);
    hypothesis += r.hypothesis_holds;
    if (r.hypothesis_holds && r.augmentable && !r.conclusion_holds) {
      ++violations;
      l.expect(false, "violation:\n" + render_lef(x));
    }
  }
  return l.outcome(std::to_string(total) + " complexes, " + std::to_string(hypothesis) +
                   " meet the hypothesis, " + std::to_string(violations) + " violations");
}

Outcome subdivision_oracle() {
  Ledger l;
  std::mt19937_64 rng(2024);
  std::size_t checked = 0;
  std::uniform_int_distribution<std::size_t> vertices(1, 6), faces(1, 4);
  std::bernoulli_distribution take(0.5);
  while (checked < 200) {
    const std::size_t nv = vertices(rng);
    std::vector<std::vector<std::string>> maximal;
    for (std::size_t f = faces(rng); f > 0; --f) {
      std::vector<std::string> face;
      for (std::size_t v = 0; v < nv; ++v) {
        if (take(rng)) face.push_back("v" + std::to_string(v));
      }
      if (face.empty()) face.push_back("v0");
      maximal.push_back(face);
    }
    const LefschetzComplex x = import_simplicial(maximal);
    const HomologyProfile lef = lefschetz_homology(x, Z);
    const HomologyProfile sing = finite_space_homology(x, Z);
    l.expect(lef == sing, "mismatch on " + render_lef(x));
    ++checked;
  }
  return l.outcome(std::to_string(checked) + " random simplicial complexes on <= 6 vertices");
}

Outcome excision_property() {
  Ledger l;
  std::mt19937_64 rng(5);
  std::size_t pairs = 0;
  for (const auto& x : generated(100)) {
    const CellSet sub = random_closed_subset(x, rng);
    l.expect(excision_check(x, sub, Z), "excision failed on " + render_lef(x));
    ++pairs;
  }
  return l.outcome(std::to_string(pairs) + " (complex, closed subset) pairs over Z");
}

Outcome les_exactness() {
  Ledger l;
  std::mt19937_64 rng(6);
  std::size_t pairs = 0, nodes = 0;
  for (const auto& x : generated(40)) {
    const CellSet sub = random_closed_subset(x, rng);
    for (const Ring& ring : {Ring::rationals(), Ring::prime_field(2)}) {
      const ExactSequenceReport r = long_exact_sequence(x, sub, ring);
      l.expect(r.exact, "not exact over " + ring.name() + " on " + render_lef(x));
      nodes += r.nodes.size();
      ++pairs;
    }
  }
  return l.outcome(std::to_string(pairs) + " pairs over Q and Z/2, " + std::to_string(nodes) +
                   " nodes checked");
}

Outcome point_closure_acyclicity() {
  Ledger l;
  std::size_t cells = 0;
  std::vector<LefschetzComplex> all = corpus(0);
  for (auto& x : generated(100)) all.push_back(std::move(x));
  for (const auto& x : all) {
    for (CellIndex c = 0; c < x.size(); ++c) {
      const HomologyProfile h = finite_space_homology(restrict_to(x, closure(x, {c})), Z);
      l.expect(h == HomologyProfile::point(Z), "cl " + x.id(c) + " has " + describe(h));
      ++cells;
    }
  }
  return l.outcome(std::to_string(cells) + " cells across " + std::to_string(all.size()) +
                   " complexes");
}

Outcome snf_properties() {
  Ledger l;
  std::mt19937_64 rng(8);
  std::size_t matrices = 0;
  for (; matrices < 600; ++matrices) {
    const IntMatrix m = random_int_matrix(rng, 6, 6, 9);
    const SmithForm s = smith_normal_form(ExactMatrix::from_rows(m));
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      l.expect(s.divisors[i + 1] % s.divisors[i] == 0, "divisibility chain broken");
    }
    Integer product = 1;
    for (std::size_t k = 1; k <= s.rank; ++k) {
      product *= s.divisors[k - 1];
      l.expect(gcd_of_minors(m, k) == product, "gcd of minors mismatch");
    }
    if (s.rank < std::min(m.size(), m[0].size())) {
      l.expect(gcd_of_minors(m, s.rank + 1) == 0, "rank too small");
    }
  }
  return l.outcome(std::to_string(matrices) + " random integer matrices up to 6x6");
}

std::string run_cli(const std::string& binary, const std::string& args) {
  const std::string command = "\"" + binary + "\" " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome determinism(const std::string& data_dir, const std::string& golden_dir,
                    const std::string& binary) {
  Ledger l;
  std::size_t runs = 0;
  for (const std::string ex : {"example1", "example2"}) {
    for (const std::string cmd : {"check", "homology", "singular"}) {
      const std::string expected = read_file(golden_dir + "/" + ex + "." + cmd + ".txt");
      const std::string file = "\"" + data_dir + "/" + ex + ".lef\"";
      for (const std::string extra : {"", "", " --jobs 1", " --jobs 4"}) {
        l.expect(run_cli(binary, cmd + " " + file + extra) == expected,
                 cmd + " " + ex + extra + " differs from golden");
        ++runs;
      }
    }
  }
  return l.outcome(std::to_string(runs) + " runs of check/homology/singular match the goldens");
}

Outcome converse_search() {
  Ledger l;
  SearchConfig cfg;
  cfg.seed = 42;
  cfg.budget = 10000;
  SearchConfig parallel = cfg;
  parallel.jobs = std::max(2u, std::thread::hardware_concurrency());
  const SearchSummary a = search_converse(cfg);
  const SearchSummary b = search_converse(parallel);
  l.expect(a.evaluated == cfg.budget, "search did not evaluate the full budget");
  l.expect(a.candidates.size() == b.candidates.size(), "candidate count depends on --jobs");
  for (std::size_t i = 0; i < std::min(a.candidates.size(), b.candidates.size()); ++i) {
    l.expect(a.candidates[i].serialized == b.candidates[i].serialized &&
                 a.candidates[i].index == b.candidates[i].index,
             "candidate order depends on --jobs");
  }
  l.expect(a.theorem_violations == 0, "theorem violated during search");
  // Independent re-verification here, on top of the search's own.
  for (const auto& c : a.candidates) {
    const LefschetzComplex x = parse_lef(c.serialized);
    const bool conclusion = lefschetz_homology(x, Z) == finite_space_homology(x, Z);
    bool local = true;
    for (CellIndex cell = 0; cell < x.size(); ++cell) {
      local = local && lefschetz_homology(restrict_to(x, closure(x, {cell})), Z) ==
                           HomologyProfile::point(Z);
    }
    l.expect(is_augmentable(x) && conclusion && !local,
             "candidate " + std::to_string(c.index) + " does not re-verify");
  }
  return l.outcome("seed 42, budget 10000: " + std::to_string(a.candidates.size()) +
                   " candidates, identical for jobs=1 and jobs=" +
                   std::to_string(parallel.jobs) + ", all re-verified from serialized form");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: acceptance <data-dir> <golden-dir> <cli-binary>\n";
    return 2;
  }
  const std::string data_dir = argv[1], golden_dir = argv[2], binary = argv[3];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Example 1 reproduction", [&] { return example1_reproduction(data_dir); }},
      {"Example 2 reproduction", [&] { return example2_reproduction(data_dir); }},
      {"theorem soundness sweep", soundness_sweep},
      {"subdivision oracle", subdivision_oracle},
      {"excision property", excision_property},
      {"long exact sequence exactness", les_exactness},
      {"point-closure acyclicity", point_closure_acyclicity},
      {"Smith normal form properties", snf_properties},
      {"CLI determinism", [&] { return determinism(data_dir, golden_dir, binary); }},
      {"converse search honesty", converse_search},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
