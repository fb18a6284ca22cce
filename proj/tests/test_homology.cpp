#include <doctest.h>

#include "lefschetz/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

std::size_t count_divisible(const std::vector<Integer>& torsion, std::uint64_t p) {
  return std::count_if(torsion.begin(), torsion.end(),
                       [&](const Integer& t) { return t % Integer(p) == 0; });
}

std::vector<std::size_t> node_dims(const ExactSequenceReport& r) {
  std::vector<std::size_t> out;
  for (const auto& n : r.nodes) out.push_back(n.dimension);
  return out;
}

}  // namespace

TEST_SUITE("homology-engine") {

TEST_CASE("lefschetz_homology examples") {
  const HomologyProfile h1 = lefschetz_homology(example1(), Z);
  CHECK(h1.degree(0) == group(3));
  CHECK(h1.degree(1).is_zero());
  CHECK(h1 == z_ranks({3}));

  const HomologyProfile h2 = lefschetz_homology(example2(), Z);
  CHECK(h2.degree(1).is_zero());
  // Oracle: invariant factors of the degree-1 boundary from its minors.
  const auto divs = divisors_by_minors(boundary_matrix(example2(), 1).dense());
  REQUIRE(divs == std::vector<Integer>{1, 2});
  // Both 0-cells are hit by a rank-2 boundary: no free part, torsion Z/2.
  CHECK(h2.degree(0) == group(2 - divs.size(), {2}));

  CHECK(lefschetz_homology(LefschetzComplex(), Z).is_zero());
  CHECK(lefschetz_homology(LefschetzComplex(), Z).degree_count() == 0);
}

TEST_CASE("profile formatting") {
  CHECK(format_group(group(0), Z) == "0");
  CHECK(format_group(group(1), Z) == "Z");
  CHECK(format_group(group(3, {2}), Z) == "Z^3 + Z/2");
  CHECK(format_group(group(1, {2}), Z) == "Z + Z/2");
  CHECK(format_group(group(0, {2, 4}), Z) == "Z/2 + Z/4");
  CHECK(format_group(group(2), Q) == "Q^2");
  CHECK(format_group(group(4), Ring::prime_field(5)) == "F5^4");
}

TEST_CASE("profile equality ignores trailing zero degrees only") {
  CHECK(z_ranks({1}) == z_ranks({1, 0, 0}));
  CHECK_FALSE(z_ranks({1}) == z_ranks({1, 1}));
  CHECK_FALSE(z_ranks({1}) == z_ranks({1}, Q));
  CHECK(HomologyProfile::point(Z) == z_ranks({1}));
}

TEST_CASE("homology over Z matches the minors oracle") {
  for (const auto& x : corpus(25)) {
    const ChainComplex c = chain_complex(x);
    bool small = true;
    for (const auto& b : c.boundaries) small = small && b.rows() <= 7 && b.cols() <= 7;
    if (!small) continue;
    CHECK(lefschetz_homology(x, Z).degrees() == homology_by_minors(c));
  }
}

TEST_CASE("Euler characteristic") {
  for (const auto& x : corpus()) {
    long cells = 0, betti = 0;
    for (CellIndex c = 0; c < x.size(); ++c) cells += (x.dim(c) % 2 == 0) ? 1 : -1;
    const HomologyProfile h = lefschetz_homology(x, Q);
    for (std::size_t n = 0; n < h.degree_count(); ++n) {
      betti += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h.degree(n).rank);
    }
    CHECK(cells == betti);
    const HomologyProfile hz = lefschetz_homology(x, Z);
    for (std::size_t n = 0; n < hz.degree_count(); ++n) CHECK(hz.degree(n).rank == h.degree(n).rank);
  }
}

TEST_CASE("universal coefficients over Z/p") {
  for (const auto& x : corpus()) {
    const HomologyProfile hz = lefschetz_homology(x, Z);
    for (std::uint64_t p : {2, 3, 5}) {
      const HomologyProfile hp = lefschetz_homology(x, Ring::prime_field(p));
      for (std::size_t n = 0; n < std::max(hz.degree_count(), hp.degree_count()); ++n) {
        std::size_t expected = hz.degree(n).rank + count_divisible(hz.degree(n).torsion, p);
        if (n > 0) expected += count_divisible(hz.degree(n - 1).torsion, p);
        CHECK(hp.degree(n).rank == expected);
      }
    }
  }
}

TEST_CASE("relative_homology examples") {
  const LefschetzComplex x = example1();
  const HomologyProfile r1 = relative_homology(x, ids(x, {"a", "b", "c", "d"}), Z);
  CHECK(r1 == z_ranks({0, 1}));
  CHECK(relative_homology(x, all_cells(x), Z).is_zero());
  const LefschetzComplex y = example2();
  CHECK(relative_homology(y, ids(y, {"a", "b"}), Z) == z_ranks({0, 2}));
  CHECK_THROWS_AS(relative_homology(x, ids(x, {"e"}), Z), NotClosed);
}

TEST_CASE("excision_check examples") {
  const LefschetzComplex x = example1();
  CHECK(excision_check(x, ids(x, {"a", "b", "c", "d"}), Z));
  for (const auto& y : corpus(5)) CHECK(excision_check(y, {}, Z));
  const LefschetzComplex t = hollow_triangle();
  CHECK(excision_check(t, closure(t, ids(t, {"a"})), Z));
  CHECK_THROWS_AS(excision_check(x, ids(x, {"e"}), Z), NotClosed);
}

TEST_CASE("quotient complex directly: example 1 relative to its vertices") {
  const LefschetzComplex x = example1();
  const ChainComplex c = quotient_chain_complex(x, ids(x, {"a", "b", "c", "d"}));
  CHECK(c.ranks == std::vector<std::size_t>{0, 1});
  CHECK(chain_homology(c, Z) == z_ranks({0, 1}));
}

TEST_CASE("excision holds on random closed subsets of the corpus") {
  std::mt19937_64 rng(29);
  for (const auto& x : corpus()) {
    for (int trial = 0; trial < 3; ++trial) {
      const CellSet sub = random_closed_subset(x, rng);
      for (const Ring& ring : {Z, Ring::prime_field(2)}) CHECK(excision_check(x, sub, ring));
    }
  }
}

TEST_CASE("long_exact_sequence examples") {
  const LefschetzComplex x = example1();
  const ExactSequenceReport r = long_exact_sequence(x, ids(x, {"a", "b", "c", "d"}), Q);
  CHECK(r.exact);
  CHECK_FALSE(r.first_failure);
  // H1(X'), H1(X), H1(X,X'), H0(X'), H0(X), H0(X,X')
  CHECK(node_dims(r) == std::vector<std::size_t>{0, 0, 1, 4, 3, 0});
  REQUIRE(r.maps.size() == 5);
  CHECK(node_label(r.nodes[2]) == "H_1(X,X')");
  // Connecting map H1(X,X') -> H0(X') is injective (rank 1).
  REQUIRE(r.maps[2].size() == 4);
  bool nonzero = false;
  for (const auto& row : r.maps[2]) nonzero = nonzero || row[0] != 0;
  CHECK(nonzero);

  // With X' empty the subcomplex terms vanish and H(X, X') is H(X).
  const ExactSequenceReport empty = long_exact_sequence(x, {}, Q);
  CHECK(empty.exact);
  CHECK(node_dims(empty) == std::vector<std::size_t>{0, 0, 0, 0, 3, 3});

  const LefschetzComplex y = example2();
  const ExactSequenceReport r2 = long_exact_sequence(y, ids(y, {"a", "b"}), Ring::prime_field(2));
  CHECK(r2.exact);
  CHECK(node_dims(r2) == std::vector<std::size_t>{0, 1, 2, 2, 1, 0});

  CHECK_THROWS_AS(long_exact_sequence(x, ids(x, {"a"}), Z), NonFieldRing);
  CHECK_THROWS_AS(long_exact_sequence(x, ids(x, {"e"}), Q), NotClosed);
}

TEST_CASE("long exact sequences are exact on random pairs") {
  std::mt19937_64 rng(31);
  std::size_t pairs = 0;
  for (const auto& x : corpus(20)) {
    for (int trial = 0; trial < 2; ++trial) {
      const CellSet sub = random_closed_subset(x, rng);
      for (const Ring& ring : {Q, Ring::prime_field(2), Ring::prime_field(3)}) {
        const ExactSequenceReport r = long_exact_sequence(x, sub, ring);
        CHECK(r.exact);
        // Node dimensions agree with the homology computed elsewhere.
        const HomologyProfile whole = lefschetz_homology(x, ring);
        const HomologyProfile rel = relative_homology(x, sub, ring);
        for (const auto& n : r.nodes) {
          if (n.space == SequenceSpace::Whole) CHECK(n.dimension == whole.degree(n.degree).rank);
          if (n.space == SequenceSpace::Relative) CHECK(n.dimension == rel.degree(n.degree).rank);
        }
        ++pairs;
      }
    }
  }
  CHECK(pairs >= 300);
}

}  // TEST_SUITE
