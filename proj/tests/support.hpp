#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Nothing in
// here calls into the library's elimination code, so it can be used to
// check it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lefschetz/complex.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/order_complex.hpp"
#include "lefschetz/theorem.hpp"
#include "lefschetz/topology.hpp"

namespace testing {

using namespace lefschetz;
using IntMatrix = std::vector<std::vector<Integer>>;

inline LefschetzComplex example1() {
  return build_complex({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 1}},
                       {{"e", "a", 1}, {"e", "b", 1}, {"e", "c", -1}, {"e", "d", -1}});
}

inline LefschetzComplex example2() {
  return build_complex({{"a", 0}, {"b", 0}, {"c", 1}, {"d", 1}},
                       {{"c", "a", 1}, {"c", "b", -1}, {"d", "a", 1}, {"d", "b", 1}});
}

inline LefschetzComplex single_cell() { return build_complex({{"v", 0}}, {}); }

inline LefschetzComplex full_triangle() { return import_simplicial({{"a", "b", "c"}}); }

inline LefschetzComplex hollow_triangle() {
  return import_simplicial({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

// Two vertices, two edges between them, one disk glued along both edges.
inline LefschetzComplex bigon() {
  return build_complex({{"a", 0}, {"b", 0}, {"e1", 1}, {"e2", 1}, {"f", 2}},
                       {{"e1", "a", -1},
                        {"e1", "b", 1},
                        {"e2", "a", -1},
                        {"e2", "b", 1},
                        {"f", "e1", 1},
                        {"f", "e2", -1}});
}

inline CellSet ids(const LefschetzComplex& x, std::vector<std::string> names) {
  return make_cell_set(x, names);
}

inline std::vector<std::string> names(const LefschetzComplex& x, const CellSet& a) {
  return cell_ids(x, a);
}

// Hand-picked complexes plus generator output across all modes.
inline std::vector<LefschetzComplex> corpus(std::size_t generated_per_mode = 40) {
  std::vector<LefschetzComplex> out{example1(),        example2(),        single_cell(),
                                    full_triangle(),   hollow_triangle(), bigon(),
                                    build_complex({}, {})};
  out.push_back(import_simplicial({{"a", "b", "c", "d"}}));
  out.push_back(import_simplicial({{"a", "b", "c"}, {"b", "c", "d"}}));
  out.push_back(import_cubical({{{0, 1}, {0, 1}}}));
  out.push_back(import_cubical({{{0, 1}, {0, 0}}, {{1, 1}, {0, 1}}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}}));
  for (auto mode : {GeneratorMode::SimplicialRandom, GeneratorMode::CubicalRandom,
                    GeneratorMode::BasisChange}) {
    for (std::uint64_t seed = 0; seed < generated_per_mode; ++seed) {
      GeneratorConfig cfg;
      cfg.seed = seed;
      cfg.mode = mode;
      out.push_back(random_complex(cfg));
    }
  }
  return out;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t max_rows,
                                   std::size_t max_cols, int bound) {
  std::uniform_int_distribution<std::size_t> rows(1, max_rows), cols(1, max_cols);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::uniform_int_distribution<int> sparsity(0, 3);
  const std::size_t r = rows(rng), c = cols(rng);
  const int zero_bias = sparsity(rng);
  IntMatrix m(r, std::vector<Integer>(c));
  for (auto& row : m) {
    for (auto& v : row) v = (sparsity(rng) < zero_bias) ? 0 : entry(rng);
  }
  return m;
}

inline Integer abs_int(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd_int(Integer a, Integer b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Determinant by cofactor expansion along the first row.
inline Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// gcd of all k x k minors (0 when every minor vanishes).
inline Integer gcd_of_minors(const IntMatrix& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  Integer g = 0;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      IntMatrix sub(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
      }
      g = gcd_int(g, determinant(sub));
    });
  });
  return g;
}

// Invariant factors from determinantal divisors: d_k = g_k / g_{k-1}.
inline std::vector<Integer> divisors_by_minors(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    const Integer g = gcd_of_minors(m, k);
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Plain Gaussian elimination over Q, or over Z/p when p > 0.
inline std::size_t naive_rank(IntMatrix m, std::uint64_t p = 0) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  if (p > 0) {
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        Integer r = m[i][j] % Integer(p);
        if (r < 0) r += p;
        a[i][j] = static_cast<std::uint64_t>(r);
      }
    }
    auto inv = [&](std::uint64_t v) {
      for (std::uint64_t w = 1; w < p; ++w) {
        if (v * w % p == 1) return w;
      }
      return std::uint64_t{0};
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rank]);
      const std::uint64_t iv = inv(a[rank][c]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == rank || a[i][c] == 0) continue;
        const std::uint64_t f = a[i][c] * iv % p;
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
      }
      ++rank;
    }
    return rank;
  }
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m[i][j]);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline IntMatrix dense_of(const ExactMatrix& m) { return m.dense(); }

// Homology over Z from the minors oracle; only practical for small matrices.
inline std::vector<DegreeHomology> homology_by_minors(const ChainComplex& c) {
  std::vector<DegreeHomology> out(c.ranks.size());
  std::vector<std::vector<Integer>> divs(c.ranks.size() + 1);
  for (std::size_t n = 0; n < c.ranks.size(); ++n) divs[n] = divisors_by_minors(c.boundaries[n].dense());
  for (std::size_t n = 0; n < c.ranks.size(); ++n) {
    const std::size_t r_n = divs[n].size();
    const std::size_t r_next = n + 1 < c.ranks.size() ? divs[n + 1].size() : 0;
    out[n].rank = c.ranks[n] - r_n - r_next;
    if (n + 1 < c.ranks.size()) {
      for (const auto& d : divs[n + 1]) {
        if (d > 1) out[n].torsion.push_back(d);
      }
    }
  }
  return out;
}

inline DegreeHomology group(std::size_t rank, std::vector<Integer> torsion = {}) {
  return DegreeHomology{rank, std::move(torsion)};
}

inline HomologyProfile profile(const Ring& ring, std::vector<DegreeHomology> degrees) {
  return HomologyProfile(ring, std::move(degrees));
}

inline HomologyProfile z_ranks(std::vector<std::size_t> ranks, Ring ring = Ring::integers()) {
  std::vector<DegreeHomology> d;
  for (auto r : ranks) d.push_back(group(r));
  return HomologyProfile(ring, d);
}

// Random subsets of cells, closed under faces.
inline CellSet random_closed_subset(const LefschetzComplex& x, std::mt19937_64& rng) {
  CellSet seed;
  std::bernoulli_distribution pick(0.3);
  for (CellIndex c = 0; c < x.size(); ++c) {
    if (pick(rng)) seed.push_back(c);
  }
  return closure(x, seed);
}

}  // namespace testing
