#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lefschetz/complex.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/topology.hpp"

namespace lefschetz {

/// Finite abstract simplicial complex over a fixed, ordered vertex universe.
/// A simplex is its ascending list of vertex positions; simplices are
/// oriented by that order. Always closed under non-empty subsets.
class SimplicialComplex {
 public:
  using Simplex = std::vector<std::uint32_t>;

  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<std::string> vertices)
      : vertices_(std::move(vertices)) {}

  /// Closure of the given simplices (vertex positions, any order).
  static SimplicialComplex from_simplices(std::vector<std::string> vertices,
                                          const std::vector<Simplex>& simplices);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// Adds a simplex together with all of its faces.
  void add(Simplex simplex);
  /// Adds a simplex whose proper faces are already present.
  void add_unchecked(Simplex simplex);

  bool contains(const Simplex& s) const;
  /// -1 when empty.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const noexcept { return count_; }
  const std::set<Simplex>& simplices(int dim) const;
  /// Every simplex's codimension-one faces are present.
  bool is_closed_under_faces() const;
  std::vector<Simplex> maximal_simplices() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::set<Simplex>> by_dim_;
  std::size_t count_ = 0;
};

SimplicialComplex simplicial_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex simplicial_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

inline constexpr std::size_t kDefaultSimplexCap = 200000;

/// K(X): one vertex per cell (in X's canonical order), one simplex per
/// non-empty chain of the face order. Throws TooManySimplices.
SimplicialComplex order_complex(const LefschetzComplex& x,
                                std::size_t cap = kDefaultSimplexCap);
/// K(A) inside K(X): chains made of cells of A, on X's vertex universe.
SimplicialComplex order_complex(const LefschetzComplex& x, const CellSet& subset,
                                std::size_t cap = kDefaultSimplexCap);

/// Oriented chain complex of K, or of K/L when `sub` is given (L must be a
/// subcomplex of K over the same vertices). Face signs are (-1)^i for
/// deleting the i-th vertex.
ChainComplex simplicial_chain_complex(const SimplicialComplex& k,
                                      const SimplicialComplex* sub = nullptr);

HomologyProfile simplicial_homology(const SimplicialComplex& k, const Ring& ring);
HomologyProfile relative_simplicial_homology(const SimplicialComplex& k,
                                             const SimplicialComplex& sub, const Ring& ring);

/// Singular homology of X with its face-order topology, as the simplicial
/// homology of the order complex.
HomologyProfile finite_space_homology(const LefschetzComplex& x, const Ring& ring,
                                      std::size_t cap = kDefaultSimplexCap);
/// H(X, A) for any subspace A, as H(K(X), K(A)).
HomologyProfile relative_finite_space_homology(const LefschetzComplex& x, const CellSet& a,
                                               const Ring& ring,
                                               std::size_t cap = kDefaultSimplexCap);

/// With K = K1 u K2: compares H(K2, K1 n K2) with H(K, K1).
bool simplicial_excision_check(const SimplicialComplex& k1, const SimplicialComplex& k2,
                               const Ring& ring);

}  // namespace lefschetz
