#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/ring.hpp"

namespace lefschetz {

/// Position of a cell in the canonical (dim, id) order of its complex.
using CellIndex = std::size_t;

struct Cell {
  std::string id;
  int dim = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// One incidence coefficient kappa(x, y): the coefficient of y in the
/// boundary of x.
struct KappaEntry {
  std::string x;
  std::string y;
  Integer value;

  friend bool operator==(const KappaEntry&, const KappaEntry&) = default;
};

/// A finite graded cell set with incidence coefficients satisfying
/// sum_y kappa(x,y) kappa(y,z) = 0. Immutable once built; obtain one through
/// build_complex, which validates eagerly.
class LefschetzComplex {
 public:
  /// The empty complex over Z.
  LefschetzComplex() = default;

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  /// Cells sorted by (dim, id).
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const Cell& cell(CellIndex i) const { return cells_.at(i); }
  int dim(CellIndex i) const { return cells_.at(i).dim; }
  const std::string& id(CellIndex i) const { return cells_.at(i).id; }

  std::optional<CellIndex> find(std::string_view id) const;
  /// Throws UnknownCellReference.
  CellIndex index_of(std::string_view id) const;

  /// -1 for the empty complex.
  int top_dimension() const noexcept;
  /// Indices of the q-cells, ascending (hence sorted by id).
  std::vector<CellIndex> cells_of_dim(int q) const;

  /// Facets of x with their nonzero coefficients, ascending by index.
  const std::vector<std::pair<CellIndex, Integer>>& boundary(CellIndex x) const {
    return boundary_.at(x);
  }
  /// Cells having x as a facet, ascending.
  const std::vector<CellIndex>& cofacets(CellIndex x) const { return cofacets_.at(x); }
  Integer kappa(CellIndex x, CellIndex y) const;

  /// All nonzero coefficients sorted by (x id, y id).
  std::vector<KappaEntry> kappa_entries() const;

  friend bool operator==(const LefschetzComplex& a, const LefschetzComplex& b) {
    return a.ring_ == b.ring_ && a.cells_ == b.cells_ && a.boundary_ == b.boundary_;
  }

 private:
  friend LefschetzComplex build_complex(std::vector<Cell>, const std::vector<KappaEntry>&,
                                        Ring);

  Ring ring_ = Ring::integers();
  std::vector<Cell> cells_;
  std::unordered_map<std::string, CellIndex> index_;
  std::vector<std::vector<std::pair<CellIndex, Integer>>> boundary_;
  std::vector<std::vector<CellIndex>> cofacets_;
};

/// Validates and builds a complex. Coefficients are reduced into the ring
/// and zero entries dropped; repeated (x, y) pairs are summed.
/// Throws DuplicateCellId, UnknownCellReference, GradingViolation,
/// KappaConditionViolation, or ValidationError for malformed ids/dims.
LefschetzComplex build_complex(std::vector<Cell> cells, const std::vector<KappaEntry>& kappa,
                               Ring ring = Ring::integers());

/// The same cells and coefficients re-read in another ring (revalidated;
/// coefficients vanishing in the new ring drop out of the face order).
LefschetzComplex with_ring(const LefschetzComplex& x, const Ring& ring);

/// Matrix of the degree-q boundary: rows are the (q-1)-cells, columns the
/// q-cells, both sorted by id; entry (y, x) = kappa(x, y).
ExactMatrix boundary_matrix(const LefschetzComplex& x, int q);

/// Ids of the facets of `id`. Throws UnknownCellReference.
std::vector<std::string> facets(const LefschetzComplex& x, std::string_view id);

/// Reflexive-transitive closure of the facet relation.
class FacePoset {
 public:
  /// faces(x): every y <= x, ascending, including x itself.
  const std::vector<CellIndex>& faces(CellIndex x) const { return faces_.at(x); }
  /// cofaces(x): every y >= x, ascending, including x itself.
  const std::vector<CellIndex>& cofaces(CellIndex x) const { return cofaces_.at(x); }
  bool leq(CellIndex y, CellIndex x) const;
  std::size_t size() const noexcept { return faces_.size(); }

  friend bool operator==(const FacePoset&, const FacePoset&) = default;

 private:
  friend FacePoset face_poset(const LefschetzComplex&);
  std::vector<std::vector<CellIndex>> faces_;
  std::vector<std::vector<CellIndex>> cofaces_;
};

FacePoset face_poset(const LefschetzComplex& x);

/// Ids accepted by the library: [A-Za-z0-9_]+.
bool is_valid_cell_id(std::string_view id);

}  // namespace lefschetz
