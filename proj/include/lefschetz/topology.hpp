#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lefschetz/complex.hpp"

namespace lefschetz {

/// A subset of the cells of one ambient complex, as ascending cell indices.
using CellSet = std::vector<CellIndex>;

/// Canonical CellSet from ids (duplicates collapse). Throws UnknownCellReference.
CellSet make_cell_set(const LefschetzComplex& x, const std::vector<std::string>& ids);
std::vector<std::string> cell_ids(const LefschetzComplex& x, const CellSet& a);
CellSet all_cells(const LefschetzComplex& x);
CellSet complement(const LefschetzComplex& x, const CellSet& a);

/// Lower set of A: every face of a cell of A.
CellSet closure(const LefschetzComplex& x, const CellSet& a);
/// Upper set of A: the smallest open set containing A.
CellSet open_hull(const LefschetzComplex& x, const CellSet& a);
/// cl A \ A.
CellSet mouth(const LefschetzComplex& x, const CellSet& a);

bool is_closed(const LefschetzComplex& x, const CellSet& a);
bool is_open(const LefschetzComplex& x, const CellSet& a);
/// True iff the mouth of A is closed.
bool is_locally_closed(const LefschetzComplex& x, const CellSet& a);

/// The complex on A with kappa restricted to A x A; revalidated on every
/// call. Throws NotLocallyClosed.
LefschetzComplex restrict_to(const LefschetzComplex& x, const CellSet& a);

inline constexpr std::size_t kDefaultClosedSetCap = 100000;

/// Every lower set of the face order (including the empty set and X).
/// Throws TooManyClosedSets once more than `cap` sets exist.
std::vector<CellSet> enumerate_closed_sets(const LefschetzComplex& x,
                                           std::size_t cap = kDefaultClosedSetCap);

}  // namespace lefschetz
