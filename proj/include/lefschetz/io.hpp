#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/complex.hpp"

namespace lefschetz {

// ---------------------------------------------------------------------------
// .lef text format
//
//   # comment
//   ring Z            (or "ring Q", "ring Zp 5"; first non-comment line)
//   cell <id> <dim>
//   kappa <x> <y> <integer>
//
// Cell and kappa lines may appear in any order after the ring line.

/// Throws SyntaxError (with line), UnsupportedRing, or the ValidationError
/// raised by build_complex.
LefschetzComplex parse_lef(std::string_view text);

/// Canonical form: cells sorted by (dim, id), kappa lines by (x, y).
std::string render_lef(const LefschetzComplex& x);

// ---------------------------------------------------------------------------
// Importers

/// All faces of the given simplices (vertex ids) with kappa(s, s - v_i) =
/// (-1)^i, vertices ascending by id. Face ids concatenate the vertex ids when
/// every vertex id is a single character ("abc"), else join them with '_'.
/// Throws EmptyInput.
LefschetzComplex import_simplicial(const std::vector<std::vector<std::string>>& maximal);

/// One maximal simplex per line, whitespace-separated vertex ids; '#' comments.
std::vector<std::vector<std::string>> parse_simplicial(std::string_view text);

/// An elementary interval [k] (lower == upper) or [k, k+1].
struct Interval {
  std::int64_t lower = 0;
  std::int64_t upper = 0;

  bool degenerate() const noexcept { return lower == upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};
using Cube = std::vector<Interval>;

/// Cell id of an elementary cube, e.g. [0,1]x[3] -> "Q0_1x3"; negative
/// coordinates are written with a leading 'm'.
std::string cube_id(const Cube& cube);

/// All faces of the given elementary cubes. Collapsing the j-th
/// non-degenerate interval gives the upper face sign (-1)^s and the lower
/// face sign -(-1)^s, s = number of non-degenerate intervals before j.
/// Throws EmptyInput, DimensionMismatch, MalformedInterval.
LefschetzComplex import_cubical(const std::vector<Cube>& cubes);

/// One cube per line, e.g. "[0,1]x[3]x[2,3]"; '#' comments.
std::vector<Cube> parse_cubical(std::string_view text);

// ---------------------------------------------------------------------------
// Random generation

enum class GeneratorMode { SimplicialRandom, CubicalRandom, BasisChange };

std::string mode_name(GeneratorMode mode);
/// "simplicial-random", "cubical-random", "basis-change".
GeneratorMode parse_mode(std::string_view name);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  GeneratorMode mode = GeneratorMode::SimplicialRandom;
  /// Vertex pool for simplicial draws; grid extent (capped at 3) for cubes.
  std::size_t max_vertices = 5;
  /// Upper bound on the number of maximal faces drawn.
  std::size_t max_facets = 4;
  /// Top dimension of drawn simplices, embedding dimension of cubes.
  int max_dim = 2;
  /// Multipliers of basis changes are drawn from [-bound, bound] \ {0}.
  int coefficient_bound = 2;
  /// Upper bound on the number of elementary basis changes.
  std::size_t basis_steps = 4;

  /// Throws std::invalid_argument on non-positive bounds.
  void validate() const;
};

/// Deterministic in the config: equal configs give equal complexes.
LefschetzComplex random_complex(const GeneratorConfig& cfg);

/// New basis target' = target + multiple * source for two distinct cells of
/// the same dimension q >= 1; the boundary of target' becomes
/// d(target) + multiple * d(source) and every cofacet's coefficient on
/// source drops by multiple * (its coefficient on target). Ids are kept.
/// Throws std::invalid_argument for degree 0 or mismatched dimensions.
LefschetzComplex basis_change(const LefschetzComplex& x, std::string_view target,
                              std::string_view source, const Integer& multiple);

// ---------------------------------------------------------------------------

/// Hasse diagram of the face order as a DOT digraph, one rank per
/// dimension; edges run from a cell to each facet, labelled with kappa.
std::string export_dot(const LefschetzComplex& x);

}  // namespace lefschetz
