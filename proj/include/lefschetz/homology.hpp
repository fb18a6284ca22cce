#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/complex.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/topology.hpp"

namespace lefschetz {

/// One homology group up to isomorphism: Z^rank + Z/t_1 + ... over Z
/// (t_i > 1, t_i | t_{i+1}), or a vector space of dimension `rank`.
struct DegreeHomology {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const noexcept { return rank == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

/// Per-degree homology invariants. Two profiles compare equal iff the
/// groups are isomorphic in every degree; trailing zero degrees are
/// ignored, so profiles of complexes of different dimension compare.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(Ring ring, std::vector<DegreeHomology> degrees)
      : ring_(ring), degrees_(std::move(degrees)) {}

  /// R in degree 0, zero elsewhere.
  static HomologyProfile point(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  /// Number of degrees computed (top dimension + 1).
  std::size_t degree_count() const noexcept { return degrees_.size(); }
  /// The group in degree n; zero beyond the computed range.
  DegreeHomology degree(std::size_t n) const;
  const std::vector<DegreeHomology>& degrees() const noexcept { return degrees_; }
  bool is_zero() const;

  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);

 private:
  Ring ring_ = Ring::integers();
  std::vector<DegreeHomology> degrees_;
};

/// "0", "Z", "Z^3 + Z/2", "Q^2", "F5^4".
std::string format_group(const DegreeHomology& h, const Ring& ring);

/// A bounded chain complex of free modules: boundaries[n] maps degree n to
/// degree n-1 (boundaries[0] has zero rows).
struct ChainComplex {
  Ring ring = Ring::integers();
  std::vector<std::size_t> ranks;
  std::vector<ExactMatrix> boundaries;
};

ChainComplex chain_complex(const LefschetzComplex& x);
/// C(X)/C(X'): boundary matrices of X with the rows and columns of X' deleted.
ChainComplex quotient_chain_complex(const LefschetzComplex& x, const CellSet& sub);

/// Homology of a chain complex with coefficients in `ring` (entries are
/// re-read in that ring). Over Z via Smith normal form, over a field via
/// ranks.
HomologyProfile chain_homology(const ChainComplex& c, const Ring& ring);

HomologyProfile lefschetz_homology(const LefschetzComplex& x, const Ring& ring);
inline HomologyProfile lefschetz_homology(const LefschetzComplex& x) {
  return lefschetz_homology(x, x.ring());
}

/// H(X, X') for closed X', computed as the homology of the open complement.
/// Throws NotClosed.
HomologyProfile relative_homology(const LefschetzComplex& x, const CellSet& closed,
                                  const Ring& ring);

/// Compares relative_homology against the homology of the quotient complex
/// built directly from X's boundary matrices. Throws NotClosed.
bool excision_check(const LefschetzComplex& x, const CellSet& closed, const Ring& ring);

/// Which space a node of the long exact sequence belongs to.
enum class SequenceSpace { Sub, Whole, Relative };

struct SequenceNode {
  SequenceSpace space;
  int degree;
  std::size_t dimension;
};

/// ... -> H_n(X') -> H_n(X) -> H_n(X, X') -> H_{n-1}(X') -> ... -> H_0(X, X') -> 0,
/// with nodes listed from the top degree down. maps[k] is the matrix of the
/// map nodes[k] -> nodes[k+1] in the chosen homology bases (rows index the
/// target basis). Over Z/p entries lie in [0, p).
struct ExactSequenceReport {
  Ring ring = Ring::rationals();
  std::vector<SequenceNode> nodes;
  std::vector<std::vector<std::vector<Rational>>> maps;
  bool exact = true;
  std::optional<std::size_t> first_failure;
};

/// Builds the long exact sequence of the pair (X, X') over a field with
/// explicit induced maps and checks exactness at every node.
/// Throws NotClosed or NonFieldRing.
ExactSequenceReport long_exact_sequence(const LefschetzComplex& x, const CellSet& closed,
                                        const Ring& ring);

std::string node_label(const SequenceNode& node);

}  // namespace lefschetz
