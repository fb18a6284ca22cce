#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lefschetz/ring.hpp"

namespace lefschetz {

/// Sparse matrix with exact entries. Absent entries are zero; stored
/// entries are the ring's canonical nonzero representatives.
class ExactMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Ring ring = Ring::integers())
      : rows_(rows), cols_(cols), ring_(ring) {}

  static ExactMatrix from_rows(const std::vector<std::vector<Integer>>& rows,
                               Ring ring = Ring::integers());
  static ExactMatrix identity(std::size_t n, Ring ring = Ring::integers());

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Ring& ring() const noexcept { return ring_; }

  Integer at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& value);
  const std::map<Key, Integer>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  std::vector<std::vector<Integer>> dense() const;
  /// Same entries re-read in another ring (reduced, zeros dropped).
  ExactMatrix over(const Ring& ring) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Ring ring_ = Ring::integers();
  std::map<Key, Integer> entries_;
};

/// Product in the ring of `a`.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

struct SmithForm {
  /// d_1 | d_2 | ... | d_r, all positive.
  std::vector<Integer> divisors;
  std::size_t rank = 0;
  /// When requested: left * M * right == diag(divisors) padded with zeros.
  std::optional<ExactMatrix> left_transform;
  std::optional<ExactMatrix> right_transform;
};

/// Smith normal form of an integer matrix. Without transforms, unit pivots
/// are eliminated sparsely first and only the remainder is densified.
SmithForm smith_normal_form(const ExactMatrix& m, bool with_transforms = false);

/// Rank over Q or Z/p by exact elimination. Throws NonFieldRing over Z.
std::size_t rank_over(const ExactMatrix& m, const Ring& ring);

/// Basis of the right kernel {v : M v = 0} over Q or Z/p, one vector per
/// free column of the reduced row echelon form. Z/p values lie in [0, p).
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m,
                                                const Ring& ring);

}  // namespace lefschetz
