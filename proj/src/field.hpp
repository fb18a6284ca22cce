// Internal field arithmetic and elimination kernels shared by the matrix
// and homology code. Not installed.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/ring.hpp"

namespace lefschetz::detail {

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from(const Integer& v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Rational to_rational(const Elem& a) const { return a; }
};

struct PrimeField {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from(const Integer& v) const {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem inv(Elem a) const {
    // Fermat: a^(p-2).
    Elem result = 1, base = a;
    std::uint64_t e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  bool is_zero(Elem a) const { return a == 0; }
  Rational to_rational(Elem a) const { return Rational(a); }
};

/// Calls fn(field) with the arithmetic for a field ring.
template <class Fn>
decltype(auto) with_field(const Ring& ring, const char* op, Fn&& fn) {
  switch (ring.kind()) {
    case Ring::Kind::Rationals:
      return fn(RationalField{});
    case Ring::Kind::PrimeField:
      return fn(PrimeField{ring.modulus()});
    case Ring::Kind::Integers:
      break;
  }
  throw NonFieldRing(op);
}

template <class F>
using DenseMatrix = std::vector<std::vector<typename F::Elem>>;

template <class F>
DenseMatrix<F> to_dense(const F& f, const ExactMatrix& m) {
  DenseMatrix<F> d(m.rows(), std::vector<typename F::Elem>(m.cols(), f.zero()));
  for (const auto& [key, v] : m.entries()) d[key.first][key.second] = f.from(v);
  return d;
}

/// In-place reduced row echelon form; returns pivot columns in order.
template <class F>
std::vector<std::size_t> rref(const F& f, DenseMatrix<F>& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && f.is_zero(a[sel][col])) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const auto inv = f.inv(a[row][col]);
    for (auto& v : a[row]) v = f.mul(v, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || f.is_zero(a[r][col])) continue;
      const auto factor = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) {
        if (!f.is_zero(a[row][c])) a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Kernel basis of a dense matrix with `ncols` columns.
template <class F>
std::vector<std::vector<typename F::Elem>> dense_kernel(const F& f, DenseMatrix<F> a,
                                                        std::size_t ncols) {
  const auto pivots = rref(f, a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Elem> v(ncols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = f.sub(f.zero(), a[i][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Sparse row-oriented matrix with a column index, for pivot elimination.
template <class Elem>
struct SparseWorkMatrix {
  std::vector<std::map<std::size_t, Elem>> rows;
  std::vector<std::set<std::size_t>> col_rows;

  SparseWorkMatrix(std::size_t nrows, std::size_t ncols) : rows(nrows), col_rows(ncols) {}
};

/// Eliminates every pivot accepted by `accept` (column by column, shortest
/// row first) until no acceptable pivot remains. Each elimination clears
/// the pivot's row and column; returns the number of pivots eliminated.
template <class F, class Accept>
std::size_t sparse_eliminate(const F& f, SparseWorkMatrix<typename F::Elem>& m,
                             Accept&& accept) {
  std::size_t eliminated = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t col = 0; col < m.col_rows.size(); ++col) {
      if (m.col_rows[col].empty()) continue;
      std::size_t best = SIZE_MAX;
      for (auto r : m.col_rows[col]) {
        if (!accept(m.rows[r].at(col))) continue;
        if (best == SIZE_MAX || m.rows[r].size() < m.rows[best].size()) best = r;
      }
      if (best == SIZE_MAX) continue;

      const auto pivot_row = m.rows[best];
      const auto pivot_inv = f.inv(pivot_row.at(col));
      const std::vector<std::size_t> others(m.col_rows[col].begin(), m.col_rows[col].end());
      for (auto r : others) {
        if (r == best) continue;
        auto& row = m.rows[r];
        const auto factor = f.mul(row.at(col), pivot_inv);
        for (const auto& [c, v] : pivot_row) {
          auto it = row.find(c);
          auto updated = f.sub(it == row.end() ? f.zero() : it->second, f.mul(factor, v));
          if (f.is_zero(updated)) {
            if (it != row.end()) row.erase(it);
            m.col_rows[c].erase(r);
          } else if (it == row.end()) {
            row.emplace(c, std::move(updated));
            m.col_rows[c].insert(r);
          } else {
            it->second = std::move(updated);
          }
        }
      }
      for (const auto& [c, v] : pivot_row) m.col_rows[c].erase(best);
      m.rows[best].clear();
      ++eliminated;
      progress = true;
    }
  }
  return eliminated;
}

template <class F>
SparseWorkMatrix<typename F::Elem> to_sparse(const F& f, const ExactMatrix& m) {
  SparseWorkMatrix<typename F::Elem> s(m.rows(), m.cols());
  for (const auto& [key, v] : m.entries()) {
    auto e = f.from(v);
    if (f.is_zero(e)) continue;
    s.rows[key.first].emplace(key.second, std::move(e));
    s.col_rows[key.second].insert(key.first);
  }
  return s;
}

}  // namespace lefschetz::detail
