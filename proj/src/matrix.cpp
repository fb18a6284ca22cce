#include "lefschetz/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "field.hpp"

namespace lefschetz {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, Ring ring) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), ncols, ring);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, Ring ring) {
  ExactMatrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Integer ExactMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Integer(0) : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Integer& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  Integer v = ring_.reduce(value);
  if (v == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = std::move(v);
  }
}

std::vector<std::vector<Integer>> ExactMatrix::dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
  for (const auto& [key, v] : entries_) d[key.first][key.second] = v;
  return d;
}

ExactMatrix ExactMatrix::over(const Ring& ring) const {
  ExactMatrix m(rows_, cols_, ring);
  for (const auto& [key, v] : entries_) m.set(key.first, key.second, v);
  return m;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
  std::vector<std::vector<std::pair<std::size_t, Integer>>> b_rows(b.rows());
  for (const auto& [key, v] : b.entries()) b_rows[key.first].emplace_back(key.second, v);
  std::map<ExactMatrix::Key, Integer> acc;
  for (const auto& [key, v] : a.entries()) {
    for (const auto& [c, w] : b_rows[key.second]) acc[{key.first, c}] += v * w;
  }
  ExactMatrix out(a.rows(), b.cols(), a.ring());
  for (const auto& [key, v] : acc) out.set(key.first, key.second, v);
  return out;
}

namespace {

using Dense = std::vector<std::vector<Integer>>;

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Integer "field" whose only invertible pivots are +-1.
struct UnitPivots {
  using Elem = Integer;
  Elem zero() const { return 0; }
  Elem from(const Integer& v) const { return v; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& u) const { return u; }
  bool is_zero(const Elem& a) const { return a == 0; }
};

struct DenseSmith {
  Dense a;
  std::size_t m, n;
  Dense* left;
  Dense* right;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (left) std::swap((*left)[i], (*left)[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (right) {
      for (auto& row : *right) std::swap(row[i], row[j]);
    }
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[src][c] != 0) a[dst][c] += q * a[src][c];
    }
    if (left) {
      auto& l = *left;
      for (std::size_t c = 0; c < m; ++c) {
        if (l[src][c] != 0) l[dst][c] += q * l[src][c];
      }
    }
  }
  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < m; ++r) {
      if (a[r][src] != 0) a[r][dst] += q * a[r][src];
    }
    if (right) {
      auto& rt = *right;
      for (std::size_t r = 0; r < n; ++r) {
        if (rt[r][src] != 0) rt[r][dst] += q * rt[r][src];
      }
    }
  }
  void negate_row(std::size_t i) {
    for (auto& v : a[i]) v = -v;
    if (left) {
      for (auto& v : (*left)[i]) v = -v;
    }
  }

  // Moves the smallest nonzero entry of row t / column t to (t, t).
  void pivot_from_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    Integer best = abs_value(a[t][t]);
    for (std::size_t i = t + 1; i < m; ++i) {
      if (a[i][t] != 0 && (best == 0 || abs_value(a[i][t]) < best)) {
        best = abs_value(a[i][t]);
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (a[t][j] != 0 && (best == 0 || abs_value(a[t][j]) < best)) {
        best = abs_value(a[t][j]);
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  std::vector<Integer> run() {
    std::vector<Integer> divisors;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      // Global minimal-magnitude pivot in the trailing block.
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (a[i][j] != 0 && (pi == m || abs_value(a[i][j]) < best)) {
            best = abs_value(a[i][j]);
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          add_row(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          add_col(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) {
          pivot_from_cross(t);
          continue;
        }
        std::size_t bad_row = m;
        for (std::size_t i = t + 1; i < m && bad_row == m; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row == m) break;
        add_row(t, bad_row, 1);
      }
      if (a[t][t] < 0) negate_row(t);
      divisors.push_back(a[t][t]);
    }
    return divisors;
  }
};

Dense identity_dense(std::size_t n) {
  Dense d(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

ExactMatrix dense_to_exact(const Dense& d, std::size_t rows, std::size_t cols) {
  ExactMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (d[r][c] != 0) out.set(r, c, d[r][c]);
    }
  }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const ExactMatrix& input, bool with_transforms) {
  const ExactMatrix m = input.ring().kind() == Ring::Kind::Integers
                            ? input
                            : input.over(Ring::integers());
  SmithForm result;
  if (with_transforms) {
    Dense left = identity_dense(m.rows());
    Dense right = identity_dense(m.cols());
    DenseSmith smith{m.dense(), m.rows(), m.cols(), &left, &right};
    result.divisors = smith.run();
    result.left_transform = dense_to_exact(left, m.rows(), m.rows());
    result.right_transform = dense_to_exact(right, m.cols(), m.cols());
  } else {
    const UnitPivots units;
    auto sparse = detail::to_sparse(units, m);
    const std::size_t unit_rank = detail::sparse_eliminate(
        units, sparse, [](const Integer& v) { return v == 1 || v == -1; });

    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < sparse.rows.size(); ++r) {
      if (!sparse.rows[r].empty()) live_rows.push_back(r);
    }
    for (std::size_t c = 0; c < sparse.col_rows.size(); ++c) {
      if (!sparse.col_rows[c].empty()) live_cols.push_back(c);
    }
    Dense rest(live_rows.size(), std::vector<Integer>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [c, v] : sparse.rows[live_rows[i]]) {
        const auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
        rest[i][j] = v;
      }
    }
    DenseSmith smith{std::move(rest), live_rows.size(), live_cols.size(), nullptr, nullptr};
    result.divisors.assign(unit_rank, Integer(1));
    for (auto& d : smith.run()) result.divisors.push_back(std::move(d));
  }
  result.rank = result.divisors.size();
  return result;
}

std::size_t rank_over(const ExactMatrix& m, const Ring& ring) {
  return detail::with_field(ring, "rank_over", [&](const auto& field) {
    auto sparse = detail::to_sparse(field, m);
    return detail::sparse_eliminate(field, sparse, [](const auto&) { return true; });
  });
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m, const Ring& ring) {
  return detail::with_field(ring, "kernel_basis", [&](const auto& field) {
    auto basis = detail::dense_kernel(field, detail::to_dense(field, m), m.cols());
    std::vector<std::vector<Rational>> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
      std::vector<Rational> row;
      row.reserve(v.size());
      for (const auto& e : v) row.push_back(field.to_rational(e));
      out.push_back(std::move(row));
    }
    return out;
  });
}

}  // namespace lefschetz
