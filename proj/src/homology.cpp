#include "lefschetz/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "field.hpp"
#include "lefschetz/errors.hpp"

namespace lefschetz {

HomologyProfile HomologyProfile::point(const Ring& ring) {
  return HomologyProfile(ring, {DegreeHomology{1, {}}});
}

DegreeHomology HomologyProfile::degree(std::size_t n) const {
  return n < degrees_.size() ? degrees_[n] : DegreeHomology{};
}

bool HomologyProfile::is_zero() const {
  return std::all_of(degrees_.begin(), degrees_.end(),
                     [](const DegreeHomology& d) { return d.is_zero(); });
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  if (!(a.ring_ == b.ring_)) return false;
  const std::size_t n = std::max(a.degrees_.size(), b.degrees_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.degree(i) == b.degree(i))) return false;
  }
  return true;
}

std::string format_group(const DegreeHomology& h, const Ring& ring) {
  if (h.is_zero()) return "0";
  std::string base;
  switch (ring.kind()) {
    case Ring::Kind::Integers:
      base = "Z";
      break;
    case Ring::Kind::Rationals:
      base = "Q";
      break;
    case Ring::Kind::PrimeField:
      base = "F" + std::to_string(ring.modulus());
      break;
  }
  std::vector<std::string> parts;
  if (h.rank == 1) {
    parts.push_back(base);
  } else if (h.rank > 1) {
    parts.push_back(base + "^" + std::to_string(h.rank));
  }
  for (const auto& t : h.torsion) parts.push_back("Z/" + t.str());
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

// Chain complex on the cells selected by `keep`, one degree per dimension
// of X; rows and columns follow X's canonical order.
ChainComplex induced_chain_complex(const LefschetzComplex& x, const std::vector<char>& keep) {
  ChainComplex c;
  c.ring = x.ring();
  const int top = x.top_dimension();
  std::vector<std::size_t> position(x.size(), 0);
  for (int q = 0; q <= top; ++q) {
    std::size_t count = 0;
    for (CellIndex i : x.cells_of_dim(q)) {
      if (keep[i]) position[i] = count++;
    }
    c.ranks.push_back(count);
  }
  for (int q = 0; q <= top; ++q) {
    const std::size_t rows = q > 0 ? c.ranks[q - 1] : 0;
    ExactMatrix m(rows, c.ranks[q], x.ring());
    for (CellIndex i : x.cells_of_dim(q)) {
      if (!keep[i]) continue;
      for (const auto& [y, v] : x.boundary(i)) {
        if (keep[y]) m.set(position[y], position[i], v);
      }
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

std::vector<char> mask_of(const LefschetzComplex& x, const CellSet& a) {
  std::vector<char> mask(x.size(), 0);
  for (CellIndex i : a) mask.at(i) = 1;
  return mask;
}

void require_closed(const LefschetzComplex& x, const CellSet& a) {
  if (!is_closed(x, a)) throw NotClosed();
}

}  // namespace

ChainComplex chain_complex(const LefschetzComplex& x) {
  return induced_chain_complex(x, std::vector<char>(x.size(), 1));
}

ChainComplex quotient_chain_complex(const LefschetzComplex& x, const CellSet& sub) {
  require_closed(x, sub);
  auto keep = mask_of(x, sub);
  for (auto& k : keep) k = !k;
  return induced_chain_complex(x, keep);
}

HomologyProfile chain_homology(const ChainComplex& c, const Ring& ring) {
  const std::size_t n = c.ranks.size();
  std::vector<std::size_t> rank(n + 1, 0);
  std::vector<std::vector<Integer>> divisors(n + 1);
  for (std::size_t q = 1; q < n; ++q) {
    const ExactMatrix m = c.boundaries[q].over(ring);
    if (ring.is_field()) {
      rank[q] = rank_over(m, ring);
    } else {
      auto snf = smith_normal_form(m);
      rank[q] = snf.rank;
      divisors[q] = std::move(snf.divisors);
    }
  }
  std::vector<DegreeHomology> degrees(n);
  for (std::size_t q = 0; q < n; ++q) {
    degrees[q].rank = c.ranks[q] - rank[q] - rank[q + 1];
    for (const auto& d : divisors[q + 1]) {
      if (d > 1) degrees[q].torsion.push_back(d);
    }
  }
  return HomologyProfile(ring, std::move(degrees));
}

HomologyProfile lefschetz_homology(const LefschetzComplex& x, const Ring& ring) {
  return chain_homology(chain_complex(x), ring);
}

HomologyProfile relative_homology(const LefschetzComplex& x, const CellSet& closed,
                                  const Ring& ring) {
  require_closed(x, closed);
  return lefschetz_homology(restrict_to(x, complement(x, closed)), ring);
}

bool excision_check(const LefschetzComplex& x, const CellSet& closed, const Ring& ring) {
  const HomologyProfile via_open_complement = relative_homology(x, closed, ring);
  const HomologyProfile via_quotient = chain_homology(quotient_chain_complex(x, closed), ring);
  return via_open_complement == via_quotient;
}

std::string node_label(const SequenceNode& node) {
  const std::string n = std::to_string(node.degree);
  switch (node.space) {
    case SequenceSpace::Sub:
      return "H_" + n + "(X')";
    case SequenceSpace::Whole:
      return "H_" + n + "(X)";
    case SequenceSpace::Relative:
      return "H_" + n + "(X,X')";
  }
  return "?";
}

namespace {

template <class F>
using Vec = std::vector<typename F::Elem>;
template <class F>
using Mat = detail::DenseMatrix<F>;

// Homology of one degree over a field: an independent spanning set of the
// boundaries and cycle representatives completing it to a basis of the
// cycles mod boundaries.
template <class F>
struct DegreeBasis {
  std::size_t cells = 0;
  std::vector<Vec<F>> boundaries;
  std::vector<Vec<F>> reps;
};

// Columns of `cols` (each of length `len`) that are independent, greedily
// in order.
template <class F>
std::vector<std::size_t> independent_columns(const F& f, const std::vector<Vec<F>>& cols,
                                             std::size_t len) {
  Mat<F> a(len, Vec<F>(cols.size(), f.zero()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < len; ++i) a[i][j] = cols[j][i];
  }
  return detail::rref(f, a, cols.size());
}

template <class F>
std::vector<DegreeBasis<F>> field_bases(const F& f, const ChainComplex& c) {
  const std::size_t n = c.ranks.size();
  std::vector<DegreeBasis<F>> out(n);
  for (std::size_t q = 0; q < n; ++q) {
    auto& b = out[q];
    b.cells = c.ranks[q];
    if (q + 1 < n) {
      const auto up = detail::to_dense(f, c.boundaries[q + 1]);
      std::vector<Vec<F>> cols(c.ranks[q + 1], Vec<F>(b.cells, f.zero()));
      for (std::size_t i = 0; i < b.cells; ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) cols[j][i] = up[i][j];
      }
      for (auto j : independent_columns(f, cols, b.cells)) b.boundaries.push_back(cols[j]);
    }
    const auto cycles = detail::dense_kernel(f, detail::to_dense(f, c.boundaries[q]), b.cells);
    std::vector<Vec<F>> combined = b.boundaries;
    combined.insert(combined.end(), cycles.begin(), cycles.end());
    for (auto j : independent_columns(f, combined, b.cells)) {
      if (j >= b.boundaries.size()) b.reps.push_back(combined[j]);
    }
  }
  return out;
}

// Coordinates of each cycle in `vs` with respect to the representatives of
// `b`; throws if some vector is not a cycle of that degree.
template <class F>
Mat<F> homology_coordinates(const F& f, const DegreeBasis<F>& b, const std::vector<Vec<F>>& vs) {
  const std::size_t nb = b.boundaries.size(), nh = b.reps.size();
  Mat<F> a(b.cells, Vec<F>(nb + nh + vs.size(), f.zero()));
  for (std::size_t i = 0; i < b.cells; ++i) {
    for (std::size_t j = 0; j < nb; ++j) a[i][j] = b.boundaries[j][i];
    for (std::size_t j = 0; j < nh; ++j) a[i][nb + j] = b.reps[j][i];
    for (std::size_t j = 0; j < vs.size(); ++j) a[i][nb + nh + j] = vs[j][i];
  }
  const auto pivots = detail::rref(f, a, nb + nh);
  if (pivots.size() != nb + nh) throw std::logic_error("homology basis is not independent");
  Mat<F> coords(nh, Vec<F>(vs.size(), f.zero()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const std::size_t col = nb + nh + j;
    for (std::size_t r = nb + nh; r < b.cells; ++r) {
      if (!f.is_zero(a[r][col])) throw std::logic_error("vector is not a cycle");
    }
    for (std::size_t h = 0; h < nh; ++h) coords[h][j] = a[nb + h][col];
  }
  return coords;
}

template <class F>
std::size_t dense_rank(const F& f, Mat<F> a, std::size_t cols) {
  return detail::rref(f, a, cols).size();
}

template <class F>
bool product_is_zero(const F& f, const Mat<F>& out, const Mat<F>& in, std::size_t mid,
                     std::size_t in_cols) {
  for (const auto& row : out) {
    for (std::size_t j = 0; j < in_cols; ++j) {
      auto acc = f.zero();
      for (std::size_t k = 0; k < mid; ++k) acc = f.add(acc, f.mul(row[k], in[k][j]));
      if (!f.is_zero(acc)) return false;
    }
  }
  return true;
}

template <class F>
ExactSequenceReport build_sequence(const F& f, const LefschetzComplex& x, const CellSet& closed,
                                   const Ring& ring) {
  const auto sub_mask = mask_of(x, closed);
  std::vector<char> rel_mask(sub_mask.size());
  for (std::size_t i = 0; i < sub_mask.size(); ++i) rel_mask[i] = !sub_mask[i];

  const ChainComplex whole_c = chain_complex(x);
  const auto sub = field_bases(f, induced_chain_complex(x, sub_mask));
  const auto whole = field_bases(f, whole_c);
  const auto rel = field_bases(f, induced_chain_complex(x, rel_mask));

  const int top = x.top_dimension();
  // Positions of the sub/relative cells inside X's degree-q list.
  std::vector<std::vector<std::size_t>> sub_pos(top + 1), rel_pos(top + 1);
  for (int q = 0; q <= top; ++q) {
    const auto cells = x.cells_of_dim(q);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      (sub_mask[cells[k]] ? sub_pos : rel_pos)[q].push_back(k);
    }
  }
  auto embed = [&](const Vec<F>& v, const std::vector<std::size_t>& pos, std::size_t len) {
    Vec<F> out(len, f.zero());
    for (std::size_t k = 0; k < pos.size(); ++k) out[pos[k]] = v[k];
    return out;
  };
  auto project = [&](const Vec<F>& v, const std::vector<std::size_t>& pos) {
    Vec<F> out;
    out.reserve(pos.size());
    for (auto p : pos) out.push_back(v[p]);
    return out;
  };

  ExactSequenceReport report;
  report.ring = ring;
  std::vector<Mat<F>> maps;
  for (int q = top; q >= 0; --q) {
    const auto& s = sub[q];
    const auto& w = whole[q];
    const auto& r = rel[q];
    report.nodes.push_back({SequenceSpace::Sub, q, s.reps.size()});
    report.nodes.push_back({SequenceSpace::Whole, q, w.reps.size()});
    report.nodes.push_back({SequenceSpace::Relative, q, r.reps.size()});

    std::vector<Vec<F>> images;
    for (const auto& h : s.reps) images.push_back(embed(h, sub_pos[q], w.cells));
    maps.push_back(homology_coordinates(f, w, images));

    images.clear();
    for (const auto& h : w.reps) images.push_back(project(h, rel_pos[q]));
    maps.push_back(homology_coordinates(f, r, images));

    if (q == 0) break;
    // Connecting map: lift, take the boundary in X, read it in X'.
    const auto d = detail::to_dense(f, whole_c.boundaries[q]);
    images.clear();
    for (const auto& h : r.reps) {
      const Vec<F> lifted = embed(h, rel_pos[q], w.cells);
      Vec<F> bd(whole[q - 1].cells, f.zero());
      for (std::size_t i = 0; i < bd.size(); ++i) {
        for (std::size_t k = 0; k < lifted.size(); ++k) {
          if (!f.is_zero(lifted[k])) bd[i] = f.add(bd[i], f.mul(d[i][k], lifted[k]));
        }
      }
      for (auto p : rel_pos[q - 1]) {
        if (!f.is_zero(bd[p])) throw std::logic_error("lifted boundary leaves the subcomplex");
      }
      images.push_back(project(bd, sub_pos[q - 1]));
    }
    maps.push_back(homology_coordinates(f, sub[q - 1], images));
  }

  const auto& nodes = report.nodes;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::size_t dim = nodes[k].dimension;
    const bool has_in = k > 0;
    const bool has_out = k < maps.size();
    const std::size_t rank_in = has_in ? dense_rank(f, maps[k - 1], nodes[k - 1].dimension) : 0;
    const std::size_t rank_out = has_out ? dense_rank(f, maps[k], dim) : 0;
    bool ok = rank_in + rank_out == dim;
    if (ok && has_in && has_out) {
      ok = product_is_zero(f, maps[k], maps[k - 1], dim, nodes[k - 1].dimension);
    }
    if (!ok) {
      report.exact = false;
      report.first_failure = k;
      break;
    }
  }

  for (const auto& m : maps) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : m) {
      std::vector<Rational> r;
      for (const auto& v : row) r.push_back(f.to_rational(v));
      out.push_back(std::move(r));
    }
    report.maps.push_back(std::move(out));
  }
  return report;
}

}  // namespace

ExactSequenceReport long_exact_sequence(const LefschetzComplex& x, const CellSet& closed,
                                        const Ring& ring) {
  require_closed(x, closed);
  return detail::with_field(ring, "long_exact_sequence", [&](const auto& field) {
    const LefschetzComplex y = with_ring(x, ring);
    return build_sequence(field, y, closed, ring);
  });
}

}  // namespace lefschetz
