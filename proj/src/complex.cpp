#include "lefschetz/complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "lefschetz/errors.hpp"

namespace lefschetz {

bool is_valid_cell_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<CellIndex> LefschetzComplex::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CellIndex LefschetzComplex::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw UnknownCellReference(std::string(id));
  return *found;
}

int LefschetzComplex::top_dimension() const noexcept {
  return cells_.empty() ? -1 : cells_.back().dim;
}

std::vector<CellIndex> LefschetzComplex::cells_of_dim(int q) const {
  std::vector<CellIndex> out;
  auto lo = std::lower_bound(cells_.begin(), cells_.end(), q,
                             [](const Cell& c, int d) { return c.dim < d; });
  for (auto it = lo; it != cells_.end() && it->dim == q; ++it) {
    out.push_back(static_cast<CellIndex>(it - cells_.begin()));
  }
  return out;
}

Integer LefschetzComplex::kappa(CellIndex x, CellIndex y) const {
  const auto& b = boundary_.at(x);
  auto it = std::lower_bound(b.begin(), b.end(), y,
                             [](const auto& e, CellIndex v) { return e.first < v; });
  return (it != b.end() && it->first == y) ? it->second : Integer(0);
}

std::vector<KappaEntry> LefschetzComplex::kappa_entries() const {
  std::vector<KappaEntry> out;
  for (CellIndex x = 0; x < cells_.size(); ++x) {
    for (const auto& [y, v] : boundary_[x]) out.push_back({cells_[x].id, cells_[y].id, v});
  }
  std::sort(out.begin(), out.end(), [](const KappaEntry& a, const KappaEntry& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  return out;
}

LefschetzComplex build_complex(std::vector<Cell> cells, const std::vector<KappaEntry>& kappa,
                               Ring ring) {
  LefschetzComplex out;
  out.ring_ = ring;
  for (const auto& c : cells) {
    if (!is_valid_cell_id(c.id)) throw ValidationError("invalid cell id '" + c.id + "'");
    if (c.dim < 0) throw ValidationError("negative dimension for cell " + c.id);
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.dim, a.id) < std::tie(b.dim, b.id);
  });
  for (CellIndex i = 0; i < cells.size(); ++i) {
    if (!out.index_.emplace(cells[i].id, i).second) throw DuplicateCellId(cells[i].id);
  }
  out.cells_ = std::move(cells);
  const std::size_t n = out.cells_.size();

  std::vector<std::map<CellIndex, Integer>> bd(n);
  for (const auto& e : kappa) {
    const CellIndex x = out.index_of(e.x);
    const CellIndex y = out.index_of(e.y);
    bd[x][y] += e.value;
  }
  out.boundary_.resize(n);
  out.cofacets_.resize(n);
  for (CellIndex x = 0; x < n; ++x) {
    for (auto& [y, v] : bd[x]) {
      Integer r = ring.reduce(v);
      if (r == 0) continue;
      if (out.cells_[x].dim != out.cells_[y].dim + 1) {
        throw GradingViolation(out.cells_[x].id, out.cells_[y].id);
      }
      out.boundary_[x].emplace_back(y, std::move(r));
      out.cofacets_[y].push_back(x);
    }
  }
  for (auto& c : out.cofacets_) std::sort(c.begin(), c.end());

  for (CellIndex x = 0; x < n; ++x) {
    std::map<CellIndex, Integer> second;
    for (const auto& [y, kxy] : out.boundary_[x]) {
      for (const auto& [z, kyz] : out.boundary_[y]) second[z] += kxy * kyz;
    }
    for (const auto& [z, sum] : second) {
      if (ring.reduce(sum) != 0) {
        throw KappaConditionViolation(out.cells_[x].id, out.cells_[z].id, sum.str());
      }
    }
  }
  return out;
}

LefschetzComplex with_ring(const LefschetzComplex& x, const Ring& ring) {
  if (x.ring() == ring) return x;
  return build_complex(x.cells(), x.kappa_entries(), ring);
}

ExactMatrix boundary_matrix(const LefschetzComplex& x, int q) {
  const auto cols = x.cells_of_dim(q);
  const auto rows = q > 0 ? x.cells_of_dim(q - 1) : std::vector<CellIndex>{};
  ExactMatrix m(rows.size(), cols.size(), x.ring());
  if (rows.empty()) return m;
  const CellIndex row_base = rows.front();
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [y, v] : x.boundary(cols[c])) m.set(y - row_base, c, v);
  }
  return m;
}

std::vector<std::string> facets(const LefschetzComplex& x, std::string_view id) {
  std::vector<std::string> out;
  for (const auto& [y, v] : x.boundary(x.index_of(id))) out.push_back(x.id(y));
  return out;
}

bool FacePoset::leq(CellIndex y, CellIndex x) const {
  const auto& f = faces_.at(x);
  return std::binary_search(f.begin(), f.end(), y);
}

FacePoset face_poset(const LefschetzComplex& x) {
  const std::size_t n = x.size();
  FacePoset p;
  p.faces_.resize(n);
  p.cofaces_.resize(n);
  // Facets precede their cofacets in (dim, id) order.
  std::vector<char> mark(n, 0);
  for (CellIndex c = 0; c < n; ++c) {
    std::vector<CellIndex> acc{c};
    mark[c] = 1;
    for (const auto& [y, v] : x.boundary(c)) {
      for (CellIndex f : p.faces_[y]) {
        if (!mark[f]) {
          mark[f] = 1;
          acc.push_back(f);
        }
      }
    }
    for (CellIndex f : acc) mark[f] = 0;
    std::sort(acc.begin(), acc.end());
    p.faces_[c] = std::move(acc);
  }
  for (CellIndex c = 0; c < n; ++c) {
    for (CellIndex f : p.faces_[c]) p.cofaces_[f].push_back(c);
  }
  return p;
}

}  // namespace lefschetz
