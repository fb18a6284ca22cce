#include "lefschetz/topology.hpp"

#include <algorithm>

#include "lefschetz/errors.hpp"

namespace lefschetz {

namespace {

std::vector<char> to_mask(const LefschetzComplex& x, const CellSet& a) {
  std::vector<char> mask(x.size(), 0);
  for (CellIndex i : a) mask.at(i) = 1;
  return mask;
}

CellSet from_mask(const std::vector<char>& mask) {
  CellSet out;
  for (CellIndex i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

CellSet make_cell_set(const LefschetzComplex& x, const std::vector<std::string>& ids) {
  CellSet out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(x.index_of(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> cell_ids(const LefschetzComplex& x, const CellSet& a) {
  std::vector<std::string> out;
  out.reserve(a.size());
  for (CellIndex i : a) out.push_back(x.id(i));
  return out;
}

CellSet all_cells(const LefschetzComplex& x) {
  CellSet out(x.size());
  for (CellIndex i = 0; i < x.size(); ++i) out[i] = i;
  return out;
}

CellSet complement(const LefschetzComplex& x, const CellSet& a) {
  auto mask = to_mask(x, a);
  for (auto& m : mask) m = !m;
  return from_mask(mask);
}

CellSet closure(const LefschetzComplex& x, const CellSet& a) {
  auto mask = to_mask(x, a);
  std::vector<CellIndex> stack(a.begin(), a.end());
  while (!stack.empty()) {
    const CellIndex c = stack.back();
    stack.pop_back();
    for (const auto& [y, v] : x.boundary(c)) {
      if (!mask[y]) {
        mask[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return from_mask(mask);
}

CellSet open_hull(const LefschetzComplex& x, const CellSet& a) {
  auto mask = to_mask(x, a);
  std::vector<CellIndex> stack(a.begin(), a.end());
  while (!stack.empty()) {
    const CellIndex c = stack.back();
    stack.pop_back();
    for (CellIndex up : x.cofacets(c)) {
      if (!mask[up]) {
        mask[up] = 1;
        stack.push_back(up);
      }
    }
  }
  return from_mask(mask);
}

CellSet mouth(const LefschetzComplex& x, const CellSet& a) {
  const CellSet cl = closure(x, a);
  CellSet out;
  std::set_difference(cl.begin(), cl.end(), a.begin(), a.end(), std::back_inserter(out));
  return out;
}

bool is_closed(const LefschetzComplex& x, const CellSet& a) { return closure(x, a) == a; }

bool is_open(const LefschetzComplex& x, const CellSet& a) { return open_hull(x, a) == a; }

bool is_locally_closed(const LefschetzComplex& x, const CellSet& a) {
  return is_closed(x, mouth(x, a));
}

LefschetzComplex restrict_to(const LefschetzComplex& x, const CellSet& a) {
  if (!is_locally_closed(x, a)) throw NotLocallyClosed();
  const auto mask = to_mask(x, a);
  std::vector<Cell> cells;
  std::vector<KappaEntry> kappa;
  for (CellIndex c : a) {
    cells.push_back(x.cell(c));
    for (const auto& [y, v] : x.boundary(c)) {
      if (mask[y]) kappa.push_back({x.id(c), x.id(y), v});
    }
  }
  return build_complex(std::move(cells), kappa, x.ring());
}

std::vector<CellSet> enumerate_closed_sets(const LefschetzComplex& x, std::size_t cap) {
  // Cells are decided in (dim, id) order, so every facet of a cell is
  // decided before the cell; a cell may join only if all its facets did.
  std::vector<CellSet> out;
  std::vector<char> mask(x.size(), 0);
  auto recurse = [&](auto&& self, CellIndex c) -> void {
    if (c == x.size()) {
      if (out.size() == cap) throw TooManyClosedSets(cap);
      out.push_back(from_mask(mask));
      return;
    }
    self(self, c + 1);
    const auto& bd = x.boundary(c);
    if (std::all_of(bd.begin(), bd.end(), [&](const auto& e) { return mask[e.first] != 0; })) {
      mask[c] = 1;
      self(self, c + 1);
      mask[c] = 0;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace lefschetz
