#include "lefschetz/order_complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "lefschetz/errors.hpp"

namespace lefschetz {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertices,
                                                    const std::vector<Simplex>& simplices) {
  SimplicialComplex k(std::move(vertices));
  for (const auto& s : simplices) k.add(s);
  return k;
}

void SimplicialComplex::add(Simplex simplex) {
  std::sort(simplex.begin(), simplex.end());
  simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
  if (simplex.empty()) throw std::invalid_argument("empty simplex");
  if (simplex.back() >= vertices_.size()) throw std::out_of_range("simplex vertex out of range");
  if (contains(simplex)) return;
  if (simplex.size() > 1) {
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      Simplex face = simplex;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      add(std::move(face));
    }
  }
  add_unchecked(std::move(simplex));
}

void SimplicialComplex::add_unchecked(Simplex simplex) {
  const std::size_t d = simplex.size() - 1;
  if (by_dim_.size() <= d) by_dim_.resize(d + 1);
  if (by_dim_[d].insert(std::move(simplex)).second) ++count_;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return false;
  return by_dim_[s.size() - 1].count(s) > 0;
}

const std::set<SimplicialComplex::Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::set<Simplex> none;
  if (dim < 0 || static_cast<std::size_t>(dim) >= by_dim_.size()) return none;
  return by_dim_[dim];
}

bool SimplicialComplex::is_closed_under_faces() const {
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    for (const auto& s : by_dim_[d]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!by_dim_[d - 1].count(face)) return false;
      }
    }
  }
  return true;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    for (const auto& s : by_dim_[d]) {
      bool maximal = true;
      if (d + 1 < by_dim_.size()) {
        for (const auto& t : by_dim_[d + 1]) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

namespace {

void require_same_universe(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices() != b.vertices()) {
    throw std::invalid_argument("simplicial complexes over different vertex universes");
  }
}

}  // namespace

SimplicialComplex simplicial_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  require_same_universe(a, b);
  SimplicialComplex out = a;
  for (int d = 0; d <= b.dimension(); ++d) {
    for (const auto& s : b.simplices(d)) out.add_unchecked(s);
  }
  return out;
}

SimplicialComplex simplicial_intersection(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
  require_same_universe(a, b);
  SimplicialComplex out(a.vertices());
  for (int d = 0; d <= a.dimension(); ++d) {
    for (const auto& s : a.simplices(d)) {
      if (b.contains(s)) out.add_unchecked(s);
    }
  }
  return out;
}

SimplicialComplex order_complex(const LefschetzComplex& x, const CellSet& subset,
                                std::size_t cap) {
  std::vector<std::string> vertices;
  vertices.reserve(x.size());
  for (const auto& c : x.cells()) vertices.push_back(c.id);
  SimplicialComplex k(std::move(vertices));

  const FacePoset poset = face_poset(x);
  std::vector<char> member(x.size(), 0);
  for (CellIndex c : subset) member.at(c) = 1;

  // Chains are grown downward from their top element; faces have smaller
  // canonical index, so the reversed chain is ascending.
  std::vector<std::uint32_t> chain;
  auto grow = [&](auto&& self) -> void {
    if (k.size() >= cap) throw TooManySimplices(cap);
    k.add_unchecked(SimplicialComplex::Simplex(chain.rbegin(), chain.rend()));
    const CellIndex bottom = chain.back();
    for (CellIndex y : poset.faces(bottom)) {
      if (y == bottom || !member[y]) continue;
      chain.push_back(static_cast<std::uint32_t>(y));
      self(self);
      chain.pop_back();
    }
  };
  for (CellIndex top : subset) {
    chain.assign(1, static_cast<std::uint32_t>(top));
    grow(grow);
  }
  if (!k.is_closed_under_faces()) throw std::logic_error("order complex not closed under faces");
  return k;
}

SimplicialComplex order_complex(const LefschetzComplex& x, std::size_t cap) {
  return order_complex(x, all_cells(x), cap);
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& k, const SimplicialComplex* sub) {
  if (sub) require_same_universe(k, *sub);
  ChainComplex c;
  const int top = k.dimension();
  std::vector<std::vector<SimplicialComplex::Simplex>> cells(top + 1);
  for (int d = 0; d <= top; ++d) {
    for (const auto& s : k.simplices(d)) {
      if (!sub || !sub->contains(s)) cells[d].push_back(s);
    }
    c.ranks.push_back(cells[d].size());
  }
  for (int d = 0; d <= top; ++d) {
    const std::size_t rows = d > 0 ? cells[d - 1].size() : 0;
    ExactMatrix m(rows, cells[d].size());
    if (d > 0) {
      const auto& lower = cells[d - 1];
      for (std::size_t j = 0; j < cells[d].size(); ++j) {
        const auto& s = cells[d][j];
        for (std::size_t i = 0; i < s.size(); ++i) {
          SimplicialComplex::Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          auto it = std::lower_bound(lower.begin(), lower.end(), face);
          if (it == lower.end() || *it != face) continue;
          m.set(static_cast<std::size_t>(it - lower.begin()), j, (i % 2 == 0) ? 1 : -1);
        }
      }
    }
    c.boundaries.push_back(std::move(m));
  }
  return c;
}

HomologyProfile simplicial_homology(const SimplicialComplex& k, const Ring& ring) {
  return chain_homology(simplicial_chain_complex(k), ring);
}

HomologyProfile relative_simplicial_homology(const SimplicialComplex& k,
                                             const SimplicialComplex& sub, const Ring& ring) {
  return chain_homology(simplicial_chain_complex(k, &sub), ring);
}

HomologyProfile finite_space_homology(const LefschetzComplex& x, const Ring& ring,
                                      std::size_t cap) {
  return simplicial_homology(order_complex(x, cap), ring);
}

HomologyProfile relative_finite_space_homology(const LefschetzComplex& x, const CellSet& a,
                                               const Ring& ring, std::size_t cap) {
  const SimplicialComplex whole = order_complex(x, cap);
  const SimplicialComplex sub = order_complex(x, a, cap);
  return relative_simplicial_homology(whole, sub, ring);
}

bool simplicial_excision_check(const SimplicialComplex& k1, const SimplicialComplex& k2,
                               const Ring& ring) {
  const SimplicialComplex k = simplicial_union(k1, k2);
  const SimplicialComplex meet = simplicial_intersection(k1, k2);
  return relative_simplicial_homology(k2, meet, ring) ==
         relative_simplicial_homology(k, k1, ring);
}

}  // namespace lefschetz
