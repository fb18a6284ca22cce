#include "lefschetz/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lefschetz/errors.hpp"
#include "lefschetz/theorem.hpp"

namespace lefschetz {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-empty lines with '#' comments stripped, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer(const std::string& s) {
  return Integer(s.front() == '+' ? s.substr(1) : s);
}

}  // namespace

LefschetzComplex parse_lef(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw SyntaxError(1, "missing ring line");
  const Line& head = lines.front();
  if (head.tokens.front() != "ring" || head.tokens.size() < 2) {
    throw SyntaxError(head.number, "expected 'ring Z', 'ring Q' or 'ring Zp <p>'");
  }
  std::string ring_text = head.tokens[1];
  for (std::size_t i = 2; i < head.tokens.size(); ++i) ring_text += " " + head.tokens[i];
  const Ring ring = Ring::parse(ring_text);

  std::vector<Cell> cells;
  std::set<std::string> declared;
  struct PendingKappa {
    std::size_t line;
    KappaEntry entry;
  };
  std::vector<PendingKappa> kappa;
  std::set<std::pair<std::string, std::string>> seen_pairs;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tok] = lines[i];
    if (tok[0] == "cell") {
      if (tok.size() != 3) throw SyntaxError(number, "expected 'cell <id> <dim>'");
      if (!is_valid_cell_id(tok[1])) throw SyntaxError(number, "invalid cell id '" + tok[1] + "'");
      if (!is_integer_literal(tok[2]) || tok[2].front() == '-' || tok[2].size() > 6) {
        throw SyntaxError(number, "invalid dimension '" + tok[2] + "'");
      }
      cells.push_back({tok[1], std::stoi(tok[2])});
      declared.insert(tok[1]);
    } else if (tok[0] == "kappa") {
      if (tok.size() != 4) throw SyntaxError(number, "expected 'kappa <x> <y> <integer>'");
      if (!is_integer_literal(tok[3])) {
        throw SyntaxError(number, "invalid coefficient '" + tok[3] + "'");
      }
      if (!seen_pairs.emplace(tok[1], tok[2]).second) {
        throw SyntaxError(number, "duplicate kappa(" + tok[1] + ", " + tok[2] + ")");
      }
      kappa.push_back({number, {tok[1], tok[2], parse_integer(tok[3])}});
    } else if (tok[0] == "ring") {
      throw SyntaxError(number, "ring declared twice");
    } else {
      throw SyntaxError(number, "unknown directive '" + tok[0] + "'");
    }
  }

  std::vector<KappaEntry> entries;
  entries.reserve(kappa.size());
  for (auto& k : kappa) {
    for (const auto* id : {&k.entry.x, &k.entry.y}) {
      if (!declared.count(*id)) {
        throw SyntaxError(k.line, "unknown cell reference '" + *id + "'");
      }
    }
    entries.push_back(std::move(k.entry));
  }
  return build_complex(std::move(cells), entries, ring);
}

std::string render_lef(const LefschetzComplex& x) {
  std::ostringstream out;
  out << "ring " << x.ring().name() << '\n';
  for (const auto& c : x.cells()) out << "cell " << c.id << ' ' << c.dim << '\n';
  for (const auto& k : x.kappa_entries()) {
    out << "kappa " << k.x << ' ' << k.y << ' ' << k.value << '\n';
  }
  return out.str();
}

LefschetzComplex import_simplicial(const std::vector<std::vector<std::string>>& maximal) {
  if (maximal.empty()) throw EmptyInput();
  std::set<std::vector<std::string>> faces;
  bool single_char = true;
  for (auto simplex : maximal) {
    if (simplex.empty()) throw EmptyInput();
    std::sort(simplex.begin(), simplex.end());
    simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
    if (simplex.size() > 24) throw std::invalid_argument("simplex too large to expand");
    for (const auto& v : simplex) single_char = single_char && v.size() == 1;
    const std::uint32_t subsets = 1u << simplex.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
      std::vector<std::string> face;
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (mask & (1u << i)) face.push_back(simplex[i]);
      }
      faces.insert(std::move(face));
    }
  }
  auto name = [&](const std::vector<std::string>& face) {
    std::string id;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (i > 0 && !single_char) id += '_';
      id += face[i];
    }
    return id;
  };
  std::vector<Cell> cells;
  std::vector<KappaEntry> kappa;
  for (const auto& face : faces) {
    const std::string id = name(face);
    cells.push_back({id, static_cast<int>(face.size()) - 1});
    if (face.size() < 2) continue;
    for (std::size_t i = 0; i < face.size(); ++i) {
      auto sub = face;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
      kappa.push_back({id, name(sub), Integer(i % 2 == 0 ? 1 : -1)});
    }
  }
  return build_complex(std::move(cells), kappa, Ring::integers());
}

std::vector<std::vector<std::string>> parse_simplicial(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (auto& line : tokenize(text)) {
    for (const auto& v : line.tokens) {
      if (!is_valid_cell_id(v)) throw SyntaxError(line.number, "invalid vertex id '" + v + "'");
    }
    out.push_back(std::move(line.tokens));
  }
  if (out.empty()) throw EmptyInput();
  return out;
}

std::string cube_id(const Cube& cube) {
  auto coord = [](std::int64_t v) {
    return v < 0 ? "m" + std::to_string(-v) : std::to_string(v);
  };
  std::string id = "Q";
  for (std::size_t i = 0; i < cube.size(); ++i) {
    if (i > 0) id += 'x';
    id += coord(cube[i].lower);
    if (!cube[i].degenerate()) id += "_" + coord(cube[i].upper);
  }
  return id;
}

LefschetzComplex import_cubical(const std::vector<Cube>& cubes) {
  if (cubes.empty()) throw EmptyInput();
  const std::size_t embedding = cubes.front().size();
  if (embedding == 0) throw DimensionMismatch("cube with no intervals");
  for (const auto& q : cubes) {
    if (q.size() != embedding) {
      throw DimensionMismatch("cube " + cube_id(q) + " has embedding dimension " +
                              std::to_string(q.size()) + ", expected " +
                              std::to_string(embedding));
    }
    for (const auto& iv : q) {
      if (iv.upper != iv.lower && iv.upper != iv.lower + 1) {
        throw MalformedInterval("interval [" + std::to_string(iv.lower) + "," +
                                std::to_string(iv.upper) + "] is not elementary");
      }
    }
  }
  std::set<Cube> all;
  std::vector<Cube> stack(cubes.begin(), cubes.end());
  std::vector<Cell> cells;
  std::vector<KappaEntry> kappa;
  while (!stack.empty()) {
    Cube q = std::move(stack.back());
    stack.pop_back();
    if (!all.insert(q).second) continue;
    int dim = 0;
    for (const auto& iv : q) dim += iv.degenerate() ? 0 : 1;
    const std::string id = cube_id(q);
    cells.push_back({id, dim});
    int before = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j].degenerate()) continue;
      const int sign = before % 2 == 0 ? 1 : -1;
      Cube upper = q, lower = q;
      upper[j] = {q[j].upper, q[j].upper};
      lower[j] = {q[j].lower, q[j].lower};
      kappa.push_back({id, cube_id(upper), Integer(sign)});
      kappa.push_back({id, cube_id(lower), Integer(-sign)});
      stack.push_back(std::move(upper));
      stack.push_back(std::move(lower));
      ++before;
    }
  }
  return build_complex(std::move(cells), kappa, Ring::integers());
}

std::vector<Cube> parse_cubical(std::string_view text) {
  std::vector<Cube> out;
  for (const auto& line : tokenize(text)) {
    std::string joined;
    for (const auto& t : line.tokens) joined += t;
    Cube cube;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) { throw SyntaxError(line.number, why); };
    auto read_int = [&]() -> std::int64_t {
      const std::size_t start = pos;
      if (pos < joined.size() && joined[pos] == '-') ++pos;
      while (pos < joined.size() && std::isdigit(static_cast<unsigned char>(joined[pos]))) ++pos;
      const std::string lit = joined.substr(start, pos - start);
      if (!is_integer_literal(lit) || lit.size() > 15) fail("expected integer in '" + joined + "'");
      return std::stoll(lit);
    };
    while (true) {
      if (pos >= joined.size() || joined[pos] != '[') fail("expected '[' in '" + joined + "'");
      ++pos;
      Interval iv;
      iv.lower = iv.upper = read_int();
      if (pos < joined.size() && joined[pos] == ',') {
        ++pos;
        iv.upper = read_int();
      }
      if (pos >= joined.size() || joined[pos] != ']') fail("expected ']' in '" + joined + "'");
      ++pos;
      cube.push_back(iv);
      if (pos == joined.size()) break;
      if (joined[pos] != 'x') fail("expected 'x' between intervals in '" + joined + "'");
      ++pos;
    }
    out.push_back(std::move(cube));
  }
  if (out.empty()) throw EmptyInput();
  return out;
}

std::string mode_name(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::SimplicialRandom:
      return "simplicial-random";
    case GeneratorMode::CubicalRandom:
      return "cubical-random";
    case GeneratorMode::BasisChange:
      return "basis-change";
  }
  return "?";
}

GeneratorMode parse_mode(std::string_view name) {
  for (auto m : {GeneratorMode::SimplicialRandom, GeneratorMode::CubicalRandom,
                 GeneratorMode::BasisChange}) {
    if (mode_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown generator mode '" + std::string(name) + "'");
}

void GeneratorConfig::validate() const {
  if (max_vertices == 0 || max_facets == 0 || max_dim <= 0 || coefficient_bound <= 0) {
    throw std::invalid_argument("generator bounds must be positive");
  }
}

namespace {

// Draws from mt19937_64 by reduction so the stream is identical on every
// standard library.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

LefschetzComplex draw_simplicial(const GeneratorConfig& cfg, Draw& draw) {
  const std::size_t nv = 1 + draw.below(cfg.max_vertices);
  const std::size_t nf = 1 + draw.below(cfg.max_facets);
  const std::size_t max_size = std::min<std::size_t>(cfg.max_dim + 1, nv);
  std::vector<std::vector<std::string>> simplices;
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<std::size_t> pool(nv);
    for (std::size_t i = 0; i < nv; ++i) pool[i] = i;
    const std::size_t size = 1 + draw.below(max_size);
    std::vector<std::string> simplex;
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t pick = i + draw.below(nv - i);
      std::swap(pool[i], pool[pick]);
      simplex.push_back("v" + std::to_string(pool[i]));
    }
    simplices.push_back(std::move(simplex));
  }
  return import_simplicial(simplices);
}

LefschetzComplex draw_cubical(const GeneratorConfig& cfg, Draw& draw) {
  const std::size_t d = 1 + draw.below(std::min(cfg.max_dim, 3));
  const std::int64_t extent = static_cast<std::int64_t>(std::clamp<std::size_t>(cfg.max_vertices, 1, 3));
  const std::size_t nf = 1 + draw.below(cfg.max_facets);
  std::vector<Cube> cubes;
  for (std::size_t f = 0; f < nf; ++f) {
    Cube q;
    for (std::size_t i = 0; i < d; ++i) {
      if (draw.below(2) == 0) {
        const auto k = static_cast<std::int64_t>(draw.below(extent + 1));
        q.push_back({k, k});
      } else {
        const auto k = static_cast<std::int64_t>(draw.below(extent));
        q.push_back({k, k + 1});
      }
    }
    cubes.push_back(std::move(q));
  }
  return import_cubical(cubes);
}

}  // namespace

LefschetzComplex random_complex(const GeneratorConfig& cfg) {
  cfg.validate();
  Draw draw(cfg.seed);
  switch (cfg.mode) {
    case GeneratorMode::SimplicialRandom:
      return draw_simplicial(cfg, draw);
    case GeneratorMode::CubicalRandom:
      return draw_cubical(cfg, draw);
    case GeneratorMode::BasisChange:
      break;
  }
  LefschetzComplex x = draw_simplicial(cfg, draw);
  const bool augmentable = is_augmentable(x);
  for (std::size_t step = 0; step < cfg.basis_steps; ++step) {
    std::vector<int> degrees;
    for (int q = 1; q <= x.top_dimension(); ++q) {
      if (x.cells_of_dim(q).size() >= 2) degrees.push_back(q);
    }
    if (degrees.empty()) break;
    const int q = degrees[draw.below(degrees.size())];
    const auto cells = x.cells_of_dim(q);
    const std::size_t t = draw.below(cells.size());
    std::size_t s = draw.below(cells.size() - 1);
    if (s >= t) ++s;
    const auto bound = static_cast<std::uint64_t>(cfg.coefficient_bound);
    auto k = static_cast<std::int64_t>(draw.below(2 * bound)) - static_cast<std::int64_t>(bound);
    if (k >= 0) ++k;
    x = basis_change(x, x.id(cells[t]), x.id(cells[s]), Integer(k));
  }
  if (augmentable && !is_augmentable(x)) {
    throw std::logic_error("basis change broke augmentability");
  }
  return x;
}

LefschetzComplex basis_change(const LefschetzComplex& x, std::string_view target,
                              std::string_view source, const Integer& multiple) {
  const CellIndex t = x.index_of(target);
  const CellIndex s = x.index_of(source);
  if (t == s || x.dim(t) != x.dim(s)) {
    throw std::invalid_argument("basis change needs two distinct cells of equal dimension");
  }
  if (x.dim(t) == 0) throw std::invalid_argument("basis changes in degree 0 are not allowed");

  std::map<std::pair<CellIndex, CellIndex>, Integer> kappa;
  for (CellIndex c = 0; c < x.size(); ++c) {
    for (const auto& [y, v] : x.boundary(c)) kappa[{c, y}] = v;
  }
  for (const auto& [y, v] : x.boundary(s)) kappa[{t, y}] += multiple * v;
  for (CellIndex w : x.cofacets(t)) kappa[{w, s}] -= multiple * x.kappa(w, t);

  std::vector<KappaEntry> entries;
  for (const auto& [key, v] : kappa) entries.push_back({x.id(key.first), x.id(key.second), v});
  return build_complex(x.cells(), entries, x.ring());
}

std::string export_dot(const LefschetzComplex& x) {
  std::ostringstream out;
  out << "digraph lefschetz {\n";
  for (int q = 0; q <= x.top_dimension(); ++q) {
    out << "  subgraph dim" << q << " { rank=same;";
    for (CellIndex c : x.cells_of_dim(q)) out << " \"" << x.id(c) << "\";";
    out << " }\n";
  }
  // Covering pairs of the face order are exactly the facet pairs: a strict
  // face drops the dimension, facets drop it by one.
  for (CellIndex c = 0; c < x.size(); ++c) {
    for (const auto& [y, v] : x.boundary(c)) {
      out << "  \"" << x.id(c) << "\" -> \"" << x.id(y) << "\" [label=\"" << v << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace lefschetz
