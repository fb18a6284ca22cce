#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lefschetz/errors.hpp"
#include "lefschetz/theorem.hpp"

namespace py = pybind11;
using namespace lefschetz;

namespace {

py::object to_py(const Integer& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(v)),
                                                           to_py(denominator(v)));
}

Integer to_integer(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
  return Integer(py::str(h).cast<std::string>());
}

Ring ring_arg(const std::string& text) { return Ring::parse(text); }

// Profiles cross the boundary as a list of (rank, [torsion]) per degree.
py::list to_py(const HomologyProfile& p) {
  py::list out;
  for (const auto& d : p.degrees()) {
    py::list torsion;
    for (const auto& t : d.torsion) torsion.append(to_py(t));
    out.append(py::make_tuple(d.rank, torsion));
  }
  return out;
}

std::vector<std::string> format_profile(const HomologyProfile& p) {
  std::vector<std::string> out;
  for (const auto& d : p.degrees()) out.push_back(format_group(d, p.ring()));
  return out;
}

CellSet cell_set(const LefschetzComplex& x, const std::vector<std::string>& ids) {
  return make_cell_set(x, ids);
}

py::dict report_dict(const TheoremReport& r) {
  py::dict local;
  for (const auto& c : r.local_condition) local[py::str(c.cell)] = py::make_tuple(c.passes, to_py(c.profile));
  py::dict d;
  d["ring"] = r.ring.name();
  d["augmentable"] = r.augmentable;
  d["local_condition"] = local;
  d["failing_cells"] = r.failing_cells();
  d["hypothesis_holds"] = r.hypothesis_holds;
  d["lefschetz"] = to_py(r.lefschetz_profile);
  d["singular"] = to_py(r.singular_profile);
  d["conclusion_holds"] = r.conclusion_holds;
  d["consistent_with_theorem"] = r.consistent_with_theorem;
  return d;
}

LefschetzComplex generate(std::uint64_t seed, const std::string& mode, std::size_t max_vertices,
                          std::size_t max_facets, int max_dim, int coefficient_bound,
                          std::size_t basis_steps) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.mode = parse_mode(mode);
  cfg.max_vertices = max_vertices;
  cfg.max_facets = max_facets;
  cfg.max_dim = max_dim;
  cfg.coefficient_bound = coefficient_bound;
  cfg.basis_steps = basis_steps;
  return random_complex(cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lefschetz complexes: exact homology, finite-space comparison, theorem checks";

  auto base = py::register_exception<Error>(m, "LefschetzError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<SyntaxError>(m, "ParseError", base);
  py::register_exception<NotClosed>(m, "NotClosed", base);
  py::register_exception<NotLocallyClosed>(m, "NotLocallyClosed", base);
  py::register_exception<NonFieldRing>(m, "NonFieldRing", base);
  py::register_exception<UnsupportedRing>(m, "UnsupportedRing", base);
  py::register_exception<TooManyClosedSets>(m, "TooManyClosedSets", base);
  py::register_exception<TooManySimplices>(m, "TooManySimplices", base);

  py::class_<LefschetzComplex>(m, "Complex")
      .def(py::init<>())
      .def_static(
          "build",
          [](const std::vector<std::pair<std::string, int>>& cells,
             const std::vector<std::tuple<std::string, std::string, py::object>>& kappa,
             const std::string& ring) {
            std::vector<Cell> cs;
            for (const auto& [id, dim] : cells) cs.push_back({id, dim});
            std::vector<KappaEntry> ks;
            for (const auto& [x, y, v] : kappa) ks.push_back({x, y, to_integer(v)});
            return build_complex(std::move(cs), ks, ring_arg(ring));
          },
          py::arg("cells"), py::arg("kappa"), py::arg("ring") = "Z")
      .def_static("from_lef", [](const std::string& text) { return parse_lef(text); })
      .def_static("from_simplicial",
                  [](const std::vector<std::vector<std::string>>& maximal) {
                    return import_simplicial(maximal);
                  })
      .def_static("from_simplicial_text",
                  [](const std::string& text) { return import_simplicial(parse_simplicial(text)); })
      .def_static("from_cubical_text",
                  [](const std::string& text) { return import_cubical(parse_cubical(text)); })
      .def_static("random", &generate, py::arg("seed"), py::arg("mode") = "simplicial-random",
                  py::arg("max_vertices") = 5, py::arg("max_facets") = 4, py::arg("max_dim") = 2,
                  py::arg("coefficient_bound") = 2, py::arg("basis_steps") = 4)
      .def_property_readonly("ring", [](const LefschetzComplex& x) { return x.ring().name(); })
      .def_property_readonly("cells",
                             [](const LefschetzComplex& x) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& c : x.cells()) out.emplace_back(c.id, c.dim);
                               return out;
                             })
      .def_property_readonly("kappa",
                             [](const LefschetzComplex& x) {
                               py::list out;
                               for (const auto& k : x.kappa_entries())
                                 out.append(py::make_tuple(k.x, k.y, to_py(k.value)));
                               return out;
                             })
      .def_property_readonly("top_dimension", &LefschetzComplex::top_dimension)
      .def("__len__", &LefschetzComplex::size)
      .def("__eq__", [](const LefschetzComplex& a, const LefschetzComplex& b) { return a == b; })
      .def("with_ring", [](const LefschetzComplex& x, const std::string& r) { return with_ring(x, ring_arg(r)); })
      .def("to_lef", &render_lef)
      .def("to_dot", &export_dot)
      .def("facets", [](const LefschetzComplex& x, const std::string& id) { return facets(x, id); })
      .def("boundary_matrix",
           [](const LefschetzComplex& x, int q) {
             py::list rows;
             for (const auto& row : boundary_matrix(x, q).dense()) {
               py::list r;
               for (const auto& v : row) r.append(to_py(v));
               rows.append(r);
             }
             return rows;
           })
      .def("closure", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return cell_ids(x, closure(x, cell_set(x, ids)));
      })
      .def("open_hull", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return cell_ids(x, open_hull(x, cell_set(x, ids)));
      })
      .def("mouth", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return cell_ids(x, mouth(x, cell_set(x, ids)));
      })
      .def("is_closed", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return is_closed(x, cell_set(x, ids));
      })
      .def("is_open", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return is_open(x, cell_set(x, ids));
      })
      .def("is_locally_closed", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return is_locally_closed(x, cell_set(x, ids));
      })
      .def("restrict", [](const LefschetzComplex& x, const std::vector<std::string>& ids) {
        return restrict_to(x, cell_set(x, ids));
      })
      .def(
          "closed_sets",
          [](const LefschetzComplex& x, std::size_t cap) {
            std::vector<std::vector<std::string>> out;
            for (const auto& s : enumerate_closed_sets(x, cap)) out.push_back(cell_ids(x, s));
            return out;
          },
          py::arg("cap") = kDefaultClosedSetCap)
      .def("__repr__", [](const LefschetzComplex& x) {
        return "<Complex over " + x.ring().name() + " with " + std::to_string(x.size()) + " cells>";
      });

  m.def(
      "homology", [](const LefschetzComplex& x, const std::string& r) { return to_py(lefschetz_homology(x, ring_arg(r))); },
      py::arg("x"), py::arg("ring") = "Z");
  m.def(
      "singular_homology",
      [](const LefschetzComplex& x, const std::string& r) { return to_py(finite_space_homology(x, ring_arg(r))); },
      py::arg("x"), py::arg("ring") = "Z");
  m.def(
      "relative_homology",
      [](const LefschetzComplex& x, const std::vector<std::string>& sub, const std::string& r) {
        return to_py(relative_homology(x, cell_set(x, sub), ring_arg(r)));
      },
      py::arg("x"), py::arg("closed"), py::arg("ring") = "Z");
  m.def(
      "relative_singular_homology",
      [](const LefschetzComplex& x, const std::vector<std::string>& sub, const std::string& r) {
        return to_py(relative_finite_space_homology(x, cell_set(x, sub), ring_arg(r)));
      },
      py::arg("x"), py::arg("subspace"), py::arg("ring") = "Z");
  m.def(
      "format_homology",
      [](const LefschetzComplex& x, const std::string& r) { return format_profile(lefschetz_homology(x, ring_arg(r))); },
      py::arg("x"), py::arg("ring") = "Z");
  m.def(
      "excision_check",
      [](const LefschetzComplex& x, const std::vector<std::string>& sub, const std::string& r) {
        return excision_check(x, cell_set(x, sub), ring_arg(r));
      },
      py::arg("x"), py::arg("closed"), py::arg("ring") = "Z");
  m.def(
      "long_exact_sequence",
      [](const LefschetzComplex& x, const std::vector<std::string>& sub, const std::string& r) {
        const ExactSequenceReport rep = long_exact_sequence(x, cell_set(x, sub), ring_arg(r));
        py::list nodes, maps;
        for (const auto& n : rep.nodes) nodes.append(py::make_tuple(node_label(n), n.dimension));
        for (const auto& mat : rep.maps) {
          py::list rows;
          for (const auto& row : mat) {
            py::list rr;
            for (const auto& v : row) rr.append(to_py(v));
            rows.append(rr);
          }
          maps.append(rows);
        }
        py::dict d;
        d["nodes"] = nodes;
        d["maps"] = maps;
        d["exact"] = rep.exact;
        d["first_failure"] = rep.first_failure ? py::cast(*rep.first_failure) : py::none();
        return d;
      },
      py::arg("x"), py::arg("closed"), py::arg("ring") = "Q");

  m.def("is_augmentable", &is_augmentable);
  m.def(
      "check_main_theorem",
      [](const LefschetzComplex& x, const std::string& r) { return report_dict(check_main_theorem(x, ring_arg(r))); },
      py::arg("x"), py::arg("ring") = "Z");
  m.def(
      "check_corollary",
      [](const LefschetzComplex& x, const std::string& r, std::size_t cap) {
        const CorollaryReport c = check_corollary_all_closed(x, ring_arg(r), cap);
        py::dict d;
        d["augmentable"] = c.augmentable;
        d["closed_sets"] = c.closed_sets;
        d["local_condition_holds"] = c.local_condition_holds;
        d["all_closed_isomorphic"] = c.all_closed_isomorphic;
        d["first_failure"] = c.first_failure ? py::cast(*c.first_failure) : py::none();
        d["directions_agree"] = c.directions_agree;
        d["consistent_with_corollary"] = c.consistent_with_corollary;
        return d;
      },
      py::arg("x"), py::arg("ring") = "Z", py::arg("cap") = kDefaultClosedSetCap);
  m.def(
      "search_converse",
      [](std::uint64_t seed, std::size_t budget, std::size_t jobs, const std::vector<std::string>& modes,
         bool corollary_filter, const std::string& r) {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.budget = budget;
        cfg.jobs = jobs;
        cfg.ring = ring_arg(r);
        cfg.modes.clear();
        for (const auto& mode : modes) cfg.modes.push_back(parse_mode(mode));
        cfg.corollary_filter = corollary_filter;
        SearchSummary s;
        {
          py::gil_scoped_release release;
          s = search_converse(cfg);
        }
        py::list candidates;
        for (const auto& c : s.candidates) {
          py::dict cd;
          cd["index"] = c.index;
          cd["seed"] = c.config.seed;
          cd["mode"] = mode_name(c.config.mode);
          cd["lef"] = c.serialized;
          cd["failing_cells"] = c.report.failing_cells();
          candidates.append(cd);
        }
        py::dict d;
        d["evaluated"] = s.evaluated;
        d["skipped"] = s.skipped;
        d["hypothesis_holds"] = s.hypothesis_holds;
        d["theorem_violations"] = s.theorem_violations;
        d["candidates"] = candidates;
        return d;
      },
      py::arg("seed") = 42, py::arg("budget") = 10000, py::arg("jobs") = 1,
      py::arg("modes") = std::vector<std::string>{"basis-change"}, py::arg("corollary_filter") = false,
      py::arg("ring") = "Z");
  m.def("basis_change", [](const LefschetzComplex& x, const std::string& target, const std::string& source,
                           py::object k) { return basis_change(x, target, source, to_integer(k)); });
  m.def(
      "smith_normal_form",
      [](const std::vector<std::vector<py::object>>& rows) {
        std::vector<std::vector<Integer>> m;
        for (const auto& row : rows) {
          std::vector<Integer> r;
          for (const auto& v : row) r.push_back(to_integer(v));
          m.push_back(std::move(r));
        }
        py::list out;
        for (const auto& d : smith_normal_form(ExactMatrix::from_rows(m)).divisors) out.append(to_py(d));
        return out;
      },
      "Invariant factors d_1 | d_2 | ... of an integer matrix.");
}
