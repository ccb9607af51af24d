// Python bindings. Colorings are lists indexed from vertex 1, defining sets
// are dicts {vertex: color}, partial squares are lists of (row, col, value).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <sstream>

#include "gds/core.hpp"
#include "gds/errors.hpp"
#include "gds/exact.hpp"
#include "gds/forest.hpp"
#include "gds/io.hpp"
#include "gds/latin.hpp"
#include "gds/reductions.hpp"
#include "gds/sharing.hpp"

namespace py = pybind11;
using namespace gds;

namespace {

using CellTuple = std::tuple<int, int, int>;

std::vector<CellTuple> to_tuples(const std::vector<LatinCell>& cells) {
    std::vector<CellTuple> out;
    for (const auto& c : cells) out.emplace_back(c.row, c.col, c.value);
    return out;
}

std::vector<LatinCell> to_cells(const std::vector<CellTuple>& tuples) {
    std::vector<LatinCell> out;
    for (auto [r, c, v] : tuples) out.push_back({r, c, v});
    return out;
}

PartialLatinSquare to_partial(int n, const std::vector<CellTuple>& tuples) {
    PartialLatinSquare p(n);
    for (const auto& c : to_cells(tuples)) p.set(c);
    return p;
}

py::dict gdn_dict(const GdnResult& r) {
    py::dict d;
    d["size"] = r.size;
    d["witness"] = r.witness;
    d["coloring"] = r.coloring;
    return d;
}

py::dict completion_dict(const CompletionResult& r) {
    py::dict d;
    d["ok"] = r.ok();
    d["square"] = r.square ? py::cast(*r.square) : py::none();
    d["failure"] = r.failure ? py::cast(std::pair{r.failure->row, r.failure->col}) : py::none();
    return d;
}

AccessStructure to_access(const std::map<std::string, std::vector<std::string>>& sets) {
    AccessStructure a;
    std::set<std::string> people;
    for (const auto& [id, members] : sets) {
        a.sets.push_back({id, members});
        people.insert(members.begin(), members.end());
    }
    a.participants.assign(people.begin(), people.end());
    return a;
}

using Pieces = std::map<std::pair<std::string, std::string>, std::vector<CellTuple>>;

Pieces to_py(const ShareBundle& b) {
    Pieces out;
    for (const auto& [key, cells] : b.pieces) out[key] = to_tuples(cells);
    return out;
}

ShareBundle from_py(int n, const Pieces& pieces) {
    ShareBundle b;
    b.n = n;
    for (const auto& [key, cells] : pieces) b.pieces[key] = to_cells(cells);
    return b;
}

}  // namespace

PYBIND11_MODULE(_gds, m) {
    m.doc() = "Greedy defining sets of ordered graphs and Latin squares";

    auto base = py::register_exception<Error>(m, "GdsError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());

    py::class_<OrderedGraph>(m, "OrderedGraph")
        .def(py::init([](int n, std::vector<Edge> edges, std::optional<std::vector<Vertex>> order) {
                 if (!order) return OrderedGraph::identity(n, std::move(edges));
                 return OrderedGraph(n, std::move(edges), std::move(*order));
             }),
             py::arg("n"), py::arg("edges"), py::arg("order") = py::none())
        .def_property_readonly("n", &OrderedGraph::size)
        .def_property_readonly("edges", &OrderedGraph::edges)
        .def_property_readonly("order", &OrderedGraph::order)
        .def("neighbors", &OrderedGraph::neighbors)
        .def("__str__", [](const OrderedGraph& g) { return io::format_graph(g); })
        .def_static("parse", [](const std::string& text) {
            std::istringstream in(text);
            return io::parse_graph(in);
        });

    m.def("greedy_color", [](const OrderedGraph& g, const PartialColoring& pre) {
        auto out = greedy_color(g, pre);
        return py::make_tuple(out.coloring, out.max_color, out.proper);
    }, py::arg("graph"), py::arg("precolored") = PartialColoring{},
       "First-fit coloring; returns (colors, max_color, proper).");
    m.def("chromatic_number", &chromatic_number);
    m.def("find_descents", [](const OrderedGraph& g, const std::vector<Color>& c) {
        std::vector<py::dict> out;
        for (const auto& d : find_descents(g, ProperColoring(c))) {
            py::dict item;
            item["head"] = d.head;
            item["tail"] = d.tail;
            item["low"] = d.low;
            item["high"] = d.high;
            out.push_back(item);
        }
        return out;
    });
    m.def("is_gds", [](const OrderedGraph& g, const PartialColoring& s, std::optional<std::vector<Color>> target) {
        if (target) return is_gds(g, s, ProperColoring(*target));
        return is_gds(g, s);
    }, py::arg("graph"), py::arg("defining"), py::arg("target") = py::none());
    m.def("gdn", [](const OrderedGraph& g) { return gdn_dict(gdn(g)); });
    m.def("gdn_fixed", [](const OrderedGraph& g, const std::vector<Color>& c) {
        return gdn_dict(gdn_fixed(g, ProperColoring(c)));
    });
    m.def("forest_gdn", [](const OrderedGraph& g) { return gdn_dict(forest_gdn(g)); });
    m.def("brute_force_gdn_oracle", &brute_force_gdn_oracle);

    m.def("min_hitting_set", [](std::vector<std::vector<int>> sets) {
        return min_hitting_set(SetFamily::from_sets(std::move(sets))).elements;
    });
    m.def("min_vertex_cover", [](int n, std::vector<Edge> edges) {
        return min_vertex_cover(normalized(SimpleGraph{n, std::move(edges)})).elements;
    });

    m.def("colored_vc_instance", [](int n, std::vector<Edge> edges) {
        auto inst = colored_vc_instance(SimpleGraph{n, std::move(edges)});
        return py::make_tuple(inst.graph, inst.coloring.colors());
    }, "Returns (graph, coloring) whose fixed-coloring GDN is the vertex cover number.");
    m.def("bipartite_vc_instance", [](int n, std::vector<Edge> edges) {
        return bipartite_vc_instance(SimpleGraph{n, std::move(edges)}).graph;
    }, "Returns a bipartite ordered graph whose GDN is the vertex cover number.");

    py::class_<LatinSquare>(m, "LatinSquare")
        .def(py::init(&LatinSquare::from_rows), py::arg("rows"))
        .def_property_readonly("n", &LatinSquare::order)
        .def("rows", &LatinSquare::rows)
        .def("at", py::overload_cast<int, int>(&LatinSquare::at, py::const_))
        .def("__eq__", [](const LatinSquare& a, const LatinSquare& b) { return a == b; })
        .def("__str__", [](const LatinSquare& l) { return io::format_latin_square(l); });

    m.def("latin_descents", [](const LatinSquare& l) {
        std::vector<std::vector<CellTuple>> out;
        for (const auto& d : latin_descents(l))
            out.push_back(to_tuples({d.y_cell, d.row_mate, d.col_mate}));
        return out;
    });
    m.def("min_latin_gds", [](const LatinSquare& l, bool exact) {
        auto r = min_latin_gds(l, exact ? SearchMode::Exact : SearchMode::Heuristic);
        return py::make_tuple(to_tuples(r.witness.cells()), r.optimal);
    }, py::arg("square"), py::arg("exact") = true, "Returns (cells, optimal).");
    m.def("cover_gds", [](const LatinSquare& l, const std::string& kind, bool exact) {
        CoverKind k = kind == "rows" ? CoverKind::Rows : kind == "cols" ? CoverKind::Cols : CoverKind::Entries;
        if (kind != "rows" && kind != "cols" && kind != "entries")
            throw InputError("kind must be 'rows', 'cols' or 'entries'");
        return to_tuples(gds_from_cover(l, k, cover_of(build_cover_graph(l, k), exact)).cells());
    }, py::arg("square"), py::arg("kind"), py::arg("exact") = true);
    m.def("verify_latin_gds", [](const LatinSquare& l, const std::vector<CellTuple>& cells) {
        return verify_latin_gds(l, to_partial(l.order(), cells));
    });
    m.def("greedy_complete", [](int n, const std::vector<CellTuple>& cells) {
        return completion_dict(greedy_complete(to_partial(n, cells)));
    });
    m.def("greedy_square", [](int n) { return completion_dict(greedy_square(n)); });
    m.def("g_number", &g_number);
    m.def("gds_size_bound", &gds_size_bound);
    m.def("bound_report", [](const LatinSquare& l, bool exact) {
        auto r = bound_report(l, exact);
        py::dict d;
        d["cover_size"] = r.cover_size;
        d["bound"] = r.bound;
        d["holds"] = r.holds;
        d["exact"] = r.exact;
        d["cells"] = to_tuples(r.cells);
        return d;
    }, py::arg("square"), py::arg("exact") = true);
    m.def("random_latin", &random_latin, py::arg("n"), py::arg("seed") = 0);

    m.def("deal", [](const LatinSquare& key, const std::map<std::string, std::vector<std::string>>& sets,
                     std::uint64_t seed) { return to_py(deal(key, to_access(sets), seed)); },
          py::arg("key"), py::arg("sets"), py::arg("seed") = 0,
          "Returns {(participant, set_id): cells}.");
    m.def("reconstruct", [](const std::vector<std::vector<CellTuple>>& pieces, int n) {
        std::vector<std::vector<LatinCell>> converted;
        for (const auto& p : pieces) converted.push_back(to_cells(p));
        return completion_dict(reconstruct(converted, n));
    });
    m.def("audit", [](const LatinSquare& key, const std::map<std::string, std::vector<std::string>>& sets,
                      const Pieces& pieces) {
        auto report = audit(key, to_access(sets), from_py(key.order(), pieces));
        return py::make_tuple(report.passed(), io::format_audit_report(report));
    }, "Returns (passed, report text).");
}
