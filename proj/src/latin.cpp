#include "gds/latin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gds/errors.hpp"

namespace gds {

namespace {

std::string cell_text(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

LatinSquare::LatinSquare(int n, std::vector<int> entries) : n_(n), grid_(std::move(entries)) {
    if (n < 1) throw InputError("Latin square order must be positive");
    if (grid_.size() != idx(n) * idx(n))
        throw InputError("Latin square of order " + std::to_string(n) + " needs " + std::to_string(n * n) +
                         " entries, got " + std::to_string(grid_.size()));
    std::vector<char> row_seen(idx(n) * idx(n + 1), 0), col_seen(idx(n) * idx(n + 1), 0);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            int v = at(r, c);
            if (v < 1 || v > n)
                throw InputError("entry " + std::to_string(v) + " at " + cell_text(r, c) + " is outside 1.." +
                                 std::to_string(n));
            auto& rs = row_seen[idx(r - 1) * idx(n + 1) + idx(v)];
            auto& cs = col_seen[idx(c - 1) * idx(n + 1) + idx(v)];
            if (rs) throw InputError("entry " + std::to_string(v) + " repeats in row " + std::to_string(r));
            if (cs) throw InputError("entry " + std::to_string(v) + " repeats in column " + std::to_string(c));
            rs = cs = 1;
        }
}

LatinSquare LatinSquare::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> entries;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw InputError("Latin square rows must have length n");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return LatinSquare(n, std::move(entries));
}

std::vector<std::vector<int>> LatinSquare::rows() const {
    std::vector<std::vector<int>> out(idx(n_));
    for (int r = 1; r <= n_; ++r)
        out[idx(r - 1)].assign(grid_.begin() + (r - 1) * n_, grid_.begin() + r * n_);
    return out;
}

PartialLatinSquare::PartialLatinSquare(int n) : n_(n) {
    if (n < 1) throw InputError("partial Latin square order must be positive");
}

void PartialLatinSquare::set(int row, int col, int value) {
    if (row < 1 || row > n_ || col < 1 || col > n_)
        throw InputError("cell " + cell_text(row, col) + " is outside an order-" + std::to_string(n_) + " square");
    if (value < 1 || value > n_)
        throw InputError("entry " + std::to_string(value) + " at " + cell_text(row, col) + " is outside 1.." +
                         std::to_string(n_));
    if (cells_.contains({row, col})) throw InputError("cell " + cell_text(row, col) + " is filled twice");
    for (const auto& [cell, v] : cells_)
        if (v == value && (cell.row == row || cell.col == col))
            throw InputError("entry " + std::to_string(value) + " at " + cell_text(row, col) + " clashes with " +
                             cell_text(cell.row, cell.col));
    cells_.emplace(Cell{row, col}, value);
}

std::optional<int> PartialLatinSquare::get(Cell c) const {
    if (auto it = cells_.find(c); it != cells_.end()) return it->second;
    return std::nullopt;
}

std::vector<LatinCell> PartialLatinSquare::cells() const {
    std::vector<LatinCell> out;
    out.reserve(cells_.size());
    for (const auto& [cell, v] : cells_) out.push_back({cell.row, cell.col, v});
    return out;
}

std::array<Cell, 3> LatinDescent::cells() const {
    std::array<Cell, 3> out{y_cell.cell(), row_mate.cell(), col_mate.cell()};
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatinDescent> latin_descents(const LatinSquare& l) {
    const int n = l.order();
    // col_in_row[r][x]: column holding x in row r; row_in_col[c][x] likewise.
    std::vector<int> col_in_row(idx(n + 1) * idx(n + 1)), row_in_col(idx(n + 1) * idx(n + 1));
    auto slot = [n](int a, int x) { return idx(a) * idx(n + 1) + idx(x); };
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            col_in_row[slot(r, l.at(r, c))] = c;
            row_in_col[slot(c, l.at(r, c))] = r;
        }

    std::vector<LatinDescent> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int y = l.at(i, j);
            for (int x = 1; x < y; ++x) {
                int k = col_in_row[slot(i, x)];
                int r = row_in_col[slot(j, x)];
                if (k > j && r > i) out.push_back({{i, j, y}, {i, k, x}, {r, j, x}});
            }
        }
    return out;
}

SetFamily latin_descent_family(const LatinSquare& l) {
    std::vector<int> universe(idx(l.order()) * idx(l.order()));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<std::vector<int>> sets;
    for (const auto& d : latin_descents(l)) {
        auto cells = d.cells();
        sets.push_back({l.id(cells[0]), l.id(cells[1]), l.id(cells[2])});
    }
    return SetFamily{std::move(universe), std::move(sets)};
}

std::pair<OrderedGraph, ProperColoring> to_ordered_instance(const LatinSquare& l) {
    const int n = l.order();
    std::vector<Edge> edges;
    edges.reserve(idx(n) * idx(n) * idx(n - 1));
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            int v = l.id({r, c});
            for (int c2 = c + 1; c2 <= n; ++c2) edges.emplace_back(v, l.id({r, c2}));
            for (int r2 = r + 1; r2 <= n; ++r2) edges.emplace_back(v, l.id({r2, c}));
        }
    return {OrderedGraph::identity(n * n, std::move(edges)), ProperColoring(l.entries())};
}

int CoverGraph::component(const LatinSquare& l, int vertex) const {
    Cell c = cell_of(vertex);
    switch (kind) {
        case CoverKind::Rows: return c.row;
        case CoverKind::Cols: return c.col;
        case CoverKind::Entries: return l.at(c);
    }
    return 0;
}

CoverGraph build_cover_graph(const LatinSquare& l, CoverKind kind) {
    CoverGraph out;
    out.kind = kind;
    out.n = l.order();
    out.graph.n = l.order() * l.order();
    for (const auto& d : latin_descents(l)) {
        Edge e;
        switch (kind) {
            case CoverKind::Rows: e = {l.id(d.y_cell.cell()), l.id(d.row_mate.cell())}; break;
            case CoverKind::Cols: e = {l.id(d.y_cell.cell()), l.id(d.col_mate.cell())}; break;
            case CoverKind::Entries: e = {l.id(d.row_mate.cell()), l.id(d.col_mate.cell())}; break;
        }
        if (e.first > e.second) std::swap(e.first, e.second);
        out.graph.edges.push_back(e);
    }
    std::sort(out.graph.edges.begin(), out.graph.edges.end());
    out.graph.edges.erase(std::unique(out.graph.edges.begin(), out.graph.edges.end()), out.graph.edges.end());
    return out;
}

std::vector<int> cover_of(const CoverGraph& g, bool exact) {
    if (g.graph.edges.empty()) return {};
    if (!exact) {
        std::vector<char> taken(idx(g.graph.n) + 1, 0);
        std::vector<int> out;
        for (auto [u, v] : g.graph.edges) {
            if (taken[idx(u)] || taken[idx(v)]) continue;
            taken[idx(u)] = taken[idx(v)] = 1;
            out.push_back(u);
            out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Solve each connected piece separately; pieces have at most n vertices.
    std::vector<int> parent(idx(g.graph.n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[idx(x)] == x ? x : parent[idx(x)] = find(parent[idx(x)]);
    };
    for (auto [u, v] : g.graph.edges) parent[idx(find(u))] = find(v);
    std::map<int, std::vector<Edge>> parts;
    for (const auto& e : g.graph.edges) parts[find(e.first)].push_back(e);

    std::vector<int> out;
    for (const auto& [key, edges] : parts) {
        std::vector<int> local;
        for (auto [u, v] : edges) local.push_back(u), local.push_back(v);
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        auto rank = [&](int v) { return static_cast<int>(std::lower_bound(local.begin(), local.end(), v) - local.begin()) + 1; };
        SimpleGraph sub{static_cast<int>(local.size()), {}};
        for (auto [u, v] : edges) sub.edges.emplace_back(rank(u), rank(v));
        for (int v : min_vertex_cover(sub).elements) out.push_back(local[idx(v - 1)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool hits_all_descents(const LatinSquare& l, const PartialLatinSquare& d) {
    auto descents = latin_descents(l);
    return std::all_of(descents.begin(), descents.end(), [&](const LatinDescent& desc) {
        auto cells = desc.cells();
        return std::any_of(cells.begin(), cells.end(), [&](Cell c) { return d.get(c).has_value(); });
    });
}

}  // namespace

PartialLatinSquare gds_from_cover(const LatinSquare& l, CoverKind kind, std::span<const int> cover) {
    auto g = build_cover_graph(l, kind);
    for (int v : cover)
        if (v < 1 || v > g.graph.n)
            throw InputError("gds_from_cover: vertex " + std::to_string(v) + " is not a cell of the square");
    if (!is_vertex_cover(g.graph, cover)) throw InputError("gds_from_cover: not a vertex cover of the cover graph");

    PartialLatinSquare out(l.order());
    std::vector<int> sorted(cover.begin(), cover.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        Cell c = l.cell_of(v);
        out.set(c.row, c.col, l.at(c));
    }
    if (!hits_all_descents(l, out)) throw InternalError("gds_from_cover: cover misses a descent");
    return out;
}

CompletionResult greedy_complete(const PartialLatinSquare& p) {
    const int n = p.order();
    std::vector<int> grid(idx(n) * idx(n), 0);
    // used_row[r][v] / used_col[c][v]: value v present in row r / column c.
    std::vector<char> used_row(idx(n) * idx(n + 2), 0), used_col(idx(n) * idx(n + 2), 0);
    auto mark = [&](int r, int c, int v) {
        grid[idx(r - 1) * idx(n) + idx(c - 1)] = v;
        used_row[idx(r - 1) * idx(n + 2) + idx(v)] = 1;
        used_col[idx(c - 1) * idx(n + 2) + idx(v)] = 1;
    };
    for (const auto& c : p.cells()) mark(c.row, c.col, c.value);

    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            if (grid[idx(r - 1) * idx(n) + idx(c - 1)] != 0) continue;
            int v = 1;
            while (v <= n && (used_row[idx(r - 1) * idx(n + 2) + idx(v)] || used_col[idx(c - 1) * idx(n + 2) + idx(v)])) ++v;
            if (v > n) return {std::nullopt, Cell{r, c}};
            mark(r, c, v);
        }
    return {LatinSquare(n, std::move(grid)), std::nullopt};
}

bool verify_latin_gds(const LatinSquare& l, const PartialLatinSquare& d) {
    if (d.order() != l.order())
        throw InputError("defining set has order " + std::to_string(d.order()) + ", square has order " +
                         std::to_string(l.order()));
    for (const auto& c : d.cells())
        if (l.at(c.row, c.col) != c.value)
            throw InputError("defining set puts " + std::to_string(c.value) + " at " + cell_text(c.row, c.col) +
                             " but the square holds " + std::to_string(l.at(c.row, c.col)));

    auto completion = greedy_complete(d);
    bool by_greedy = completion.ok() && *completion.square == l;
    bool by_descents = hits_all_descents(l, d);
    if (by_greedy != by_descents)
        throw InternalError("verify_latin_gds: greedy completion and descent transversal disagree");
    return by_greedy;
}

LatinGdsResult min_latin_gds(const LatinSquare& l, SearchMode mode) {
    if (mode == SearchMode::Exact && l.order() > kMaxExactLatinGds)
        throw CapabilityError("min_latin_gds: order " + std::to_string(l.order()) +
                              " exceeds the exact-search guard of " + std::to_string(kMaxExactLatinGds));
    auto family = latin_descent_family(l);
    auto cover = mode == SearchMode::Exact ? min_hitting_set(family) : greedy_hitting_set(family);

    LatinGdsResult out;
    out.size = cover.size();
    out.optimal = mode == SearchMode::Exact;
    out.witness = PartialLatinSquare(l.order());
    for (int v : cover.elements) {
        Cell c = l.cell_of(v);
        out.witness.set(c.row, c.col, l.at(c));
    }
    return out;
}

CompletionResult greedy_square(int n) { return greedy_complete(PartialLatinSquare(n)); }

std::uint64_t for_each_latin_square(int n, const std::function<void(const LatinSquare&)>& visit) {
    if (n < 1) throw InputError("Latin square order must be positive");
    const std::size_t cells = idx(n) * idx(n);
    std::vector<int> grid(cells, 0);
    std::vector<char> in_row(idx(n) * idx(n + 1), 0), in_col(idx(n) * idx(n + 1), 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t pos) {
        if (pos == cells) {
            ++count;
            visit(LatinSquare(n, grid));
            return;
        }
        std::size_t r = pos / idx(n), c = pos % idx(n);
        for (int v = 1; v <= n; ++v) {
            auto& rs = in_row[r * idx(n + 1) + idx(v)];
            auto& cs = in_col[c * idx(n + 1) + idx(v)];
            if (rs || cs) continue;
            rs = cs = 1;
            grid[pos] = v;
            fill(pos + 1);
            rs = cs = 0;
        }
        grid[pos] = 0;
    };
    fill(0);
    return count;
}

int g_number(int n) {
    if (n < 1) throw InputError("g_number: order must be positive");
    if (n > kMaxGNumberOrder)
        throw CapabilityError("g_number: order " + std::to_string(n) + " exceeds the exhaustive guard of " +
                              std::to_string(kMaxGNumberOrder));
    std::size_t best = idx(n) * idx(n);
    for_each_latin_square(n, [&](const LatinSquare& l) { best = std::min(best, min_latin_gds(l).size); });
    return static_cast<int>(best);
}

double gds_size_bound(int n) {
    double nd = n;
    return nd * nd - nd * std::log(4.0 * nd) / 4.0;
}

BoundReport bound_report(const LatinSquare& l, bool exact) {
    if (exact && l.order() > kMaxExactBoundOrder)
        throw CapabilityError("bound_report: order " + std::to_string(l.order()) +
                              " exceeds the exact-cover guard of " + std::to_string(kMaxExactBoundOrder));
    auto cover = cover_of(build_cover_graph(l, CoverKind::Entries), exact);
    BoundReport out;
    out.n = l.order();
    out.cover_size = cover.size();
    out.bound = gds_size_bound(l.order());
    out.holds = static_cast<double>(out.cover_size) <= out.bound;
    out.exact = exact;
    for (int v : cover) {
        Cell c = l.cell_of(v);
        out.cells.push_back({c.row, c.col, l.at(c)});
    }
    return out;
}

LatinSquare random_latin(int n, std::uint64_t seed) {
    if (n < 1) throw InputError("random_latin: order must be positive");
    std::mt19937_64 rng(seed);
    std::vector<int> grid(idx(n) * idx(n), 0);
    std::vector<char> in_col(idx(n) * idx(n + 1), 0);

    std::vector<int> values(idx(n));
    std::iota(values.begin(), values.end(), 1);
    for (int r = 0; r < n; ++r) {
        // Candidate orders per column, drawn once per row.
        std::vector<std::vector<int>> options(idx(n));
        for (int c = 0; c < n; ++c) {
            for (int v : values)
                if (!in_col[idx(c) * idx(n + 1) + idx(v)]) options[idx(c)].push_back(v);
            stable_shuffle(options[idx(c)], rng);
        }
        std::vector<char> in_row(idx(n + 1), 0);
        std::vector<int> row(idx(n), 0);
        // Any Latin rectangle extends by a row, so this search always succeeds.
        std::function<bool(int)> place = [&](int c) {
            if (c == n) return true;
            for (int v : options[idx(c)]) {
                if (in_row[idx(v)]) continue;
                in_row[idx(v)] = 1;
                row[idx(c)] = v;
                if (place(c + 1)) return true;
                in_row[idx(v)] = 0;
            }
            return false;
        };
        if (!place(0)) throw InternalError("random_latin: row extension failed");
        for (int c = 0; c < n; ++c) {
            grid[idx(r) * idx(n) + idx(c)] = row[idx(c)];
            in_col[idx(c) * idx(n + 1) + idx(row[idx(c)])] = 1;
        }
    }
    return LatinSquare(n, std::move(grid));
}

}  // namespace gds
