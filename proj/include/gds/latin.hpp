#pragma once

// Latin squares as first-fit colorings of the rook's graph K_n □ K_n under
// row-major cell order. Rows, columns and entries are 1-based.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gds/core.hpp"
#include "gds/exact.hpp"

namespace gds {

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A cell together with its entry, written (row, col; value).
struct LatinCell {
    int row = 0;
    int col = 0;
    int value = 0;
    Cell cell() const { return {row, col}; }
    friend auto operator<=>(const LatinCell&, const LatinCell&) = default;
};

class LatinSquare {
public:
    LatinSquare() = default;
    /// Row-major entries; throws InputError unless every row and column is
    /// a permutation of 1..n.
    LatinSquare(int n, std::vector<int> entries);
    static LatinSquare from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }
    int at(int row, int col) const { return grid_[index(row, col)]; }
    int at(Cell c) const { return at(c.row, c.col); }
    const std::vector<int>& entries() const { return grid_; }
    std::vector<std::vector<int>> rows() const;

    /// Rook's-graph vertex id of a cell: (row - 1) * n + col.
    int id(Cell c) const { return (c.row - 1) * n_ + c.col; }
    Cell cell_of(int id) const { return {(id - 1) / n_ + 1, (id - 1) % n_ + 1}; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>((row - 1) * n_ + (col - 1));
    }

    int n_ = 0;
    std::vector<int> grid_;
};

class PartialLatinSquare {
public:
    PartialLatinSquare() = default;
    explicit PartialLatinSquare(int n);

    int order() const { return n_; }
    /// Throws InputError on out-of-range values, a refilled cell, or an
    /// entry repeated in its row or column.
    void set(int row, int col, int value);
    void set(const LatinCell& c) { set(c.row, c.col, c.value); }
    std::optional<int> get(Cell c) const;
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    /// Filled cells in row-major order.
    std::vector<LatinCell> cells() const;

    friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

private:
    int n_ = 0;
    std::map<Cell, int> cells_;
};

/// Cells (i, j; y), (i, k; x), (r, j; x) with k > j, r > i and x < y: the
/// y-cell with the x-cells of its row and column, both later in row-major
/// order.
struct LatinDescent {
    LatinCell y_cell;
    LatinCell row_mate;
    LatinCell col_mate;

    /// The three cells in row-major order.
    std::array<Cell, 3> cells() const;
    friend auto operator<=>(const LatinDescent&, const LatinDescent&) = default;
};

/// Ordered by y-cell (row-major), then x.
std::vector<LatinDescent> latin_descents(const LatinSquare& l);

/// Descents as sets of cell ids over the universe 1..n².
SetFamily latin_descent_family(const LatinSquare& l);

/// Rook's graph on cell ids in row-major order, colored by the entries.
std::pair<OrderedGraph, ProperColoring> to_ordered_instance(const LatinSquare& l);

enum class CoverKind { Rows, Cols, Entries };

/// One of R(L), C(L), E(L). Vertices are cell ids 1..n². Every descent
/// contributes one edge: y-cell with row mate (Rows), y-cell with column
/// mate (Cols), or row mate with column mate (Entries). Components are the
/// rows, the columns, or the entry classes respectively.
struct CoverGraph {
    CoverKind kind = CoverKind::Entries;
    int n = 0;
    SimpleGraph graph;

    Cell cell_of(int vertex) const { return {(vertex - 1) / n + 1, (vertex - 1) % n + 1}; }
    /// 1-based component (row, column, or entry) of a vertex.
    int component(const LatinSquare& l, int vertex) const;
};

CoverGraph build_cover_graph(const LatinSquare& l, CoverKind kind);

/// A vertex cover of the cover graph, solved per component: exact when
/// `exact`, else both endpoints of a greedy maximal matching.
std::vector<int> cover_of(const CoverGraph& g, bool exact);

/// Cells of a vertex cover of the chosen cover graph, with their entries.
PartialLatinSquare gds_from_cover(const LatinSquare& l, CoverKind kind, std::span<const int> cover);

struct CompletionResult {
    std::optional<LatinSquare> square;
    std::optional<Cell> failure;
    bool ok() const { return square.has_value(); }
};

/// First-fit completion in row-major order: every empty cell takes the
/// smallest value missing from its row and column (all filled cells count,
/// including pre-filled ones further on). Fails at the first cell that
/// would need a value above n.
CompletionResult greedy_complete(const PartialLatinSquare& p);

/// Whether D completes to L under first-fit. Cross-checked against the
/// descent-transversal test; a disagreement raises InternalError.
bool verify_latin_gds(const LatinSquare& l, const PartialLatinSquare& d);

struct LatinGdsResult {
    std::size_t size = 0;
    PartialLatinSquare witness;
    bool optimal = true;
};

inline constexpr int kMaxExactLatinGds = 6;

enum class SearchMode { Exact, Heuristic };

/// Minimum GDS of L via exact hitting set over descents (n <= 6), or a
/// greedy transversal flagged non-optimal.
LatinGdsResult min_latin_gds(const LatinSquare& l, SearchMode mode = SearchMode::Exact);

/// First-fit completion of the empty order-n square.
CompletionResult greedy_square(int n);

/// Visits every Latin square of order n in row-major lexicographic order.
/// Returns the number visited.
std::uint64_t for_each_latin_square(int n, const std::function<void(const LatinSquare&)>& visit);

inline constexpr int kMaxGNumberOrder = 4;

/// Minimum GDS size over all Latin squares of order n (n <= 4).
int g_number(int n);

struct BoundReport {
    int n = 0;
    std::size_t cover_size = 0;
    double bound = 0.0;
    bool holds = false;
    bool exact = true;
    std::vector<LatinCell> cells;
};

inline constexpr int kMaxExactBoundOrder = 8;

/// n² − n·ln(4n)/4.
double gds_size_bound(int n);

/// Vertex cover of E(L) against the size bound.
BoundReport bound_report(const LatinSquare& l, bool exact);

/// Random Latin square by row-by-row randomized backtracking. Deterministic
/// in (n, seed); not uniformly distributed.
LatinSquare random_latin(int n, std::uint64_t seed);

/// Fisher–Yates shuffle driven only by raw mt19937_64 output, so results
/// do not depend on the standard library's distributions.
template <typename T>
void stable_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace gds
