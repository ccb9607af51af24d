#include "gds/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <tuple>
#include <sstream>

#include "gds/errors.hpp"

namespace gds::io {

namespace {

// Remaining whitespace-separated integers of a stream, comments stripped.
class Tokens {
public:
    explicit Tokens(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream words(line);
            std::string w;
            std::vector<std::string> row;
            while (words >> w) row.push_back(w);
            if (!row.empty()) lines_.push_back(std::move(row));
        }
    }

    bool done() const { return line_ >= lines_.size(); }

    // Next non-empty line as integers.
    std::vector<long long> line(const char* what) {
        if (done()) throw InputError(std::string("unexpected end of input, expected ") + what);
        std::vector<long long> out;
        for (const auto& w : lines_[line_]) out.push_back(parse(w, what));
        ++line_;
        return out;
    }

    // Next `count` integers, regardless of line breaks.
    std::vector<long long> flat(std::size_t count, const char* what) {
        std::vector<long long> out;
        while (out.size() < count) {
            if (done()) throw InputError(std::string("unexpected end of input, expected ") + what);
            auto& row = lines_[line_];
            while (word_ < row.size() && out.size() < count) out.push_back(parse(row[word_++], what));
            if (word_ == row.size()) ++line_, word_ = 0;
        }
        if (word_ != 0) throw InputError(std::string("trailing values after ") + what);
        return out;
    }

private:
    static long long parse(const std::string& w, const char* what) {
        long long v = 0;
        auto [end, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec != std::errc{} || end != w.data() + w.size())
            throw InputError("'" + w + "' is not an integer (" + what + ")");
        return v;
    }

    std::vector<std::vector<std::string>> lines_;
    std::size_t line_ = 0;
    std::size_t word_ = 0;
};

int to_int(long long v) {
    if (v < -2'000'000'000LL || v > 2'000'000'000LL) throw InputError("integer out of range");
    return static_cast<int>(v);
}

std::vector<long long> exactly(Tokens& t, std::size_t count, const char* what) {
    auto row = t.line(what);
    if (row.size() != count)
        throw InputError(std::string("expected ") + std::to_string(count) + " values for " + what + ", got " +
                         std::to_string(row.size()));
    return row;
}

}  // namespace

OrderedGraph parse_graph(std::istream& in) {
    Tokens t(in);
    auto header = exactly(t, 2, "graph header 'n m'");
    int n = to_int(header[0]);
    long long m = header[1];
    if (n < 0 || m < 0) throw InputError("graph header has negative counts");
    std::vector<Vertex> order;
    for (long long v : t.flat(static_cast<std::size_t>(n), "processing order")) order.push_back(to_int(v));
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        auto e = exactly(t, 2, "edge 'u v'");
        edges.emplace_back(to_int(e[0]), to_int(e[1]));
    }
    if (!t.done()) throw InputError("graph has more edge lines than announced");
    return OrderedGraph(n, std::move(edges), std::move(order));
}

std::string format_graph(const OrderedGraph& g) {
    std::ostringstream out;
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < g.order().size(); ++i) out << (i ? " " : "") << g.order()[i];
    out << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

ProperColoring parse_coloring(std::istream& in) {
    Tokens t(in);
    std::vector<Color> colors;
    while (!t.done())
        for (long long c : t.line("colors")) colors.push_back(to_int(c));
    return ProperColoring(std::move(colors));
}

std::string format_coloring(std::span<const Color> colors) {
    std::ostringstream out;
    for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? " " : "") << colors[i];
    out << '\n';
    return out.str();
}

PartialColoring parse_defining_set(std::istream& in) {
    Tokens t(in);
    PartialColoring s;
    while (!t.done()) {
        auto row = exactly(t, 2, "defining-set line 'v c'");
        if (!s.emplace(to_int(row[0]), to_int(row[1])).second)
            throw InputError("vertex " + std::to_string(row[0]) + " is listed twice");
    }
    return s;
}

std::string format_defining_set(const PartialColoring& s) {
    std::ostringstream out;
    for (const auto& [v, c] : s) out << v << ' ' << c << '\n';
    return out.str();
}

std::string format_gdn(const GdnResult& r) {
    return std::to_string(r.size) + "\n" + format_defining_set(r.witness);
}

std::string format_descents(std::span<const Descent> descents) {
    std::ostringstream out;
    for (const auto& d : descents) {
        out << d.head << ' ' << d.low << ' ' << d.high;
        for (Vertex v : d.tail) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

LatinSquare parse_latin_square(std::istream& in) {
    Tokens t(in);
    int n = to_int(exactly(t, 1, "square order 'n'")[0]);
    if (n < 1) throw InputError("square order must be positive");
    std::vector<int> entries;
    for (int r = 0; r < n; ++r)
        for (long long v : exactly(t, static_cast<std::size_t>(n), "square row")) entries.push_back(to_int(v));
    if (!t.done()) throw InputError("square has more than n rows");
    return LatinSquare(n, std::move(entries));
}

std::string format_latin_square(const LatinSquare& l) {
    std::ostringstream out;
    out << l.order() << '\n';
    for (const auto& row : l.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
        out << '\n';
    }
    return out.str();
}

PartialLatinSquare parse_partial_square(std::istream& in) {
    Tokens t(in);
    int n = to_int(exactly(t, 1, "square order 'n'")[0]);
    PartialLatinSquare p(n);
    while (!t.done()) {
        auto row = exactly(t, 3, "cell line 'r c v'");
        p.set(to_int(row[0]), to_int(row[1]), to_int(row[2]));
    }
    return p;
}

std::string format_partial_square(const PartialLatinSquare& p) {
    std::ostringstream out;
    out << p.order() << '\n';
    for (const auto& c : p.cells()) out << c.row << ' ' << c.col << ' ' << c.value << '\n';
    return out.str();
}

std::string format_latin_descents(std::span<const LatinDescent> descents) {
    std::ostringstream out;
    for (const auto& d : descents) {
        for (const auto* c : {&d.y_cell, &d.row_mate, &d.col_mate})
            out << (c == &d.y_cell ? "" : "  ") << c->row << ' ' << c->col << ' ' << c->value;
        out << '\n';
    }
    return out.str();
}

std::string format_latin_gds(const LatinGdsResult& r) {
    return "# size " + std::to_string(r.size) + (r.optimal ? " optimal\n" : " heuristic\n") +
           format_partial_square(r.witness);
}

std::string format_cell(Cell c) { return std::to_string(c.row) + " " + std::to_string(c.col) + "\n"; }

namespace {
const char* yes_no(bool b) { return b ? "yes" : "no"; }
}  // namespace

std::string format_bound_report(const BoundReport& r) {
    std::ostringstream out;
    out << "n=" << r.n << " cover=" << r.cover_size << " bound=" << std::fixed << std::setprecision(3) << r.bound
        << " holds=" << yes_no(r.holds) << " exact=" << yes_no(r.exact) << '\n';
    for (const auto& c : r.cells) out << c.row << ' ' << c.col << ' ' << c.value << '\n';
    return out.str();
}

AccessStructure parse_access(std::istream& in) {
    AccessStructure a;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw InputError("access line lacks 'set-id:' prefix: " + line);
        AuthorizedSet set;
        std::istringstream id_words(line.substr(0, colon));
        if (!(id_words >> set.id)) throw InputError("access line has an empty set id");
        std::istringstream words(line.substr(colon + 1));
        std::string m;
        while (words >> m) {
            set.members.push_back(m);
            if (std::find(a.participants.begin(), a.participants.end(), m) == a.participants.end())
                a.participants.push_back(m);
        }
        a.sets.push_back(std::move(set));
    }
    std::sort(a.participants.begin(), a.participants.end());
    a.validate();
    return a;
}

std::string format_access(const AccessStructure& a) {
    std::ostringstream out;
    for (const auto& s : a.sets) {
        out << s.id << ':';
        for (const auto& m : s.members) out << ' ' << m;
        out << '\n';
    }
    return out.str();
}

ShareFile parse_share(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() < 5 || lines[0] != "GDS-SHARE v1") throw InputError("not a GDS-SHARE v1 file");
    auto field = [&](std::size_t i, const std::string& key) {
        const auto& l = lines[i];
        if (l.rfind(key + "=", 0) != 0) throw InputError("share header line " + std::to_string(i + 1) +
                                                         " should start with '" + key + "='");
        return l.substr(key.size() + 1);
    };
    ShareFile s;
    auto number = [](const std::string& text, const char* what) {
        std::istringstream is(text);
        Tokens t(is);
        return to_int(exactly(t, 1, what)[0]);
    };
    s.n = number(field(1, "n"), "share order");
    s.set = field(2, "set");
    s.participant = field(3, "participant");
    int count = number(field(4, "cells"), "share cell count");
    if (count < 0 || lines.size() != 5 + static_cast<std::size_t>(count))
        throw InputError("share announces " + std::to_string(count) + " cells but holds " +
                         std::to_string(lines.size() - 5));
    for (std::size_t i = 5; i < lines.size(); ++i) {
        std::istringstream is(lines[i]);
        Tokens t(is);
        auto row = exactly(t, 3, "share cell 'r c v'");
        s.cells.push_back({to_int(row[0]), to_int(row[1]), to_int(row[2])});
    }
    return s;
}

std::string format_share(const ShareFile& s) {
    std::ostringstream out;
    out << "GDS-SHARE v1\n"
        << "n=" << s.n << '\n'
        << "set=" << s.set << '\n'
        << "participant=" << s.participant << '\n'
        << "cells=" << s.cells.size() << '\n';
    for (const auto& c : s.cells) out << c.row << ' ' << c.col << ' ' << c.value << '\n';
    return out.str();
}

std::vector<ShareFile> share_files(const ShareBundle& b) {
    std::vector<ShareFile> out;
    for (const auto& [key, cells] : b.pieces) out.push_back({b.n, key.second, key.first, cells});
    std::stable_sort(out.begin(), out.end(), [](const ShareFile& x, const ShareFile& y) {
        return std::tie(x.set, x.participant) < std::tie(y.set, y.participant);
    });
    return out;
}

ShareBundle bundle_from(std::span<const ShareFile> shares) {
    ShareBundle b;
    for (const auto& s : shares) {
        if (b.pieces.empty()) b.n = s.n;
        if (s.n != b.n) throw InputError("shares disagree on the square order");
        if (!b.pieces.emplace(std::pair{s.participant, s.set}, s.cells).second)
            throw InputError("two shares for participant '" + s.participant + "' in set '" + s.set + "'");
    }
    return b;
}

std::string format_audit_report(const AuditReport& r) {
    std::ostringstream out;
    for (const auto& s : r.sets) {
        out << "set " << s.id << " cells=" << s.cells << " reconstructs=" << yes_no(s.reconstructs);
        for (const auto& [who, ok] : s.without_member) out << " without " << who << '=' << yes_no(ok);
        out << '\n';
    }
    out << "trivially-recoverable=" << yes_no(r.trivially_recoverable) << '\n';
    return out.str();
}

std::string share_file_name(const std::string& set, const std::string& participant) {
    return set + "." + participant + ".share";
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace gds::io
