#pragma once

// Text formats. Everything is whitespace separated and 1-based; blank
// lines and '#' comments are ignored except inside share files.
//
//   graph          "n m", then the processing order (n vertices), then m
//                  lines "u v"
//   coloring       n colors, the k-th belongs to vertex k
//   defining set   lines "v c"
//   Latin square   "n", then n rows of n entries
//   partial square "n", then lines "r c v"
//   access         lines "set-id: participant participant ..."
//   share          "GDS-SHARE v1", "n=<n>", "set=<id>", "participant=<id>",
//                  "cells=<count>", then count lines "r c v"

#include <filesystem>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "gds/core.hpp"
#include "gds/errors.hpp"
#include "gds/latin.hpp"
#include "gds/sharing.hpp"

namespace gds::io {

OrderedGraph parse_graph(std::istream& in);
std::string format_graph(const OrderedGraph& g);

ProperColoring parse_coloring(std::istream& in);
std::string format_coloring(std::span<const Color> colors);

PartialColoring parse_defining_set(std::istream& in);
std::string format_defining_set(const PartialColoring& s);

/// Size on the first line, then the witness as defining-set lines.
std::string format_gdn(const GdnResult& r);

/// One descent per line: "head low high tail...".
std::string format_descents(std::span<const Descent> descents);

LatinSquare parse_latin_square(std::istream& in);
std::string format_latin_square(const LatinSquare& l);

PartialLatinSquare parse_partial_square(std::istream& in);
std::string format_partial_square(const PartialLatinSquare& p);

/// One descent per line: "i j y  i k x  r j x" (y-cell, row mate, column mate).
std::string format_latin_descents(std::span<const LatinDescent> descents);

/// A comment line "# size <k> optimal|heuristic", then the witness as a
/// partial square.
std::string format_latin_gds(const LatinGdsResult& r);

/// "r c" of a cell, newline terminated.
std::string format_cell(Cell c);

/// "n=<n> cover=<k> bound=<b> holds=<yes|no> exact=<yes|no>", then the
/// cover cells as "r c v" lines.
std::string format_bound_report(const BoundReport& r);

AccessStructure parse_access(std::istream& in);
std::string format_access(const AccessStructure& a);

struct ShareFile {
    int n = 0;
    std::string set;
    std::string participant;
    std::vector<LatinCell> cells;
};

ShareFile parse_share(std::istream& in);
std::string format_share(const ShareFile& s);

/// Every piece of a bundle as a share file, ordered by set id, then
/// participant.
std::vector<ShareFile> share_files(const ShareBundle& b);

/// Bundle holding the given shares; throws InputError on mixed orders or a
/// repeated (participant, set) pair.
ShareBundle bundle_from(std::span<const ShareFile> shares);

/// One line per set: "set <id> cells=<k> reconstructs=<yes|no>" followed by
/// " without <participant>=<yes|no>" entries, then
/// "trivially-recoverable=<yes|no>".
std::string format_audit_report(const AuditReport& r);

/// File name used for a share: "<set>.<participant>.share".
std::string share_file_name(const std::string& set, const std::string& participant);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Opens `path` and runs `parse` on it; failures become InputError naming
/// the file.
template <typename Parser>
auto load(const std::filesystem::path& path, Parser parse) -> decltype(parse(std::declval<std::istream&>())) {
    std::istringstream in(read_text(path));
    try {
        return parse(in);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace gds::io
