// gds: command-line front end. Every subcommand loads its inputs, calls one
// library operation and prints the io:: serialization of the result.
//
// Exit codes: 0 success/true, 1 false or completion failure, 2 usage or
// input error, 3 capability guard exceeded, 4 internal error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "gds/core.hpp"
#include "gds/errors.hpp"
#include "gds/exact.hpp"
#include "gds/forest.hpp"
#include "gds/io.hpp"
#include "gds/latin.hpp"
#include "gds/reductions.hpp"
#include "gds/sharing.hpp"

namespace fs = std::filesystem;
using namespace gds;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kCapability = 3;
constexpr int kInternal = 4;

int print(const std::string& text, int code = kOk) {
    std::cout << text;
    return code;
}

int completion(const CompletionResult& r) {
    if (r.ok()) return print(io::format_latin_square(*r.square));
    return print(io::format_cell(*r.failure), kFalse);
}

std::vector<io::ShareFile> load_shares(const std::vector<std::string>& paths) {
    std::vector<io::ShareFile> out;
    for (const auto& p : paths) out.push_back(io::load(p, io::parse_share));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy defining sets of ordered graphs and Latin squares"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string graph, coloring, defining, square, partial, access, out_dir, coloring_out;
    std::string variant = "colored";
    std::vector<std::string> shares;
    std::uint64_t seed = 0;
    int order = 0;
    bool rows = false, cols = false, entries = false, exact = false, heuristic = false;

    auto* color = app.add_subcommand("color", "First-fit coloring from an optional defining set");
    color->add_option("--graph", graph, "Ordered graph file")->required();
    color->add_option("--defining", defining, "Defining set file (lines 'v c')");
    color->callback([&] {
        action = [&] {
            auto g = io::load(graph, io::parse_graph);
            PartialColoring s = defining.empty() ? PartialColoring{} : io::load(defining, io::parse_defining_set);
            auto out = greedy_color(g, s);
            return print(io::format_coloring(out.coloring), out.proper ? kOk : kFalse);
        };
    });

    auto* descents = app.add_subcommand("descents", "Descents of a proper coloring");
    descents->add_option("--graph", graph, "Ordered graph file")->required();
    descents->add_option("--coloring", coloring, "Coloring file")->required();
    descents->callback([&] {
        action = [&] {
            auto g = io::load(graph, io::parse_graph);
            auto c = io::load(coloring, io::parse_coloring);
            return print(io::format_descents(find_descents(g, c)));
        };
    });

    auto* gdn_cmd = app.add_subcommand("gdn", "Greedy defining number over all chi-colorings");
    gdn_cmd->add_option("--graph", graph, "Ordered graph file")->required();
    gdn_cmd->add_option("--coloring-out", coloring_out, "Write the witness coloring here");
    gdn_cmd->callback([&] {
        action = [&] {
            auto r = gdn(io::load(graph, io::parse_graph));
            if (!coloring_out.empty()) io::write_text(coloring_out, io::format_coloring(r.coloring));
            return print(io::format_gdn(r));
        };
    });

    auto* gdn_fixed_cmd = app.add_subcommand("gdn-fixed", "Minimum defining set for a fixed coloring");
    gdn_fixed_cmd->add_option("--graph", graph, "Ordered graph file")->required();
    gdn_fixed_cmd->add_option("--coloring", coloring, "Coloring file")->required();
    gdn_fixed_cmd->callback([&] {
        action = [&] {
            auto g = io::load(graph, io::parse_graph);
            return print(io::format_gdn(gdn_fixed(g, io::load(coloring, io::parse_coloring))));
        };
    });

    auto* forest = app.add_subcommand("forest-gdn", "Greedy defining number of an ordered forest");
    forest->add_option("--graph", graph, "Ordered forest file")->required();
    forest->add_option("--coloring-out", coloring_out, "Write the witness coloring here");
    forest->callback([&] {
        action = [&] {
            auto r = forest_gdn(io::load(graph, io::parse_graph));
            if (!coloring_out.empty()) io::write_text(coloring_out, io::format_coloring(r.coloring));
            return print(io::format_gdn(r));
        };
    });

    auto* reduce = app.add_subcommand("reduce-vc", "Ordered graph whose GDN is the vertex cover number of F");
    reduce->add_option("--graph", graph, "Graph F (its processing order is ignored)")->required();
    reduce->add_option("--variant", variant, "colored or bipartite")
        ->check(CLI::IsMember({"colored", "bipartite"}));
    reduce->add_option("--coloring-out", coloring_out, "Write the instance coloring here");
    reduce->callback([&] {
        action = [&] {
            auto f = io::load(graph, io::parse_graph).simple();
            if (variant == "colored") {
                auto inst = colored_vc_instance(f);
                if (!coloring_out.empty()) io::write_text(coloring_out, io::format_coloring(inst.coloring.colors()));
                return print(io::format_graph(inst.graph));
            }
            auto inst = bipartite_vc_instance(f);
            if (!coloring_out.empty())
                io::write_text(coloring_out, io::format_coloring(inst.coloring_with_x(1).colors()));
            return print(io::format_graph(inst.graph));
        };
    });

    auto* ldesc = app.add_subcommand("latin-descents", "Descents of a Latin square");
    ldesc->add_option("--square", square, "Latin square file")->required();
    ldesc->callback([&] {
        action = [&] { return print(io::format_latin_descents(latin_descents(io::load(square, io::parse_latin_square)))); };
    });

    auto* lgds = app.add_subcommand("latin-gds", "Greedy defining set of a Latin square");
    lgds->add_option("--square", square, "Latin square file")->required();
    auto* kind_rows = lgds->add_flag("--rows", rows, "Cover the row graph R(L)");
    auto* kind_cols = lgds->add_flag("--cols", cols, "Cover the column graph C(L)");
    auto* kind_entries = lgds->add_flag("--entries", entries, "Cover the entry graph E(L)");
    kind_rows->excludes(kind_cols)->excludes(kind_entries);
    kind_cols->excludes(kind_entries);
    lgds->add_flag("--exact", exact, "Exact cover (with a cover graph)");
    lgds->add_flag("--heuristic", heuristic, "Greedy transversal instead of the exact minimum");
    lgds->callback([&] {
        action = [&] {
            auto l = io::load(square, io::parse_latin_square);
            if (rows || cols || entries) {
                auto kind = rows ? CoverKind::Rows : cols ? CoverKind::Cols : CoverKind::Entries;
                auto d = gds_from_cover(l, kind, cover_of(build_cover_graph(l, kind), exact));
                return print(io::format_partial_square(d));
            }
            return print(io::format_latin_gds(min_latin_gds(l, heuristic ? SearchMode::Heuristic : SearchMode::Exact)));
        };
    });

    auto* lverify = app.add_subcommand("latin-verify", "Whether a partial square is a greedy defining set");
    lverify->add_option("--square", square, "Latin square file")->required();
    lverify->add_option("--defining", defining, "Partial square file")->required();
    lverify->callback([&] {
        action = [&] {
            bool ok = verify_latin_gds(io::load(square, io::parse_latin_square),
                                       io::load(defining, io::parse_partial_square));
            return print(ok ? "true\n" : "false\n", ok ? kOk : kFalse);
        };
    });

    auto* lcomplete = app.add_subcommand("latin-complete", "First-fit completion of a partial square");
    lcomplete->add_option("--partial", partial, "Partial square file")->required();
    lcomplete->callback([&] { action = [&] { return completion(greedy_complete(io::load(partial, io::parse_partial_square))); }; });

    auto* lbound = app.add_subcommand("latin-bound", "Entry-graph cover against the size bound");
    lbound->add_option("--square", square, "Latin square file")->required();
    lbound->add_flag("--exact", exact, "Exact cover (order at most 8)");
    lbound->callback([&] {
        action = [&] {
            auto r = bound_report(io::load(square, io::parse_latin_square), exact);
            return print(io::format_bound_report(r), r.holds ? kOk : kFalse);
        };
    });

    auto* lrandom = app.add_subcommand("latin-random", "Random Latin square");
    lrandom->add_option("--n", order, "Order")->required()->check(CLI::PositiveNumber);
    lrandom->add_option("--seed", seed, "Seed")->capture_default_str();
    lrandom->callback([&] { action = [&] { return print(io::format_latin_square(random_latin(order, seed))); }; });

    auto* lg = app.add_subcommand("latin-g", "Smallest GDS size over all squares of order n");
    lg->add_option("--n", order, "Order")->required()->check(CLI::PositiveNumber);
    lg->callback([&] { action = [&] { return print(std::to_string(g_number(order)) + "\n"); }; });

    auto* sdeal = app.add_subcommand("share-deal", "Split a Latin-square key into share files");
    sdeal->add_option("--square", square, "Key file")->required();
    sdeal->add_option("--access", access, "Access structure file")->required();
    sdeal->add_option("--seed", seed, "Seed")->capture_default_str();
    sdeal->add_option("--out-dir", out_dir, "Directory for the share files")->required();
    sdeal->callback([&] {
        action = [&] {
            auto bundle = deal(io::load(square, io::parse_latin_square), io::load(access, io::parse_access), seed);
            fs::create_directories(out_dir);
            std::string listing;
            for (const auto& s : io::share_files(bundle)) {
                auto name = io::share_file_name(s.set, s.participant);
                io::write_text(fs::path(out_dir) / name, io::format_share(s));
                listing += name + "\n";
            }
            return print(listing);
        };
    });

    auto* srec = app.add_subcommand("share-reconstruct", "Complete the key from pooled share files");
    srec->add_option("shares", shares, "Share files of one authorized set")->required();
    srec->callback([&] {
        action = [&] {
            auto files = load_shares(shares);
            std::vector<std::vector<LatinCell>> pieces;
            for (const auto& f : files) {
                if (f.set != files.front().set) throw InputError("shares belong to different authorized sets");
                if (f.n != files.front().n) throw InputError("shares disagree on the square order");
                pieces.push_back(f.cells);
            }
            return completion(reconstruct(pieces, files.front().n));
        };
    });

    auto* saudit = app.add_subcommand("share-audit", "Check that every authorized set recovers the key");
    saudit->add_option("--square", square, "Key file")->required();
    saudit->add_option("--access", access, "Access structure file")->required();
    saudit->add_option("shares", shares, "All share files")->required();
    saudit->callback([&] {
        action = [&] {
            auto files = load_shares(shares);
            auto report = audit(io::load(square, io::parse_latin_square), io::load(access, io::parse_access),
                                io::bundle_from(files));
            return print(io::format_audit_report(report), report.passed() ? kOk : kFalse);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        return action();
    } catch (const CapabilityError& e) {
        std::cerr << "gds: " << e.what() << '\n';
        return kCapability;
    } catch (const InputError& e) {
        std::cerr << "gds: " << e.what() << '\n';
        return kUsage;
    } catch (const InternalError& e) {
        std::cerr << "gds: internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "gds: " << e.what() << '\n';
        return kUsage;
    }
}
