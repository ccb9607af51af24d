#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "gds/errors.hpp"
#include "gds/io.hpp"
#include "support/generators.hpp"

using namespace gds;

namespace {

template <typename Parser>
auto parse(const std::string& text, Parser p) {
    std::istringstream in(text);
    return p(in);
}

}  // namespace

TEST_CASE("graph text") {
    auto g = parse("# C4 in reverse\n4 4\n4 3 2 1\n1 2\n2 3\n3 4\n4 1\n", io::parse_graph);
    CHECK(g.size() == 4);
    CHECK(g.order() == std::vector<Vertex>{4, 3, 2, 1});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
    CHECK(io::format_graph(g) == "4 4\n4 3 2 1\n1 2\n1 4\n2 3\n3 4\n");

    // The order may wrap across lines.
    CHECK(parse("3 0\n1 2\n3\n", io::parse_graph).order() == std::vector<Vertex>{1, 2, 3});

    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 50; ++trial) {
        auto h = testing::random_ordered_graph(testing::uniform(1, 10, rng), 0.4, rng);
        auto back = parse(io::format_graph(h), io::parse_graph);
        CHECK(back.order() == h.order());
        CHECK(back.edges() == h.edges());
    }

    CHECK_THROWS_AS(parse("", io::parse_graph), InputError);
    CHECK_THROWS_AS(parse("2 1\n1 2\n", io::parse_graph), InputError);
    CHECK_THROWS_AS(parse("2 1\n1 2\n1 2\n1 2\n", io::parse_graph), InputError);
    CHECK_THROWS_AS(parse("2 0\n1 x\n", io::parse_graph), InputError);
    CHECK_THROWS_AS(parse("2 1\n1 2\n1 1\n", io::parse_graph), InputError);
    CHECK_THROWS_AS(parse("2 1 5\n1 2\n1 2\n", io::parse_graph), InputError);
}

TEST_CASE("coloring and defining set text") {
    auto c = parse("1 2\n1\n", io::parse_coloring);
    CHECK(c.colors() == std::vector<Color>{1, 2, 1});
    CHECK(io::format_coloring(c.colors()) == "1 2 1\n");
    CHECK_THROWS_AS(parse("1 0 2\n", io::parse_coloring), InputError);

    auto s = parse("3 1\n1 2 # comment\n", io::parse_defining_set);
    CHECK(s == PartialColoring{{1, 2}, {3, 1}});
    CHECK(io::format_defining_set(s) == "1 2\n3 1\n");
    CHECK(parse("", io::parse_defining_set).empty());
    CHECK_THROWS_AS(parse("1 2\n1 3\n", io::parse_defining_set), InputError);
    CHECK_THROWS_AS(parse("1 2 3\n", io::parse_defining_set), InputError);
}

TEST_CASE("descent text") {
    std::vector<Descent> ds{{1, {2, 5}, 1, 3}, {4, {}, 2, 3}};
    CHECK(io::format_descents(ds) == "1 1 3 2 5\n4 2 3\n");
    std::vector<LatinDescent> ls{{{2, 2, 3}, {2, 3, 1}, {3, 2, 1}}};
    CHECK(io::format_latin_descents(ls) == "2 2 3  2 3 1  3 2 1\n");
}

TEST_CASE("Latin square text") {
    auto l = parse("3\n1 2 3\n2 3 1\n3 1 2\n", io::parse_latin_square);
    CHECK(l.at(2, 3) == 1);
    CHECK(io::format_latin_square(l) == "3\n1 2 3\n2 3 1\n3 1 2\n");
    CHECK_THROWS_AS(parse("2\n1 2\n", io::parse_latin_square), InputError);
    CHECK_THROWS_AS(parse("2\n1 2\n2 1\n1 2\n", io::parse_latin_square), InputError);
    CHECK_THROWS_AS(parse("2\n1 2\n1 2\n", io::parse_latin_square), InputError);
    CHECK_THROWS_AS(parse("0\n", io::parse_latin_square), InputError);

    auto p = parse("3\n2 2 3\n1 1 1\n", io::parse_partial_square);
    CHECK(p.size() == 2);
    CHECK(io::format_partial_square(p) == "3\n1 1 1\n2 2 3\n");
    CHECK_THROWS_AS(parse("3\n1 1 1\n1 2 1\n", io::parse_partial_square), InputError);
    CHECK_THROWS_AS(parse("3\n1 1\n", io::parse_partial_square), InputError);
}

TEST_CASE("access structure text") {
    auto a = parse("# two sets\nboard: carol alice\nsolo: bob\n", io::parse_access);
    CHECK(a.participants == std::vector<std::string>{"alice", "bob", "carol"});
    REQUIRE(a.sets.size() == 2);
    CHECK(a.sets[0].id == "board");
    CHECK(a.sets[0].members == std::vector<std::string>{"carol", "alice"});
    CHECK(io::format_access(a) == "board: carol alice\nsolo: bob\n");
    CHECK_THROWS_AS(parse("board carol\n", io::parse_access), InputError);
    CHECK_THROWS_AS(parse(": carol\n", io::parse_access), InputError);
    CHECK_THROWS_AS(parse("x: a\nx: b\n", io::parse_access), InputError);
    CHECK_THROWS_AS(parse("x:\n", io::parse_access), InputError);
}

TEST_CASE("share text") {
    io::ShareFile s{4, "board", "alice", {{1, 2, 3}, {4, 4, 1}}};
    auto text = io::format_share(s);
    CHECK(text == "GDS-SHARE v1\nn=4\nset=board\nparticipant=alice\ncells=2\n1 2 3\n4 4 1\n");
    auto back = parse(text, io::parse_share);
    CHECK(back.n == 4);
    CHECK(back.set == "board");
    CHECK(back.participant == "alice");
    CHECK(back.cells == s.cells);
    CHECK(io::share_file_name("board", "alice") == "board.alice.share");

    CHECK_THROWS_AS(parse("GDS-SHARE v2\nn=4\nset=a\nparticipant=b\ncells=0\n", io::parse_share), InputError);
    CHECK_THROWS_AS(parse("GDS-SHARE v1\nn=4\nset=a\nparticipant=b\ncells=1\n", io::parse_share), InputError);
    CHECK_THROWS_AS(parse("GDS-SHARE v1\nn=4\nparticipant=b\nset=a\ncells=0\n", io::parse_share), InputError);
}

TEST_CASE("files") {
    auto dir = std::filesystem::temp_directory_path() / "gds_io_test";
    std::filesystem::create_directories(dir);
    auto path = dir / "square.txt";
    io::write_text(path, "2\n1 2\n2 1\n");
    CHECK(io::load(path, io::parse_latin_square).at(1, 2) == 2);
    io::write_text(path, "2\n1 2\n1 2\n");
    try {
        io::load(path, io::parse_latin_square);
        FAIL("expected an InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("square.txt") != std::string::npos);
    }
    CHECK_THROWS_AS(io::read_text(dir / "missing.txt"), InputError);
    std::filesystem::remove_all(dir);
}
