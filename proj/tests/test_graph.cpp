#include "support.hpp"

#include "blockselect/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace blockselect;

namespace {

Graph parse(const std::string &text, LoadOptions opts = {}) {
    std::istringstream in(text);
    return load_edge_list(in, opts);
}

std::string message_of(const std::string &text, LoadOptions opts = {}) {
    try {
        parse(text, opts);
    } catch (const InputError &e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("triangle edge list") {
    const Graph g = parse("0 1\n1 2\n0 2");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.degrees() == std::vector<Count>{2, 2, 2});
    CHECK(g.has_edge(2, 0));
}

TEST_CASE("one-indexed single edge") {
    const Graph g = parse("1 2", {.one_indexed = true});
    CHECK(g.num_vertices() == 2);
    CHECK(g.degrees() == std::vector<Count>{1, 1});
    CHECK(g.original_ids() == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("comments, blank lines and CRLF are skipped") {
    const Graph g = parse("# header\r\n0 1\r\n\r\n  # indented comment\n1 2 extra-column\r\n");
    CHECK(g.num_edges() == 2);
}

TEST_CASE("malformed input is rejected with its line") {
    CHECK(message_of("0 1\n2 2\n").find("line 2") != std::string::npos);
    CHECK(message_of("0 1\n2 2\n").find("self-loop") != std::string::npos);
    CHECK(message_of("0 x\n").find("non-integer") != std::string::npos);
    CHECK(message_of("0\n").find("two vertex ids") != std::string::npos);
    CHECK(message_of("0 1\n1 0\n").find("duplicate") != std::string::npos);
    CHECK(message_of("-1 3\n").find("negative") != std::string::npos);
}

TEST_CASE("duplicates can be dropped") {
    const Graph g = parse("0 1\n1 0\n0 1\n1 2\n", {.drop_duplicates = true});
    CHECK(g.num_edges() == 2);
}

TEST_CASE("sparse ids are compacted in first-seen order") {
    const Graph g = parse("10 30\n30 20\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.original_ids() == std::vector<std::int64_t>{10, 30, 20});
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {}, {5}), InputError);
}

TEST_CASE("largest component") {
    SUBCASE("triangle plus an isolated vertex") {
        const Graph g(4, {{1, 2}, {2, 3}, {1, 3}});
        const Graph c = largest_component(g);
        CHECK(c.num_vertices() == 3);
        CHECK(c.num_edges() == 3);
        CHECK(c.original_ids() == std::vector<std::int64_t>{1, 2, 3});
    }
    SUBCASE("ties go to the component of vertex 0") {
        const Graph g(4, {{2, 3}, {0, 1}});
        const Graph c = largest_component(g);
        CHECK(c.num_vertices() == 2);
        CHECK(c.original_ids() == std::vector<std::int64_t>{0, 1});
    }
    SUBCASE("empty graph") { CHECK_THROWS_AS(largest_component(Graph()), InputError); }
}

TEST_CASE("write then load gives the same edge set") {
    std::mt19937_64 rng(7);
    const Graph g = testing::random_graph(40, 0.15, rng);
    std::stringstream buf;
    write_edge_list(buf, g);
    const Graph h = load_edge_list(buf);
    REQUIRE(h.num_edges() == g.num_edges());
    CHECK(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin()));
}

TEST_CASE("vertex label files use original ids") {
    const Graph g = parse("1 2\n2 3\n", {.one_indexed = true});
    std::istringstream ok("3 1\n1 0\n2 0\n");
    CHECK(load_vertex_labels(ok, g) == std::vector<std::int32_t>{0, 0, 1});
    std::istringstream unknown("7 1\n");
    CHECK_THROWS_AS(load_vertex_labels(unknown, g), InputError);
    std::istringstream missing("1 0\n");
    CHECK_THROWS_AS(load_vertex_labels(missing, g), InputError);
}
