#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "btwc/edge_list_io.hpp"
#include "btwc/errors.hpp"
#include "btwc/generators.hpp"
#include "doctest.h"

using namespace btwc;

namespace {

EdgeListData parse(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() / name).string();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("edge list parsing") {
  SUBCASE("plain edges infer the order") {
    EdgeListData d = parse("0 1\n1 2\n");
    CHECK(d.n == 3);
    CHECK(d.edges == std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("header pins the order") {
    EdgeListData d = parse("n=6\n0 1\n");
    CHECK(d.n == 6);
    CHECK(d.edges.size() == 1);
  }
  SUBCASE("header alone describes an empty graph") {
    EdgeListData d = parse("n=4\n");
    CHECK(d.n == 4);
    CHECK(d.edges.empty());
  }
  SUBCASE("comments and blank lines are skipped") {
    EdgeListData d = parse(
        "# a triangle\n"
        "\n"
        "n=3  # with a trailing comment\n"
        "0 1\n"
        "1 2   # interior edge\n"
        "\n"
        "0 2\n");
    CHECK(d.n == 3);
    CHECK(d.edges.size() == 3);
  }
  SUBCASE("whitespace is flexible") {
    EdgeListData d = parse("  0\t 1 \n\t1  2\n");
    CHECK(d.edges.size() == 2);
  }
}

TEST_CASE("edge list parse errors") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("# only comments\n\n"), ParseError);
  CHECK_THROWS_AS(parse("0\n"), ParseError);
  CHECK_THROWS_AS(parse("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("n=\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("n=x\n"), ParseError);
  CHECK_THROWS_AS(parse("0 1\nn=5\n"), ParseError);  // header must come first
  CHECK_THROWS_AS(parse("0 1234567890\n"), ParseError);  // id too wide
}

TEST_CASE("canonical formatting") {
  Graph g = Graph::build(4, {{2, 3}, {1, 0}, {0, 2}});
  CHECK(format_edge_list(g) == "n=4\n0 1\n0 2\n2 3\n");

  SUBCASE("isolated vertices survive a round trip") {
    Graph lone = Graph::build(5, {{0, 1}});
    EdgeListData back = parse(format_edge_list(lone));
    CHECK(back.n == 5);
    CHECK(back.edges == std::vector<Edge>{{0, 1}});
  }
  SUBCASE("formatting is a fixed point") {
    Graph w = generate({Family::Wheel, 8});
    std::string text = format_edge_list(w);
    EdgeListData d = parse(text);
    CHECK(format_edge_list(Graph::build(d.n, d.edges)) == text);
  }
}

TEST_CASE("file round trip") {
  TempFile tmp("btwc_io_test.edges");
  Graph g = generate({Family::Crown, 4});
  write_edge_list_file(g, tmp.path);
  EdgeListData d = read_edge_list_file(tmp.path);
  CHECK(d.n == g.num_vertices());
  CHECK(Graph::build(d.n, d.edges).edge_list() == g.edge_list());
}

TEST_CASE("missing file raises an io error") {
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/btwc/missing.edges"),
                  IoError);
}
