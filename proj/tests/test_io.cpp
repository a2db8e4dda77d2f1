#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "stclab/io.hpp"
#include "test_util.hpp"

using namespace stclab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int sequence = 0;
    path = fs::temp_directory_path() /
           ("stclab-io-" + std::to_string(::getpid()) + "-" +
            std::to_string(sequence++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("graph files round-trip") {
  TempDir tmp;
  Graph g = testutil::complete_graph(4);
  write_graph_file(tmp.file("k4.gr"), g, {"a comment"});
  Graph back = read_graph_file(tmp.file("k4.gr"));
  CHECK(back.vertex_count() == 4);
  CHECK(back.edges() == g.edges());

  // Identical inputs produce byte-identical outputs.
  write_graph_file(tmp.file("k4b.gr"), g, {"a comment"});
  CHECK(file_digest(tmp.file("k4.gr")) == file_digest(tmp.file("k4b.gr")));
}

TEST_CASE("graph file error handling") {
  TempDir tmp;
  write_text(tmp.file("nohdr.gr"), "e 1 2\n");
  CHECK_THROWS_AS(read_graph_file(tmp.file("nohdr.gr")), IoError);

  write_text(tmp.file("badcount.gr"), "p edge 3 2\ne 1 2\n");
  CHECK_THROWS_AS(read_graph_file(tmp.file("badcount.gr")), IoError);

  write_text(tmp.file("range.gr"), "p edge 3 1\ne 1 4\n");
  CHECK_THROWS_AS(read_graph_file(tmp.file("range.gr")), IoError);

  write_text(tmp.file("loop.gr"), "p edge 3 1\ne 2 2\n");
  CHECK_THROWS_AS(read_graph_file(tmp.file("loop.gr")), IoError);

  CHECK_THROWS_AS(read_graph_file(tmp.file("missing.gr")), IoError);
}

TEST_CASE("tree files round-trip and validate against the host") {
  TempDir tmp;
  Graph g = testutil::complete_graph(4);
  SpanningTree t = testutil::star_tree(g, 0);
  write_tree_file(tmp.file("t.tree"), t);
  SpanningTree back = read_tree_file(tmp.file("t.tree"), g);
  CHECK(back.edges() == t.edges());

  // An edge outside the host graph must be rejected.
  Graph p4 = testutil::path_graph(4);
  write_text(tmp.file("alien.tree"), "p tree 4\nt 1 2\nt 2 3\nt 1 4\n");
  CHECK_THROWS_AS(read_tree_file(tmp.file("alien.tree"), p4), IoError);

  write_text(tmp.file("short.tree"), "p tree 4\nt 1 2\n");
  CHECK_THROWS_AS(read_tree_file(tmp.file("short.tree"), p4), IoError);
}

TEST_CASE("labels files round-trip") {
  TempDir tmp;
  ReductionArtifact art =
      build_reduction(normalize_instance({1, 30, {9, 10, 11}}));
  write_labels_file(tmp.file("d1.labels"), art, "d1.json");
  LabelsFile labels = read_labels_file(tmp.file("d1.labels"));
  CHECK(labels.k == 90);
  CHECK(labels.instance_path == "d1.json");
  REQUIRE(labels.roles.size() == art.roles.size());
  for (size_t v = 0; v < labels.roles.size(); ++v) {
    CHECK(labels.roles[v].role == art.roles[v].role);
    CHECK(labels.roles[v].index == art.roles[v].index);
  }

  ReductionArtifact again = assemble_artifact(art.graph, labels.k, labels.roles);
  CHECK(audit_construction(again).all_pass());

  write_text(tmp.file("nok.labels"), "v 1 X 1\n");
  CHECK_THROWS_AS(read_labels_file(tmp.file("nok.labels")), IoError);
  write_text(tmp.file("gap.labels"), "k 90\nv 1 X 1\nv 3 X 2\n");
  CHECK_THROWS_AS(read_labels_file(tmp.file("gap.labels")), IoError);
}

TEST_CASE("order files round-trip") {
  TempDir tmp;
  std::vector<int> order = {3, 0, 2, 1};
  write_order_file(tmp.file("o.txt"), order);
  CHECK(read_order_file(tmp.file("o.txt")) == order);

  write_text(tmp.file("bad.txt"), "1 2 x\n");
  CHECK_THROWS_AS(read_order_file(tmp.file("bad.txt")), IoError);
}

TEST_CASE("instance JSON round-trips") {
  TempDir tmp;
  ThreePartitionInstance inst{2, 60, {16, 17, 19, 20, 23, 25}};
  write_instance_json(tmp.file("i.json"), inst);
  RawInstance raw = read_instance_json(tmp.file("i.json"));
  CHECK(raw.m == 2);
  CHECK(raw.B == 60);
  CHECK(raw.a == inst.a);

  write_text(tmp.file("bad1.json"), R"({"m": 1, "B": 30})");
  CHECK_THROWS_AS(read_instance_json(tmp.file("bad1.json")), IoError);
  write_text(tmp.file("bad2.json"), R"({"m": 1, "B": 30, "a": [1, "x"]})");
  CHECK_THROWS_AS(read_instance_json(tmp.file("bad2.json")), IoError);
  write_text(tmp.file("bad3.json"), "not json");
  CHECK_THROWS_AS(read_instance_json(tmp.file("bad3.json")), IoError);
}

TEST_CASE("partition JSON round-trips") {
  TempDir tmp;
  Partition p{{{0, 2, 5}, {1, 3, 4}}};
  write_partition_json(tmp.file("p.json"), p);
  Partition back = read_partition_json(tmp.file("p.json"));
  CHECK(back.groups == p.groups);

  write_text(tmp.file("bad.json"), R"({"groups": 3})");
  CHECK_THROWS_AS(read_partition_json(tmp.file("bad.json")), IoError);
}

TEST_CASE("file digests are stable and content-sensitive") {
  TempDir tmp;
  write_text(tmp.file("a.txt"), "hello");
  write_text(tmp.file("b.txt"), "hello");
  write_text(tmp.file("c.txt"), "hellp");
  CHECK(file_digest(tmp.file("a.txt")) == file_digest(tmp.file("b.txt")));
  CHECK(file_digest(tmp.file("a.txt")) != file_digest(tmp.file("c.txt")));
  CHECK(file_digest(tmp.file("a.txt")).size() == 16);
}
