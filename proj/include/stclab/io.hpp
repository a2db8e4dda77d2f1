#pragma once

#include <string>
#include <vector>

#include "stclab/graph.hpp"
#include "stclab/reduction.hpp"
#include "stclab/threepart.hpp"

namespace stclab {

// File formats (all 1-indexed on disk, 0-indexed in memory):
//   graph:  comment lines `c ...`, one header `p edge <n> <m>`, then
//           <m> lines `e <u> <v>`;
//   tree:   header `p tree <n>`, then n-1 lines `t <u> <v>`;
//   labels: `c instance <path>`, `k <value>`, then one line
//           `v <vertex> <X|Y|Z> <index>` per vertex;
//   order:  one line of whitespace-separated vertex ids;
//   instance JSON:  {"m": <int>, "B": <int>, "a": [<int>...]};
//   partition JSON: {"groups": [[<int>...], ...]} (0-indexed).

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& comments = {});
Graph read_graph_file(const std::string& path);

void write_tree_file(const std::string& path, const SpanningTree& t);
// Tree edges must exist in the accompanying graph.
SpanningTree read_tree_file(const std::string& path, const Graph& host);

struct LabelsFile {
  long long k = 0;
  std::vector<VertexRole> roles;  // by vertex id
  std::string instance_path;      // informational
};

void write_labels_file(const std::string& path, const ReductionArtifact& art,
                       const std::string& instance_path);
LabelsFile read_labels_file(const std::string& path);

void write_order_file(const std::string& path, const std::vector<int>& order);
std::vector<int> read_order_file(const std::string& path);

struct RawInstance {
  long long m = 0;
  long long B = 0;
  std::vector<long long> a;
};

void write_instance_json(const std::string& path, const ThreePartitionInstance& inst);
RawInstance read_instance_json(const std::string& path);

void write_partition_json(const std::string& path, const Partition& p);
Partition read_partition_json(const std::string& path);

// FNV-1a 64-bit fingerprint of a file's bytes, as hex. Used to echo exact
// inputs into run reports.
std::string file_digest(const std::string& path);

}  // namespace stclab
