#include "stclab/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stclab {

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

[[noreturn]] void fail_line(const std::string& path, int line, const std::string& msg) {
  throw IoError(path + ":" + std::to_string(line) + ": " + msg);
}

struct EdgeLines {
  int n = 0;
  long long declared = 0;
  std::vector<std::pair<int, int>> pairs;
};

// Shared reader for the `p <kind> ...` edge-list formats.
EdgeLines read_edge_lines(const std::string& path, const std::string& kind,
                          const std::string& edge_tag, bool header_has_count) {
  std::ifstream in = open_in(path);
  EdgeLines data;
  bool saw_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "p") {
      if (saw_header) fail_line(path, lineno, "duplicate header");
      std::string got_kind;
      ss >> got_kind >> data.n;
      if (!ss || got_kind != kind)
        fail_line(path, lineno, "expected `p " + kind + " ...` header");
      if (header_has_count) {
        ss >> data.declared;
        if (!ss) fail_line(path, lineno, "header is missing the edge count");
      }
      saw_header = true;
    } else if (tag == edge_tag) {
      if (!saw_header) fail_line(path, lineno, "edge line before header");
      int u = 0, v = 0;
      ss >> u >> v;
      if (!ss) fail_line(path, lineno, "malformed edge line");
      if (u < 1 || u > data.n || v < 1 || v > data.n)
        fail_line(path, lineno, "vertex id out of range 1.." + std::to_string(data.n));
      data.pairs.emplace_back(u - 1, v - 1);
    } else {
      fail_line(path, lineno, "unknown line tag `" + tag + "`");
    }
  }
  if (!saw_header) throw IoError(path + ": missing `p " + kind + "` header");
  return data;
}

}  // namespace

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& comments) {
  std::ofstream out = open_out(path);
  for (const std::string& c : comments) out << "c " << c << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
  if (!out) throw IoError("failed writing " + path);
}

Graph read_graph_file(const std::string& path) {
  EdgeLines data = read_edge_lines(path, "edge", "e", true);
  if (data.declared != static_cast<long long>(data.pairs.size()))
    throw IoError(path + ": header declares " + std::to_string(data.declared) +
                  " edges, file has " + std::to_string(data.pairs.size()));
  try {
    return Graph::build(data.n, data.pairs);
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_tree_file(const std::string& path, const SpanningTree& t) {
  std::ofstream out = open_out(path);
  out << "p tree " << t.host().vertex_count() << "\n";
  for (const Edge& e : t.edges()) out << "t " << e.u + 1 << " " << e.v + 1 << "\n";
  if (!out) throw IoError("failed writing " + path);
}

SpanningTree read_tree_file(const std::string& path, const Graph& host) {
  EdgeLines data = read_edge_lines(path, "tree", "t", false);
  if (data.n != host.vertex_count())
    throw IoError(path + ": tree is over " + std::to_string(data.n) +
                  " vertices, graph has " + std::to_string(host.vertex_count()));
  std::vector<Edge> edges;
  edges.reserve(data.pairs.size());
  for (const auto& [u, v] : data.pairs) edges.emplace_back(u, v);
  try {
    return SpanningTree(host, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_labels_file(const std::string& path, const ReductionArtifact& art,
                       const std::string& instance_path) {
  std::ofstream out = open_out(path);
  out << "c instance " << instance_path << "\n";
  out << "k " << art.k << "\n";
  for (size_t v = 0; v < art.roles.size(); ++v) {
    const VertexRole& vr = art.roles[v];
    const char* role = vr.role == Role::X ? "X" : vr.role == Role::Y ? "Y" : "Z";
    out << "v " << v + 1 << " " << role << " " << vr.index << "\n";
  }
  if (!out) throw IoError("failed writing " + path);
}

LabelsFile read_labels_file(const std::string& path) {
  std::ifstream in = open_in(path);
  LabelsFile labels;
  bool saw_k = false;
  std::vector<std::pair<long long, VertexRole>> entries;
  long long max_vertex = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") {
      std::string word;
      ss >> word;
      if (word == "instance") ss >> labels.instance_path;
    } else if (tag == "k") {
      ss >> labels.k;
      if (!ss) fail_line(path, lineno, "malformed k line");
      saw_k = true;
    } else if (tag == "v") {
      long long vertex = 0, index = 0;
      std::string role;
      ss >> vertex >> role >> index;
      if (!ss || vertex < 1) fail_line(path, lineno, "malformed v line");
      VertexRole vr;
      if (role == "X")
        vr.role = Role::X;
      else if (role == "Y")
        vr.role = Role::Y;
      else if (role == "Z")
        vr.role = Role::Z;
      else
        fail_line(path, lineno, "unknown role `" + role + "`");
      vr.index = index;
      entries.emplace_back(vertex, vr);
      max_vertex = std::max(max_vertex, vertex);
    } else {
      fail_line(path, lineno, "unknown line tag `" + tag + "`");
    }
  }
  if (!saw_k) throw IoError(path + ": missing k line");
  if (max_vertex != static_cast<long long>(entries.size()))
    throw IoError(path + ": vertex ids are not exactly 1.." +
                  std::to_string(entries.size()));
  labels.roles.assign(entries.size(), {});
  std::vector<char> seen(entries.size(), 0);
  for (const auto& [vertex, vr] : entries) {
    if (seen[vertex - 1]) throw IoError(path + ": duplicate vertex " + std::to_string(vertex));
    seen[vertex - 1] = 1;
    labels.roles[vertex - 1] = vr;
  }
  return labels;
}

void write_order_file(const std::string& path, const std::vector<int>& order) {
  std::ofstream out = open_out(path);
  for (size_t i = 0; i < order.size(); ++i)
    out << (i ? " " : "") << order[i] + 1;
  out << "\n";
  if (!out) throw IoError("failed writing " + path);
}

std::vector<int> read_order_file(const std::string& path) {
  std::ifstream in = open_in(path);
  std::vector<int> order;
  long long v = 0;
  while (in >> v) {
    if (v < 1) throw IoError(path + ": vertex ids must be positive");
    order.push_back(static_cast<int>(v - 1));
  }
  if (!in.eof()) throw IoError(path + ": trailing garbage in order file");
  return order;
}

void write_instance_json(const std::string& path, const ThreePartitionInstance& inst) {
  nlohmann::json j;
  j["m"] = inst.m;
  j["B"] = inst.B;
  j["a"] = inst.a;
  std::ofstream out = open_out(path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("failed writing " + path);
}

RawInstance read_instance_json(const std::string& path) {
  std::ifstream in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("B") || !j.contains("a") ||
      !j["m"].is_number_integer() || !j["B"].is_number_integer() || !j["a"].is_array())
    throw IoError(path + R"(: expected {"m": int, "B": int, "a": [int...]})");
  RawInstance raw;
  raw.m = j["m"].get<long long>();
  raw.B = j["B"].get<long long>();
  for (const auto& v : j["a"]) {
    if (!v.is_number_integer()) throw IoError(path + ": a must hold integers");
    raw.a.push_back(v.get<long long>());
  }
  return raw;
}

void write_partition_json(const std::string& path, const Partition& p) {
  nlohmann::json j;
  j["groups"] = p.groups;
  std::ofstream out = open_out(path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("failed writing " + path);
}

Partition read_partition_json(const std::string& path) {
  std::ifstream in = open_in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
    throw IoError(path + R"(: expected {"groups": [[int...], ...]})");
  Partition p;
  for (const auto& group : j["groups"]) {
    if (!group.is_array()) throw IoError(path + ": groups must be arrays");
    std::vector<int> g;
    for (const auto& v : group) {
      if (!v.is_number_integer()) throw IoError(path + ": group entries must be integers");
      g.push_back(v.get<int>());
    }
    p.groups.push_back(std::move(g));
  }
  return p;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for digest");
  std::uint64_t hash = 1469598103934665603ULL;  // FNV-1a offset basis
  char buf[4096];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 1099511628211ULL;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(hex);
}

}  // namespace stclab
