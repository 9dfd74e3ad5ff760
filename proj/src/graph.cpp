#include "linkcomm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace linkcomm {

std::size_t symmetric_difference_distance(const LinkSet& a, const LinkSet& b) {
  if (a.universe_size() != b.universe_size())
    throw SizeMismatch("symmetric difference of sets over different universes");
  std::size_t d = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    d += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return d;
}

bool linkset_less(const LinkSet& a, const LinkSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i)
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  return false;
}

namespace {

// Union-find over node IDs, path halving.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<NodeId> parent_;
};

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  if (edges.empty()) throw EmptyInput("edge list is empty");

  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Link> links;
  links.reserve(edges.size());

  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::unordered_map<std::uint64_t, bool> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [lu, lv] : edges) {
    NodeId u = intern(lu);
    NodeId v = intern(lv);
    if (u == v) throw SelfLoop("self-loop at node '" + lu + "'");
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.emplace(key, true).second)
      throw DuplicateEdge("duplicate edge '" + lu + " " + lv + "'");
    links.push_back({u, v});
  }

  Graph g;
  g.build(std::move(links), std::move(labels));
  return g;
}

Graph Graph::from_stream(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream tokens(line);
    std::string u, v, extra;
    if (!(tokens >> u >> v))
      throw EmptyInput("line " + std::to_string(lineno) + ": expected two node labels");
    if (tokens >> extra)
      throw EmptyInput("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    edges.emplace_back(std::move(u), std::move(v));
  }
  return from_edges(edges);
}

Graph Graph::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return from_stream(in);
}

void Graph::build(std::vector<Link> links, std::vector<std::string> labels) {
  links_ = std::move(links);
  labels_ = std::move(labels);
  const std::size_t n = labels_.size();

  degree_.assign(n, 0);
  for (const Link& l : links_) {
    ++degree_[l.u];
    ++degree_[l.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (LinkId k = 0; k < links_.size(); ++k) {
    const Link& l = links_[k];
    adjacency_[cursor[l.u]++] = {l.v, k};
    adjacency_[cursor[l.v]++] = {l.u, k};
  }

  DisjointSet ds(n);
  for (const Link& l : links_) ds.unite(l.u, l.v);
  NodeId root = ds.find(0);
  for (NodeId i = 1; i < n; ++i)
    if (ds.find(i) != root)
      throw DisconnectedGraph("input graph is not connected (node '" + labels_[i] +
                              "' unreachable from '" + labels_[0] + "')");
}

bool Graph::is_connected(const LinkSet& l) const {
  if (l.empty()) return false;
  DisjointSet ds(node_count());
  l.for_each([&](LinkId k) { ds.unite(links_[k].u, links_[k].v); });
  NodeId root = ~NodeId{0};
  bool connected = true;
  l.for_each([&](LinkId k) {
    NodeId r = ds.find(links_[k].u);
    if (root == ~NodeId{0}) root = r;
    if (r != root) connected = false;
  });
  return connected;
}

std::vector<LinkSet> Graph::components(const LinkSet& l) const {
  std::vector<LinkSet> out;
  if (l.empty()) return out;

  DisjointSet ds(node_count());
  l.for_each([&](LinkId k) { ds.unite(links_[k].u, links_[k].v); });

  std::unordered_map<NodeId, std::size_t> index;
  l.for_each([&](LinkId k) {
    NodeId r = ds.find(links_[k].u);
    auto [it, inserted] = index.emplace(r, out.size());
    if (inserted) out.emplace_back(l.universe_size());
    out[it->second].insert(k);
  });

  // Components were created in ascending order of their smallest link, so a
  // stable sort by size keeps the documented tie rule.
  std::stable_sort(out.begin(), out.end(),
                   [](const LinkSet& a, const LinkSet& b) { return a.size() > b.size(); });
  return out;
}

LinkSet Graph::main_component(const LinkSet& l) const {
  if (l.empty()) throw EmptySet("main component of an empty link set");
  return components(l).front();
}

}  // namespace linkcomm
