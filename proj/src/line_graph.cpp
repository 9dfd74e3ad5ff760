#include "linkcomm/line_graph.hpp"

namespace linkcomm {

LineGraph::LineGraph(const Graph& g) {
  const std::size_t m = g.link_count();
  const std::size_t n = g.node_count();

  node_weights_.resize(n);
  for (NodeId i = 0; i < n; ++i) node_weights_[i] = 1.0 / g.degree(i);

  diagonal_.resize(m);
  for (LinkId k = 0; k < m; ++k)
    diagonal_[k] = node_weights_[g.link(k).u] + node_weights_[g.link(k).v];

  // Two distinct links share at most one node, so every off-diagonal E_kl is
  // a single 1/k_i term. Row k holds all links adjacent to k.
  std::vector<std::size_t> row_size(m, 0);
  for (LinkId k = 0; k < m; ++k) {
    const Link& l = g.link(k);
    row_size[k] = (g.degree(l.u) - 1) + (g.degree(l.v) - 1);
  }
  offsets_.assign(m + 1, 0);
  for (LinkId k = 0; k < m; ++k) offsets_[k + 1] = offsets_[k] + row_size[k];
  entries_.resize(offsets_[m]);

  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (LinkId k = 0; k < m; ++k) {
    const Link& l = g.link(k);
    for (NodeId endpoint : {l.u, l.v})
      for (const Graph::Neighbor& nb : g.neighbors(endpoint))
        if (nb.link != k) entries_[cursor[k]++] = {nb.link, node_weights_[endpoint]};
  }
}

double LineGraph::cut(const LinkSet& l) const {
  double total = 0.0;
  l.for_each([&](LinkId k) {
    for (const Entry& e : row(k))
      if (!l.contains(e.other)) total += e.weight;
  });
  return total;
}

double LineGraph::quadratic_form(const LinkSet& l) const {
  double total = 0.0;
  l.for_each([&](LinkId k) {
    total += diagonal_[k];
    for (const Entry& e : row(k))
      if (l.contains(e.other)) total += e.weight;
  });
  return total;
}

}  // namespace linkcomm
