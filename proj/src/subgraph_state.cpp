#include "linkcomm/subgraph_state.hpp"

#include <string>

namespace linkcomm {

namespace {
// Long greedy runs accumulate rounding error in the incremental sigma;
// a periodic from-scratch refresh bounds the drift well below 1e-9.
constexpr std::uint32_t kRefreshInterval = 4096;
}  // namespace

SubgraphState::SubgraphState(const Graph& g)
    : graph_(&g), links_(g.link_count()), internal_degree_(g.node_count(), 0) {}

SubgraphState::SubgraphState(const Graph& g, const LinkSet& links)
    : graph_(&g), links_(links), internal_degree_(g.node_count(), 0) {
  if (links.universe_size() != g.link_count())
    throw SizeMismatch("link set universe " + std::to_string(links.universe_size()) +
                       " does not match graph with m=" + std::to_string(g.link_count()));
  links_.for_each([&](LinkId k) {
    ++internal_degree_[g.link(k).u];
    ++internal_degree_[g.link(k).v];
  });
  sigma_ = sigma_recomputed();
}

double SubgraphState::tau() const {
  double t = 0.0;
  for (NodeId i = 0; i < internal_degree_.size(); ++i) {
    std::uint32_t in = internal_degree_[i];
    if (in > 0)
      t += static_cast<double>(in) * static_cast<double>(in) / graph_->degree(i);
  }
  return t;
}

double SubgraphState::psi_value(double sigma, std::size_t k_in, std::size_t m) {
  const std::size_t two_m = 2 * m;
  // Psi(empty) = Psi(E) = 1 by the weighted-link limit; avoids 0/0.
  if (k_in == 0 || k_in == two_m) return 1.0;
  const double k = static_cast<double>(k_in);
  return sigma / (k * (1.0 - k / static_cast<double>(two_m)));
}

double SubgraphState::sigma_recomputed() const {
  double s = 0.0;
  for (NodeId i = 0; i < internal_degree_.size(); ++i) {
    std::uint32_t in = internal_degree_[i];
    if (in > 0 && in < graph_->degree(i)) s += node_term(i, in);
  }
  return s;
}

double SubgraphState::link_sigma_delta(LinkId k, ToggleDir dir) const {
  const Link& l = graph_->link(k);
  const int d = dir == ToggleDir::add ? 1 : -1;
  return node_term(l.u, internal_degree_[l.u] + d) - node_term(l.u, internal_degree_[l.u]) +
         node_term(l.v, internal_degree_[l.v] + d) - node_term(l.v, internal_degree_[l.v]);
}

std::pair<double, std::uint32_t> SubgraphState::node_sigma_delta(NodeId v, ToggleDir dir) const {
  const int d = dir == ToggleDir::add ? 1 : -1;
  double delta = 0.0;
  std::uint32_t count = 0;
  // Each neighbor contributes at most one toggled link (simple graph), so the
  // per-endpoint updates below never overlap.
  for (const Graph::Neighbor& nb : graph_->neighbors(v)) {
    const bool toggles = dir == ToggleDir::add
                             ? !links_.contains(nb.link) && in_node_set(nb.node)
                             : links_.contains(nb.link);
    if (!toggles) continue;
    ++count;
    delta += node_term(nb.node, internal_degree_[nb.node] + d) -
             node_term(nb.node, internal_degree_[nb.node]);
  }
  if (count > 0)
    delta += node_term(v, internal_degree_[v] + d * static_cast<int>(count)) -
             node_term(v, internal_degree_[v]);
  return {delta, count};
}

double SubgraphState::delta_psi_link(LinkId k, ToggleDir dir) const {
  const bool member = links_.contains(k);
  if (dir == ToggleDir::add && member)
    throw IllegalToggle("link " + std::to_string(k) + " already in set");
  if (dir == ToggleDir::remove && !member)
    throw IllegalToggle("link " + std::to_string(k) + " not in set");

  double new_sigma = sigma_ + link_sigma_delta(k, dir);
  const std::size_t new_kin = k_in_total() + (dir == ToggleDir::add ? 2 : -2);
  if (new_kin == 0) new_sigma = 0.0;
  return psi_value(new_sigma, new_kin, graph_->link_count()) - psi();
}

std::vector<LinkId> SubgraphState::node_toggle_links(NodeId v, ToggleDir dir) const {
  std::vector<LinkId> toggled;
  for (const Graph::Neighbor& nb : graph_->neighbors(v)) {
    if (dir == ToggleDir::add) {
      if (!links_.contains(nb.link) && in_node_set(nb.node)) toggled.push_back(nb.link);
    } else {
      if (links_.contains(nb.link)) toggled.push_back(nb.link);
    }
  }
  return toggled;
}

double SubgraphState::delta_psi_node(NodeId v, ToggleDir dir) const {
  auto [dsig, count] = node_sigma_delta(v, dir);
  if (count == 0)
    throw IllegalToggle("node " + std::to_string(v) + ": nothing to " +
                        (dir == ToggleDir::add ? "add" : "remove"));
  double new_sigma = sigma_ + dsig;
  const std::size_t delta_kin = 2 * static_cast<std::size_t>(count);
  const std::size_t new_kin =
      dir == ToggleDir::add ? k_in_total() + delta_kin : k_in_total() - delta_kin;
  if (new_kin == 0) new_sigma = 0.0;
  return psi_value(new_sigma, new_kin, graph_->link_count()) - psi();
}

void SubgraphState::toggle_endpoint(NodeId i, int delta) {
  sigma_ += node_term(i, internal_degree_[i] + delta) - node_term(i, internal_degree_[i]);
  internal_degree_[i] += delta;
}

void SubgraphState::count_toggle() {
  if (++toggles_since_refresh_ >= kRefreshInterval) {
    toggles_since_refresh_ = 0;
    refresh_sigma();
  }
  // Both poles have an exactly vanishing node cut.
  if (links_.empty() || links_.size() == links_.universe_size()) sigma_ = 0.0;
}

void SubgraphState::apply_link_toggle(LinkId k, ToggleDir dir) {
  const bool member = links_.contains(k);
  if (dir == ToggleDir::add && member)
    throw IllegalToggle("link " + std::to_string(k) + " already in set");
  if (dir == ToggleDir::remove && !member)
    throw IllegalToggle("link " + std::to_string(k) + " not in set");

  const Link& l = graph_->link(k);
  const int d = dir == ToggleDir::add ? 1 : -1;
  toggle_endpoint(l.u, d);
  toggle_endpoint(l.v, d);
  if (dir == ToggleDir::add)
    links_.insert(k);
  else
    links_.erase(k);
  count_toggle();
}

std::vector<LinkId> SubgraphState::apply_node_toggle(NodeId v, ToggleDir dir) {
  std::vector<LinkId> toggled = node_toggle_links(v, dir);
  if (toggled.empty())
    throw IllegalToggle("node " + std::to_string(v) + ": nothing to " +
                        (dir == ToggleDir::add ? "add" : "remove"));
  const int d = dir == ToggleDir::add ? 1 : -1;
  for (LinkId k : toggled) {
    const Link& l = graph_->link(k);
    NodeId other = l.u == v ? l.v : l.u;
    toggle_endpoint(other, d);
    if (dir == ToggleDir::add)
      links_.insert(k);
    else
      links_.erase(k);
  }
  toggle_endpoint(v, d * static_cast<int>(toggled.size()));
  count_toggle();
  return toggled;
}

}  // namespace linkcomm
