#pragma once

#include <cstdint>
#include <vector>

#include "linkcomm/graph.hpp"

namespace linkcomm {

enum class ToggleDir { add, remove };

/// Comparison margin for Psi values. Two places whose Psi differ by no more
/// than this are treated as a plateau everywhere (greedy improvement,
/// local-minimum tests, selection), so the search and the enumeration oracle
/// resolve exact ties identically.
inline constexpr double kPsiTieEps = 1e-12;

inline bool psi_less(double a, double b) { return a < b - kPsiTieEps; }

/// A link set together with the cached per-node internal degrees and the
/// cached node cut sigma(L). This is the unit the searches mutate: single
/// link or node toggles update sigma in O(1) / O(deg) instead of O(n).
class SubgraphState {
 public:
  explicit SubgraphState(const Graph& g);
  SubgraphState(const Graph& g, const LinkSet& links);

  const Graph& graph() const { return *graph_; }
  const LinkSet& links() const { return links_; }
  std::uint32_t internal_degree(NodeId i) const { return internal_degree_[i]; }

  /// i is in C(L), the node set of the link-induced subgraph.
  bool in_node_set(NodeId i) const { return internal_degree_[i] > 0; }

  /// i has both internal and external links.
  bool is_boundary(NodeId i) const {
    return internal_degree_[i] > 0 && internal_degree_[i] < graph_->degree(i);
  }

  std::size_t k_in_total() const { return 2 * links_.size(); }

  /// Node cut sigma(L) = sum over boundary nodes of k_in * k_out / k.
  double sigma() const { return sigma_; }

  /// Internal connectivity tau(L) = sum of (k_in)^2 / k, recomputed from the
  /// internal degrees (kept independent of sigma so the conservation law
  /// sigma + tau = 2|L| stays a real check).
  double tau() const;

  /// Ratio node-cut of the current set; exactly 1 for the empty and the full
  /// link set.
  double psi() const { return psi_value(sigma_, k_in_total(), graph_->link_count()); }

  static double psi_value(double sigma, std::size_t k_in, std::size_t m);

  /// Sigma change of a single link toggle. The caller is responsible for the
  /// move's legality.
  double link_sigma_delta(LinkId k, ToggleDir dir) const;

  /// Sigma change and toggled-link count of a node move.
  std::pair<double, std::uint32_t> node_sigma_delta(NodeId v, ToggleDir dir) const;

  /// Psi(L') - Psi(L) for toggling one link, without mutating the state.
  double delta_psi_link(LinkId k, ToggleDir dir) const;

  /// Links a node move would toggle: for `add`, all absent links between v
  /// and C(L); for `remove`, all links of L attached to v.
  std::vector<LinkId> node_toggle_links(NodeId v, ToggleDir dir) const;

  /// Psi change of the node move, computed from the endpoints' terms only.
  double delta_psi_node(NodeId v, ToggleDir dir) const;

  void apply_link_toggle(LinkId k, ToggleDir dir);

  /// Applies the node move and returns the toggled links.
  std::vector<LinkId> apply_node_toggle(NodeId v, ToggleDir dir);

  /// From-scratch sigma over the internal-degree array.
  double sigma_recomputed() const;
  void refresh_sigma() { sigma_ = sigma_recomputed(); }

 private:
  double node_term(NodeId i, std::uint32_t in) const {
    return static_cast<double>(in) *
           static_cast<double>(graph_->degree(i) - in) / graph_->degree(i);
  }

  void toggle_endpoint(NodeId i, int delta);
  void count_toggle();

  const Graph* graph_;
  LinkSet links_;
  std::vector<std::uint32_t> internal_degree_;
  double sigma_ = 0.0;
  std::uint32_t toggles_since_refresh_ = 0;
};

}  // namespace linkcomm
