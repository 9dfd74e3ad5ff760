#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linkcomm/subgraph_state.hpp"

namespace linkcomm {

enum class SearchMode { node_wise, link_wise };
enum class MoveDir { include, exclude };
enum class StartDirection { include_first, exclude_first };

/// Search resolution: the minimal range a community must have to count as a
/// valid result, either as an absolute link count or relative to the
/// community size.
struct Resolution {
  enum class Kind { absolute, relative };
  Kind kind = Kind::relative;
  double value = 0.1;

  void validate() const;

  /// Minimal range demanded of a community of the given size (>= 1).
  std::size_t minimal_range(std::size_t community_size) const;

  /// Tunnel budget protecting a community of the given size: uphill walks
  /// shorter than the minimal range cannot invalidate it.
  std::size_t max_tunnel(std::size_t community_size) const {
    return minimal_range(community_size) - 1;
  }
};

struct AdaptationConfig {
  SearchMode mode = SearchMode::link_wise;
  Resolution resolution;
  StartDirection start_direction = StartDirection::include_first;
};

struct AdaptationResult {
  SubgraphState community;  // connected local optimum, best state visited
  double psi;
  std::size_t steps_taken;               // applied moves, including rolled-back ones
  bool fragmented;                       // the walk left a fragmented state at some point
  std::vector<LinkSet> components_spawned;  // other connected optima from fragmentation
};

/// Incrementally maintained candidate moves for one search direction. Each
/// entry caches the sigma and k_in change of its move; after a move only
/// entries touching the moved element are re-derived, and the Psi deltas are
/// formed from the cached values plus the current global (sigma, k_in).
class CandidateMoves {
 public:
  CandidateMoves(const SubgraphState& s, SearchMode kind, MoveDir dir);

  /// Call after the corresponding toggle has been applied to the state.
  void update_after_link_toggle(const SubgraphState& s, LinkId k);
  void update_after_node_toggle(const SubgraphState& s, NodeId v,
                                const std::vector<LinkId>& toggled);

  struct Best {
    std::uint32_t id;  // link or node ID depending on the kind
    double delta_psi;
    std::size_t toggled_links;
  };

  /// Lowest-delta legal move; ties break toward the smallest ID. Moves that
  /// would empty the subgraph are skipped.
  std::optional<Best> best(const SubgraphState& s) const;

  /// Current (id, delta_psi) entries, ascending by ID. Test support.
  std::vector<std::pair<std::uint32_t, double>> entries(const SubgraphState& s) const;

  std::size_t size() const { return active_.size(); }
  SearchMode kind() const { return kind_; }
  MoveDir dir() const { return dir_; }

 private:
  void rebuild(const SubgraphState& s);
  void reevaluate(const SubgraphState& s, std::uint32_t id);
  bool link_is_candidate(const SubgraphState& s, LinkId k) const;
  bool node_is_candidate(const SubgraphState& s, NodeId v) const;
  double delta_psi_of(const SubgraphState& s, std::uint32_t id) const;
  void activate(std::uint32_t id);
  void deactivate(std::uint32_t id);

  SearchMode kind_;
  MoveDir dir_;
  bool full_set_special_ = false;  // L = E has no boundary; all members are candidates
  std::vector<std::uint32_t> active_;       // candidate IDs, unordered
  std::vector<std::uint32_t> position_;     // id -> index in active_, or npos
  std::vector<double> delta_sigma_;         // id -> cached sigma change
  std::vector<std::uint32_t> toggled_;      // id -> number of links the move toggles
};

/// One greedy phase in the given direction, starting and ending at the
/// incumbent best state: repeatedly applies the best move, tunneling through
/// at most max_tunnel non-improving landscape steps, then rolls back to the
/// best state seen. Returns whether the best state improved. Direction
/// alternation is the caller's job.
struct PhaseOutcome {
  bool improved;
  std::size_t steps;
};
PhaseOutcome greedy_phase(SubgraphState& state, MoveDir dir, const AdaptationConfig& cfg);

/// Deterministic greedy local search. An unconnected seed is first replaced
/// by its main component. Alternates inclusion and exclusion phases until
/// neither improves; link-wise searches additionally settle the full
/// distance-1 neighborhood, so their results are genuine local minima of the
/// landscape, and fragmented end states are split into separately re-adapted
/// connected optima.
AdaptationResult adapt(const SubgraphState& seed, const AdaptationConfig& cfg);

/// Splits an unconnected state into components and re-adapts each until only
/// connected optima remain. Connected input is returned unchanged.
std::vector<SubgraphState> handle_fragmentation(const SubgraphState& state,
                                                const AdaptationConfig& cfg);

}  // namespace linkcomm
