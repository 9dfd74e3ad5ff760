#include "linkcomm/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <string>

namespace linkcomm {

namespace {
constexpr std::uint32_t kNoPosition = ~std::uint32_t{0};

MoveDir flip(MoveDir d) { return d == MoveDir::include ? MoveDir::exclude : MoveDir::include; }

MoveDir first_dir(StartDirection s) {
  return s == StartDirection::include_first ? MoveDir::include : MoveDir::exclude;
}
}  // namespace

void Resolution::validate() const {
  if (kind == Kind::relative) {
    if (!(value > 0.0 && value < 1.0))
      throw InvalidConfig("relative resolution must be in (0,1), got " + std::to_string(value));
  } else {
    if (!(value >= 1.0) || value != std::floor(value))
      throw InvalidConfig("absolute resolution must be an integer >= 1, got " +
                          std::to_string(value));
  }
}

std::size_t Resolution::minimal_range(std::size_t community_size) const {
  if (kind == Kind::absolute) return static_cast<std::size_t>(value);
  std::size_t r = static_cast<std::size_t>(
      std::ceil(value * static_cast<double>(community_size)));
  return std::max<std::size_t>(r, 1);
}

// --- CandidateMoves ---------------------------------------------------------

CandidateMoves::CandidateMoves(const SubgraphState& s, SearchMode kind, MoveDir dir)
    : kind_(kind), dir_(dir) {
  const std::size_t universe =
      kind == SearchMode::link_wise ? s.graph().link_count() : s.graph().node_count();
  position_.assign(universe, kNoPosition);
  delta_sigma_.assign(universe, 0.0);
  toggled_.assign(universe, 0);
  rebuild(s);
}

bool CandidateMoves::link_is_candidate(const SubgraphState& s, LinkId k) const {
  const Link& l = s.graph().link(k);
  if (dir_ == MoveDir::include)
    return !s.links().contains(k) && (s.in_node_set(l.u) || s.in_node_set(l.v));
  if (!s.links().contains(k)) return false;
  if (full_set_special_) return true;
  return s.is_boundary(l.u) || s.is_boundary(l.v);
}

bool CandidateMoves::node_is_candidate(const SubgraphState& s, NodeId v) const {
  if (dir_ == MoveDir::include) {
    for (const Graph::Neighbor& nb : s.graph().neighbors(v))
      if (!s.links().contains(nb.link) && s.in_node_set(nb.node)) return true;
    return false;
  }
  if (full_set_special_) return s.in_node_set(v);
  return s.is_boundary(v);
}

void CandidateMoves::activate(std::uint32_t id) {
  if (position_[id] != kNoPosition) return;
  position_[id] = static_cast<std::uint32_t>(active_.size());
  active_.push_back(id);
}

void CandidateMoves::deactivate(std::uint32_t id) {
  std::uint32_t pos = position_[id];
  if (pos == kNoPosition) return;
  std::uint32_t last = active_.back();
  active_[pos] = last;
  position_[last] = pos;
  active_.pop_back();
  position_[id] = kNoPosition;
}

void CandidateMoves::reevaluate(const SubgraphState& s, std::uint32_t id) {
  if (kind_ == SearchMode::link_wise) {
    if (!link_is_candidate(s, static_cast<LinkId>(id))) {
      deactivate(id);
      return;
    }
    activate(id);
    ToggleDir t = dir_ == MoveDir::include ? ToggleDir::add : ToggleDir::remove;
    delta_sigma_[id] = s.link_sigma_delta(static_cast<LinkId>(id), t);
    toggled_[id] = 1;
  } else {
    if (!node_is_candidate(s, static_cast<NodeId>(id))) {
      deactivate(id);
      return;
    }
    activate(id);
    ToggleDir t = dir_ == MoveDir::include ? ToggleDir::add : ToggleDir::remove;
    auto [dsig, count] = s.node_sigma_delta(static_cast<NodeId>(id), t);
    delta_sigma_[id] = dsig;
    toggled_[id] = count;
  }
}

void CandidateMoves::rebuild(const SubgraphState& s) {
  for (std::uint32_t id : active_) position_[id] = kNoPosition;
  active_.clear();
  full_set_special_ =
      dir_ == MoveDir::exclude && s.k_in_total() == 2 * s.graph().link_count();
  const std::size_t universe = position_.size();
  for (std::uint32_t id = 0; id < universe; ++id) reevaluate(s, id);
}

void CandidateMoves::update_after_link_toggle(const SubgraphState& s, LinkId k) {
  const bool special_now =
      dir_ == MoveDir::exclude && s.k_in_total() == 2 * s.graph().link_count();
  if (special_now != full_set_special_) {
    rebuild(s);
    return;
  }
  const Link& l = s.graph().link(k);
  if (kind_ == SearchMode::link_wise) {
    for (NodeId endpoint : {l.u, l.v})
      for (const Graph::Neighbor& nb : s.graph().neighbors(endpoint)) reevaluate(s, nb.link);
  } else {
    for (NodeId endpoint : {l.u, l.v}) {
      reevaluate(s, endpoint);
      for (const Graph::Neighbor& nb : s.graph().neighbors(endpoint)) reevaluate(s, nb.node);
    }
  }
}

void CandidateMoves::update_after_node_toggle(const SubgraphState& s, NodeId v,
                                              const std::vector<LinkId>& toggled) {
  const bool special_now =
      dir_ == MoveDir::exclude && s.k_in_total() == 2 * s.graph().link_count();
  if (special_now != full_set_special_ || kind_ == SearchMode::link_wise) {
    rebuild(s);
    return;
  }
  // Candidacy and cached deltas of a node depend on its own and its
  // neighbors' internal degrees, which changed exactly at v and at the other
  // endpoints of the toggled links.
  std::vector<NodeId> affected;
  affected.push_back(v);
  for (LinkId k : toggled) {
    const Link& l = s.graph().link(k);
    affected.push_back(l.u == v ? l.v : l.u);
  }
  for (NodeId a : affected) {
    reevaluate(s, a);
    for (const Graph::Neighbor& nb : s.graph().neighbors(a)) reevaluate(s, nb.node);
  }
}

std::optional<CandidateMoves::Best> CandidateMoves::best(const SubgraphState& s) const {
  std::optional<Best> out;
  const double sigma = s.sigma();
  const std::size_t kin = s.k_in_total();
  const std::size_t m = s.graph().link_count();
  const double here = s.psi();
  for (std::uint32_t id : active_) {
    const std::size_t dk = 2 * static_cast<std::size_t>(toggled_[id]);
    std::size_t new_kin;
    if (dir_ == MoveDir::include) {
      new_kin = kin + dk;
    } else {
      if (dk >= kin) continue;  // never empty the subgraph
      new_kin = kin - dk;
    }
    double new_sigma = sigma + delta_sigma_[id];
    double delta = SubgraphState::psi_value(new_sigma, new_kin, m) - here;
    if (!out || delta < out->delta_psi || (delta == out->delta_psi && id < out->id))
      out = Best{id, delta, toggled_[id]};
  }
  return out;
}

std::vector<std::pair<std::uint32_t, double>> CandidateMoves::entries(
    const SubgraphState& s) const {
  std::vector<std::pair<std::uint32_t, double>> out;
  out.reserve(active_.size());
  const double sigma = s.sigma();
  const std::size_t kin = s.k_in_total();
  const std::size_t m = s.graph().link_count();
  const double here = s.psi();
  for (std::uint32_t id : active_) {
    const std::size_t dk = 2 * static_cast<std::size_t>(toggled_[id]);
    std::size_t new_kin = dir_ == MoveDir::include ? kin + dk : kin - dk;
    double new_sigma = sigma + delta_sigma_[id];
    if (new_kin == 0) new_sigma = 0.0;
    out.emplace_back(id, SubgraphState::psi_value(new_sigma, new_kin, m) - here);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Greedy phases ----------------------------------------------------------

PhaseOutcome greedy_phase(SubgraphState& state, MoveDir dir, const AdaptationConfig& cfg) {
  SubgraphState best = state;
  double best_psi = state.psi();
  const double entry_psi = best_psi;
  CandidateMoves cand(state, cfg.mode, dir);
  std::size_t steps = 0;
  std::size_t uphill = 0;

  while (true) {
    auto mv = cand.best(state);
    if (!mv) break;
    // Pure greedy shortcut: without tunnel budget a non-improving best move
    // ends the phase immediately.
    if (cfg.resolution.max_tunnel(best.links().size()) == 0 && mv->delta_psi >= -kPsiTieEps)
      break;

    std::size_t moved_links = mv->toggled_links;
    if (cfg.mode == SearchMode::link_wise) {
      ToggleDir t = dir == MoveDir::include ? ToggleDir::add : ToggleDir::remove;
      state.apply_link_toggle(static_cast<LinkId>(mv->id), t);
      cand.update_after_link_toggle(state, static_cast<LinkId>(mv->id));
    } else {
      ToggleDir t = dir == MoveDir::include ? ToggleDir::add : ToggleDir::remove;
      std::vector<LinkId> toggled = state.apply_node_toggle(static_cast<NodeId>(mv->id), t);
      if (dir == MoveDir::exclude && !state.graph().is_connected(state.links())) {
        // Node-wise searches proceed with the main component; the dropped
        // links count toward the distance walked.
        LinkSet main = state.graph().main_component(state.links());
        moved_links += state.links().size() - main.size();
        state = SubgraphState(state.graph(), main);
        cand = CandidateMoves(state, cfg.mode, dir);
      } else {
        cand.update_after_node_toggle(state, static_cast<NodeId>(mv->id), toggled);
      }
    }
    ++steps;

    const double now = state.psi();
    if (psi_less(now, best_psi)) {
      best = state;
      best_psi = now;
      uphill = 0;
    } else {
      uphill += moved_links;
      if (uphill > cfg.resolution.max_tunnel(best.links().size())) break;
    }
  }

  state = best;
  return {psi_less(best_psi, entry_psi), steps};
}

namespace {

struct CoreResult {
  SubgraphState state;
  std::size_t steps = 0;
};

// Alternating greedy phases; link-wise searches additionally settle the full
// distance-1 neighborhood so the result is a local minimum of the landscape,
// not only of the restricted (adjacent-include / boundary-exclude) move set.
CoreResult adapt_core(SubgraphState state, const AdaptationConfig& cfg) {
  std::size_t steps = 0;
  while (true) {
    MoveDir dir = first_dir(cfg.start_direction);
    int stale_phases = 0;
    while (stale_phases < 2) {
      PhaseOutcome out = greedy_phase(state, dir, cfg);
      steps += out.steps;
      stale_phases = out.improved ? 0 : stale_phases + 1;
      dir = flip(dir);
    }
    if (cfg.mode != SearchMode::link_wise) break;

    const double here = state.psi();
    std::optional<LinkId> pick;
    double pick_delta = 0.0;
    for (LinkId k = 0; k < state.graph().link_count(); ++k) {
      ToggleDir t = state.links().contains(k) ? ToggleDir::remove : ToggleDir::add;
      if (t == ToggleDir::remove && state.links().size() == 1) continue;
      double delta = state.delta_psi_link(k, t);
      if (psi_less(here + delta, here) && (!pick || delta < pick_delta)) {
        pick = k;
        pick_delta = delta;
      }
    }
    if (!pick) break;
    state.apply_link_toggle(*pick,
                            state.links().contains(*pick) ? ToggleDir::remove : ToggleDir::add);
    ++steps;
  }
  return {std::move(state), steps};
}

bool state_less(const SubgraphState& a, const SubgraphState& b) {
  if (a.psi() != b.psi()) return a.psi() < b.psi();
  return linkset_less(a.links(), b.links());
}

std::vector<SubgraphState> resolve_fragments(const SubgraphState& state,
                                             const AdaptationConfig& cfg, std::size_t* steps) {
  const Graph& g = state.graph();
  std::deque<LinkSet> queue;
  for (LinkSet& comp : g.components(state.links())) queue.push_back(std::move(comp));

  // Re-adapted components can grow and re-fragment, so termination is
  // guaranteed by never adapting the same component twice rather than by a
  // shrinking size argument.
  auto order = [](const LinkSet& a, const LinkSet& b) { return linkset_less(a, b); };
  std::set<LinkSet, decltype(order)> visited(order);
  std::set<LinkSet, decltype(order)> emitted(order);
  std::vector<SubgraphState> results;

  while (!queue.empty()) {
    LinkSet part = std::move(queue.front());
    queue.pop_front();
    if (!visited.insert(part).second) {
      if (emitted.insert(part).second) results.emplace_back(g, part);
      continue;
    }
    CoreResult core = adapt_core(SubgraphState(g, part), cfg);
    if (steps) *steps += core.steps;
    if (g.is_connected(core.state.links())) {
      if (emitted.insert(core.state.links()).second) results.push_back(std::move(core.state));
    } else {
      for (LinkSet& comp : g.components(core.state.links())) queue.push_back(std::move(comp));
    }
  }

  std::sort(results.begin(), results.end(), state_less);
  return results;
}

}  // namespace

AdaptationResult adapt(const SubgraphState& seed, const AdaptationConfig& cfg) {
  cfg.resolution.validate();
  if (seed.links().empty()) throw EmptySeed("adaptation requires a nonempty seed");
  const Graph& g = seed.graph();

  SubgraphState start = g.is_connected(seed.links())
                            ? seed
                            : SubgraphState(g, g.main_component(seed.links()));
  CoreResult core = adapt_core(std::move(start), cfg);
  std::size_t steps = core.steps;

  if (g.is_connected(core.state.links())) {
    double psi = core.state.psi();
    return {std::move(core.state), psi, steps, false, {}};
  }

  std::vector<SubgraphState> parts = resolve_fragments(core.state, cfg, &steps);
  AdaptationResult result{std::move(parts.front()), 0.0, steps, true, {}};
  result.psi = result.community.psi();
  for (std::size_t i = 1; i < parts.size(); ++i)
    result.components_spawned.push_back(parts[i].links());
  return result;
}

std::vector<SubgraphState> handle_fragmentation(const SubgraphState& state,
                                                const AdaptationConfig& cfg) {
  if (state.graph().is_connected(state.links())) return {state};
  if (state.links().empty()) throw EmptySet("cannot split an empty subgraph");
  return resolve_fragments(state, cfg, nullptr);
}

}  // namespace linkcomm
