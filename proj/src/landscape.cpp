#include "linkcomm/landscape.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "linkcomm/subgraph_state.hpp"

namespace linkcomm {

Landscape::Landscape(const Graph& g, std::vector<double> psi, std::vector<std::uint8_t> connected)
    : graph_(&g), m_(g.link_count()), psi_(std::move(psi)), connected_(std::move(connected)) {}

LandscapePlace Landscape::place(std::uint32_t mask) const {
  return {linkset_of(mask), psi_[mask], connected(mask),
          static_cast<std::size_t>(std::popcount(mask))};
}

LinkSet Landscape::linkset_of(std::uint32_t mask) const {
  LinkSet l(m_);
  while (mask) {
    l.insert(static_cast<LinkId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return l;
}

std::uint32_t Landscape::mask_of(const LinkSet& l) const {
  if (l.universe_size() != m_) throw SizeMismatch("link set does not match landscape graph");
  std::uint32_t mask = 0;
  l.for_each([&](LinkId k) { mask |= 1u << k; });
  return mask;
}

std::vector<std::uint32_t> Landscape::masks_in_latitude_order() const {
  std::vector<std::uint32_t> masks(place_count());
  for (std::uint32_t i = 0; i < masks.size(); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });
  return masks;
}

Landscape enumerate_landscape(const Graph& g) {
  const std::size_t m = g.link_count();
  if (m > kMaxEnumerableLinks)
    throw TooLarge("graph has m=" + std::to_string(m) + " links; enumeration is limited to " +
                   std::to_string(kMaxEnumerableLinks));
  const std::size_t n = g.node_count();
  const std::size_t places = std::size_t{1} << m;

  std::vector<double> psi(places);
  std::vector<std::uint8_t> connected(places);

  // Reflected-Gray-code walk: one link toggles per step, the internal-degree
  // array is updated with exact integer arithmetic, and sigma is summed
  // afresh per place in fixed node order (path-independent values).
  std::vector<std::uint32_t> in_degree(n, 0);
  auto sigma_of = [&]() {
    double s = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      std::uint32_t in = in_degree[i];
      if (in > 0 && in < g.degree(i))
        s += static_cast<double>(in) * static_cast<double>(g.degree(i) - in) / g.degree(i);
    }
    return s;
  };

  std::vector<NodeId> uf_parent(n);
  auto uf_find = [&](NodeId x) {
    while (uf_parent[x] != x) {
      uf_parent[x] = uf_parent[uf_parent[x]];
      x = uf_parent[x];
    }
    return x;
  };
  auto connected_of = [&](std::uint32_t mask) {
    if (mask == 0) return false;  // empty set is not connected by convention
    for (NodeId i = 0; i < n; ++i) uf_parent[i] = i;
    std::uint32_t bits = mask;
    while (bits) {
      const Link& l = g.link(static_cast<LinkId>(std::countr_zero(bits)));
      NodeId a = uf_find(l.u), b = uf_find(l.v);
      if (a != b) uf_parent[std::max(a, b)] = std::min(a, b);
      bits &= bits - 1;
    }
    NodeId root = uf_find(g.link(static_cast<LinkId>(std::countr_zero(mask))).u);
    bits = mask;
    while (bits) {
      const Link& l = g.link(static_cast<LinkId>(std::countr_zero(bits)));
      if (uf_find(l.u) != root) return false;
      bits &= bits - 1;
    }
    return true;
  };

  std::uint32_t mask = 0;
  std::size_t size = 0;
  psi[0] = 1.0;
  connected[0] = 0;
  for (std::size_t i = 1; i < places; ++i) {
    const LinkId bit = static_cast<LinkId>(std::countr_zero(i));
    const std::uint32_t flipped = 1u << bit;
    mask ^= flipped;
    const Link& l = g.link(bit);
    if (mask & flipped) {
      ++in_degree[l.u];
      ++in_degree[l.v];
      ++size;
    } else {
      --in_degree[l.u];
      --in_degree[l.v];
      --size;
    }
    psi[mask] = SubgraphState::psi_value(sigma_of(), 2 * size, m);
    connected[mask] = connected_of(mask) ? 1 : 0;
  }

  return Landscape(g, std::move(psi), std::move(connected));
}

bool is_local_minimum(const Landscape& ls, std::uint32_t mask) {
  if (mask == 0 || mask == ls.full_mask()) return false;
  if (!ls.connected(mask)) return false;
  const double here = ls.psi(mask);
  for (std::size_t k = 0; k < ls.link_count(); ++k)
    if (psi_less(ls.psi(mask ^ (1u << k)), here)) return false;
  return true;
}

std::vector<CommunityRecord> local_minima(const Landscape& ls) {
  std::vector<CommunityRecord> out;
  for (std::uint32_t mask = 1; mask < ls.full_mask(); ++mask) {
    if (!is_local_minimum(ls, mask)) continue;
    LinkSet links = ls.linkset_of(mask);
    std::size_t range = exact_range(ls, links);
    out.push_back({std::move(links), ls.psi(mask), range, true});
  }
  std::sort(out.begin(), out.end(), [&](const CommunityRecord& a, const CommunityRecord& b) {
    if (a.psi != b.psi) return a.psi < b.psi;
    return linkset_less(a.links, b.links);
  });
  return out;
}

std::size_t exact_range(const Landscape& ls, const LinkSet& community) {
  const std::uint32_t mask = ls.mask_of(community);
  const double here = ls.psi(mask);
  std::size_t best = range_sentinel(ls.graph());
  for (std::uint32_t s = 0; s < ls.place_count(); ++s) {
    if (!psi_less(ls.psi(s), here)) continue;
    std::size_t d = static_cast<std::size_t>(std::popcount(s ^ mask));
    best = std::min(best, d);
  }
  return best;
}

VerifyReport verify_search_result(const Graph& g, const std::vector<CommunityRecord>& found,
                                  const std::vector<CommunityRecord>& oracle) {
  VerifyReport report;
  std::vector<bool> oracle_hit(oracle.size(), false);

  for (const CommunityRecord& f : found) {
    std::size_t match = oracle.size();
    std::size_t nearest = g.link_count() + 1;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      std::size_t d = symmetric_difference_distance(f.links, oracle[i].links);
      nearest = std::min(nearest, d);
      if (d == 0) match = i;
    }
    if (match < oracle.size()) {
      oracle_hit[match] = true;
      report.matched.push_back({f.links, f.psi, 0});
      report.max_psi_discrepancy =
          std::max(report.max_psi_discrepancy, std::abs(f.psi - oracle[match].psi));
    } else {
      report.spurious.push_back({f.links, f.psi, nearest});
    }
  }
  for (std::size_t i = 0; i < oracle.size(); ++i)
    if (!oracle_hit[i]) report.missed.push_back({oracle[i].links, oracle[i].psi, 0});
  return report;
}

}  // namespace linkcomm
