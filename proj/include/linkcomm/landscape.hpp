#pragma once

#include <cstdint>
#include <vector>

#include "linkcomm/graph.hpp"

namespace linkcomm {

/// Enumeration guard: 2^m places are materialized.
inline constexpr std::size_t kMaxEnumerableLinks = 24;

/// Range value reported for global minima: no lower place exists, so the
/// range is unbounded and gets the sentinel m + 1.
inline std::size_t range_sentinel(const Graph& g) { return g.link_count() + 1; }

struct LandscapePlace {
  LinkSet links;
  double psi;
  bool connected;
  std::size_t size;
};

struct CommunityRecord {
  LinkSet links;
  double psi;
  std::size_t range;  // exact in oracle mode, lower bound in search mode
  bool is_local_minimum;
};

/// The complete Psi landscape of a small graph: every one of the 2^m link
/// subsets with its cost and connectivity flag. Places are identified by the
/// subset bit mask over link IDs.
class Landscape {
 public:
  Landscape(const Graph& g, std::vector<double> psi, std::vector<std::uint8_t> connected);

  const Graph& graph() const { return *graph_; }
  std::size_t link_count() const { return m_; }
  std::size_t place_count() const { return psi_.size(); }
  std::uint32_t full_mask() const { return static_cast<std::uint32_t>(place_count() - 1); }

  double psi(std::uint32_t mask) const { return psi_[mask]; }
  bool connected(std::uint32_t mask) const { return connected_[mask] != 0; }

  LandscapePlace place(std::uint32_t mask) const;
  LinkSet linkset_of(std::uint32_t mask) const;
  std::uint32_t mask_of(const LinkSet& l) const;

  /// All masks ordered by circle of latitude (subset size), then mask value.
  std::vector<std::uint32_t> masks_in_latitude_order() const;

 private:
  const Graph* graph_;
  std::size_t m_;
  std::vector<double> psi_;
  std::vector<std::uint8_t> connected_;
};

/// Brute-force enumeration of all 2^m places. Throws TooLarge above
/// kMaxEnumerableLinks. Internal degrees are walked with exact integer
/// updates and sigma is summed afresh per place, so the values are
/// independent of the incremental evaluation path used by the searches.
Landscape enumerate_landscape(const Graph& g);

/// No distance-1 neighbor is strictly lower (plateau neighbors do not
/// disqualify); poles are excluded as candidates but count as neighbors.
bool is_local_minimum(const Landscape& ls, std::uint32_t mask);

/// All connected local minima, with exact ranges, sorted by
/// (psi, size, mask). The result does not depend on enumeration order.
std::vector<CommunityRecord> local_minima(const Landscape& ls);

/// Minimal distance to any strictly lower place, connected or not;
/// range_sentinel(g) when no lower place exists.
std::size_t exact_range(const Landscape& ls, const LinkSet& community);

struct VerifyEntry {
  LinkSet links;
  double psi;
  std::size_t nearest_distance;  // for spurious entries: distance to closest oracle minimum
};

struct VerifyReport {
  std::vector<VerifyEntry> matched;
  std::vector<VerifyEntry> missed;    // oracle minima absent from the search result
  std::vector<VerifyEntry> spurious;  // search results absent from the oracle
  double max_psi_discrepancy = 0.0;   // over matched pairs
  bool clean() const { return missed.empty() && spurious.empty(); }
};

/// Compare search output against the oracle's minima by exact link-set
/// equality.
VerifyReport verify_search_result(const Graph& g, const std::vector<CommunityRecord>& found,
                                  const std::vector<CommunityRecord>& oracle);

}  // namespace linkcomm
