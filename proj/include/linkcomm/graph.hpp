#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkcomm/errors.hpp"

namespace linkcomm {

using NodeId = std::uint32_t;
using LinkId = std::uint32_t;

struct Link {
  NodeId u;
  NodeId v;
};

/// Set of link IDs over a fixed universe of m links. Backed by a bit vector
/// with cached cardinality; set algebra runs word-wise.
class LinkSet {
 public:
  LinkSet() = default;
  explicit LinkSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static LinkSet single(std::size_t universe, LinkId k) {
    LinkSet s(universe);
    s.insert(k);
    return s;
  }

  static LinkSet full(std::size_t universe) {
    LinkSet s(universe);
    for (auto& w : s.words_) w = ~0ULL;
    s.trim_tail();
    s.cardinality_ = universe;
    return s;
  }

  std::size_t universe_size() const { return universe_; }
  std::size_t size() const { return cardinality_; }
  bool empty() const { return cardinality_ == 0; }

  bool contains(LinkId k) const { return (words_[k >> 6] >> (k & 63)) & 1u; }

  void insert(LinkId k) {
    std::uint64_t& w = words_[k >> 6];
    std::uint64_t bit = 1ULL << (k & 63);
    if (!(w & bit)) {
      w |= bit;
      ++cardinality_;
    }
  }

  void erase(LinkId k) {
    std::uint64_t& w = words_[k >> 6];
    std::uint64_t bit = 1ULL << (k & 63);
    if (w & bit) {
      w &= ~bit;
      --cardinality_;
    }
  }

  void toggle(LinkId k) {
    if (contains(k))
      erase(k);
    else
      insert(k);
  }

  void clear() {
    for (auto& w : words_) w = 0;
    cardinality_ = 0;
  }

  LinkSet& operator&=(const LinkSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    recount();
    return *this;
  }

  LinkSet& operator|=(const LinkSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    recount();
    return *this;
  }

  LinkSet& operator^=(const LinkSet& o) {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    recount();
    return *this;
  }

  bool operator==(const LinkSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }

  bool is_subset_of(const LinkSet& o) const {
    check_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::vector<LinkId> to_vector() const {
    std::vector<LinkId> out;
    out.reserve(cardinality_);
    for_each([&](LinkId k) { out.push_back(k); });
    return out;
  }

  /// Visit members in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<LinkId>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

 private:
  void check_same_universe(const LinkSet& o) const {
    if (universe_ != o.universe_)
      throw SizeMismatch("link sets over different universes: " +
                         std::to_string(universe_) + " vs " + std::to_string(o.universe_));
  }

  void trim_tail() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ULL << (universe_ % 64)) - 1;
  }

  void recount() {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    cardinality_ = c;
  }

  std::size_t universe_ = 0;
  std::size_t cardinality_ = 0;
  std::vector<std::uint64_t> words_;
};

inline LinkSet set_intersection(LinkSet a, const LinkSet& b) { return a &= b; }
inline LinkSet set_union(LinkSet a, const LinkSet& b) { return a |= b; }
inline LinkSet set_symmetric_difference(LinkSet a, const LinkSet& b) { return a ^= b; }

/// |a Δ b|; the distance between places in the cost landscape.
std::size_t symmetric_difference_distance(const LinkSet& a, const LinkSet& b);

/// Total order on link sets over the same universe; used for deterministic
/// tie-breaking, not for anything semantic.
bool linkset_less(const LinkSet& a, const LinkSet& b);

/// Immutable connected undirected unweighted graph. Node and link IDs are
/// dense, 0-based, assigned in first-seen input order; original labels are
/// kept for output.
class Graph {
 public:
  struct Neighbor {
    NodeId node;
    LinkId link;
  };

  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges);

  /// Plain-text edge list: one edge per line, two whitespace-separated node
  /// labels; lines starting with '#' are ignored.
  static Graph from_stream(std::istream& in);
  static Graph from_file(const std::string& path);

  std::size_t node_count() const { return degree_.size(); }
  std::size_t link_count() const { return links_.size(); }
  const Link& link(LinkId k) const { return links_[k]; }
  const std::vector<Link>& links() const { return links_; }
  std::uint32_t degree(NodeId i) const { return degree_[i]; }

  std::span<const Neighbor> neighbors(NodeId i) const {
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  const std::string& node_label(NodeId i) const { return labels_[i]; }
  const std::vector<std::string>& node_labels() const { return labels_; }

  /// Connectivity of the link-induced subgraph (links in l plus attached
  /// nodes). The empty set is not connected by convention.
  bool is_connected(const LinkSet& l) const;

  /// Connected components of the link-induced subgraph, sorted by descending
  /// cardinality, ties broken by the smallest contained link ID.
  std::vector<LinkSet> components(const LinkSet& l) const;

  /// Largest component per the `components` ordering; throws EmptySet on an
  /// empty input set.
  LinkSet main_component(const LinkSet& l) const;

 private:
  Graph() = default;
  void build(std::vector<Link> links, std::vector<std::string> labels);

  std::vector<Link> links_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> degree_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

}  // namespace linkcomm
