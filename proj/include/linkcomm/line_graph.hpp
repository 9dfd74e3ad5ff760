#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkcomm/graph.hpp"

namespace linkcomm {

/// Weighted line graph of the original network: one vertex per link, edge
/// weight 1/k_i for each shared original node i, plus the explicit diagonal
/// E_kk = 1/k_i + 1/k_j for link k = (i, j). Verification-only: the cut and
/// quadratic form over it must reproduce sigma(L) and tau(L).
class LineGraph {
 public:
  struct Entry {
    LinkId other;
    double weight;
  };

  explicit LineGraph(const Graph& g);

  std::size_t size() const { return diagonal_.size(); }
  double diagonal(LinkId k) const { return diagonal_[k]; }

  std::span<const Entry> row(LinkId k) const {
    return {entries_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
  }

  /// 1/k_i for each original node.
  const std::vector<double>& node_weights() const { return node_weights_; }

  /// Weighted cut sum_{k in L, l not in L} E_kl. The diagonal drops out of
  /// the cut on its own.
  double cut(const LinkSet& l) const;

  /// sum_{k,l in L} E_kl including the diagonal; equals tau(L).
  double quadratic_form(const LinkSet& l) const;

 private:
  std::vector<double> diagonal_;
  std::vector<std::size_t> offsets_;
  std::vector<Entry> entries_;
  std::vector<double> node_weights_;
};

inline LineGraph build_line_graph(const Graph& g) { return LineGraph(g); }

}  // namespace linkcomm
