#pragma once

#include <vector>

#include "dispset/network.hpp"

namespace dispset::detail {

// Mutable adjacency used while deleting and suppressing; converted back to
// an immutable Network with compacted ids.
class WorkGraph {
 public:
  explicit WorkGraph(const Network& net);

  bool alive(VertexId v) const { return alive_[v] != 0; }
  const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
  const std::vector<VertexId>& parents(VertexId v) const { return parents_[v]; }

  void remove_arc(VertexId tail, VertexId head);
  void remove_vertex(VertexId v);

  // Suppresses unlabelled in-1/out-1 vertices and removes an in-0/out-1
  // root, starting from the vertices in `work`. With `prune_dead`, unlabelled
  // out-degree-0 vertices are removed as well.
  void normalize(std::vector<VertexId> work, bool prune_dead);

  Network to_network() const;

 private:
  void add_arc(VertexId tail, VertexId head);

  const Network& source_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::vector<VertexId>> parents_;
  std::vector<char> alive_;
};

}  // namespace dispset::detail
