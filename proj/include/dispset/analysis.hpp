#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dispset/leaf_set.hpp"
#include "dispset/network.hpp"

namespace dispset {

// Leaves reachable from each vertex, indexed by VertexId. One postorder pass.
std::vector<LeafSet> cluster_sets(const Network& net);

// Leaves reachable from `v`; linear time.
LeafSet cluster_set(const Network& net, VertexId v);

// Leaves every root path to which passes through `u`: the leaf set minus the
// leaves still reachable from the root once `u` is removed. Linear time.
LeafSet visibility_set(const Network& net, VertexId u);

// True iff a directed path from `from` to `to` exists (length zero counts).
bool reachable(const Network& net, VertexId from, VertexId to);

// True iff `arc` is bypassed by another directed path. Throws NoSuchArc.
bool is_shortcut(const Network& net, Arc arc);

// True iff `arc` enters a reticulation whose other parent is a child of the
// arc's tail. Throws NoSuchArc.
bool is_trivial_shortcut(const Network& net, Arc arc);

// Every non-leaf vertex has a child that is a tree vertex or a leaf.
bool is_tree_child(const Network& net);

// Tree-child and no reticulation arc is a shortcut.
bool is_normal(const Network& net);

// The parent of `v` other than `p` (reticulations only), or kNoVertex.
VertexId other_parent(const Network& net, VertexId v, VertexId p);
// The child of `v` other than `c`, or kNoVertex.
VertexId other_child(const Network& net, VertexId v, VertexId c);

// Two leaves with a common parent.
struct Cherry {
  std::string a;
  std::string b;
  VertexId parent = kNoVertex;

  friend bool operator==(const Cherry&, const Cherry&) = default;
};

// Leaf b hangs below reticulation p_b; p_a is the parent of leaf a and one
// parent of p_b; q is the other parent of p_b.
struct ReticulatedCherry {
  std::string a;
  std::string b;
  VertexId p_a = kNoVertex;
  VertexId p_b = kNoVertex;
  VertexId q = kNoVertex;

  friend bool operator==(const ReticulatedCherry&, const ReticulatedCherry&) = default;
};

using CherryShape = std::variant<Cherry, ReticulatedCherry>;

std::string to_string(const CherryShape& shape);

// Descends from the root through tree vertices (stepping over a
// reticulation when its child is a tree vertex), always taking the
// smallest-id candidate, until no tree vertex lies below. The two leaves
// under the final vertex form a cherry or a reticulated cherry; for a cherry
// `a` is the smaller label.
// Throws NotTreeChild; std::invalid_argument when there are fewer than two
// leaves.
CherryShape find_cherry(const Network& net);

}  // namespace dispset
