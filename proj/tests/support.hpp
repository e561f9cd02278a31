#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dispset/display.hpp"
#include "dispset/generate.hpp"
#include "dispset/leaf_set.hpp"
#include "dispset/network.hpp"

namespace dispset::testing {

// Running examples. NET_A is normal with one reticulation; NET_B carries a
// trivial shortcut whose removal gives NET_C.
inline constexpr const char* kNetA = "((a,(b)#H1)u,(#H1,c)v)r;";
inline constexpr const char* kNetB = "(((a,(b)#H1)w,#H1)u,x)rho;";
inline constexpr const char* kNetC = "(x,(a,b));";
inline constexpr const char* kTreeABC = "(a,(b,c));";

// Leaf-label-preserving isomorphism by backtracking, children before parents.
bool isomorphic(const Network& x, const Network& y);

// Same network with vertex ids shuffled.
Network permute_ids(const Network& net, std::uint64_t seed);

// Clusters of every vertex of a displayed tree.
std::vector<LeafSet> tree_clusters(const CanonicalTree& tree);

// Cluster of b's sibling in a tree on a leaf set containing b.
LeafSet sibling_cluster(const CanonicalTree& tree, const std::string& b);

// Pair families used by the oracle agreement checks.
enum class PairFamily { ShortcutCopy, Independent, LabelSwap, Template };

std::string_view to_string(PairFamily family);

struct PairLimits {
  std::size_t max_leaves = 8;
  std::size_t max_reticulations = 4;
};

// A normal first network and a tree-child second network on the same
// leaves, or nullopt when the draw misses the limits (callers redraw).
std::optional<std::pair<Network, Network>> random_pair(PairFamily family, std::uint64_t seed,
                                                       const PairLimits& limits = {});

}  // namespace dispset::testing
