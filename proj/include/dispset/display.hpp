#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "dispset/network.hpp"

namespace dispset {

// One kept in-arc per reticulation: reticulation -> chosen parent.
struct Switching {
  std::map<VertexId, VertexId> chosen_parent;
};

// Newick string of a phylogenetic tree with every child list ordered by
// smallest leaf label. Equal strings iff equal leaf-labelled topologies.
struct CanonicalTree {
  std::string newick;

  friend bool operator==(const CanonicalTree&, const CanonicalTree&) = default;
  friend auto operator<=>(const CanonicalTree&, const CanonicalTree&) = default;
};

using DisplaySet = std::set<CanonicalTree>;

inline constexpr std::size_t kDefaultMaxReticulations = 20;

struct EnumerationOptions {
  std::size_t max_reticulations = kDefaultMaxReticulations;
  // Switching ranges are split across this many threads; the result does
  // not depend on it.
  unsigned threads = 1;
};

struct EnumerationStats {
  std::uint64_t switchings = 0;
  // Switchings whose tree lost a leaf (only possible on invalid input).
  std::uint64_t incomplete = 0;
};

// Throws std::invalid_argument if `tree` has a reticulation.
CanonicalTree canonical_tree(const Network& tree);

// Deletes the unchosen in-arc of every reticulation, prunes unlabelled
// dead ends, suppresses in-1/out-1 vertices and contracts a root of
// out-degree one. Returns nullopt if the result does not keep every leaf.
// Throws Error{IncompleteSwitching} if a reticulation has no valid choice.
std::optional<Network> apply_switching(const Network& net, const Switching& switching);

// Every tree displayed by `net`, by enumerating all 2^r switchings in
// binary-counter order over reticulations sorted by id.
// Throws Error{TooManyReticulations} above `options.max_reticulations`.
DisplaySet enumerate_display_set(const Network& net, const EnumerationOptions& options = {},
                                 EnumerationStats* stats = nullptr);

// Throws Error{LeafSetMismatch}.
bool displays(const Network& net, const Network& tree, const EnumerationOptions& options = {});

// Throws Error{LeafSetMismatch} or Error{TooManyReticulations}.
bool display_sets_equal_bruteforce(const Network& first, const Network& second,
                                   const EnumerationOptions& options = {});

}  // namespace dispset
