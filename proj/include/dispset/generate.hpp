#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "dispset/network.hpp"

namespace dispset {

enum class NetworkClass { Normal, TreeChild };

std::string_view to_string(NetworkClass cls);

struct GenSpec {
  std::size_t n_leaves = 2;
  std::size_t n_reticulations = 0;
  std::uint64_t seed = 0;
  NetworkClass network_class = NetworkClass::Normal;
};

// Attempts per reticulation before Error{GenerationExhausted}.
inline constexpr std::size_t kRetryBound = 10000;

// mt19937_64 with a uniform draw that is identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return below(2) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// "x1".."xn".
std::string leaf_name(std::size_t index);

// Random tree on x1..xn grown by leaf attachment, then reticulations added
// one at a time by joining the subdivisions of two arcs, rejecting
// candidates that are cyclic or leave the requested class.
// Throws Error{InvalidSpec} unless 2 <= n_leaves and
// n_reticulations <= n_leaves - 1; Error{GenerationExhausted} after
// kRetryBound rejected candidates for a single reticulation.
Network random_network(const GenSpec& spec);

// Picks a tree vertex (or the root) w whose children are both tree vertices
// or leaves, and one child c of w. Inserts u above w and v on (w,c) and adds
// the arc (u,v), which is then a trivial shortcut. The result is tree-child
// and displays the same trees as `net`.
// Throws Error{NotTreeChild} or Error{NoEligibleArc}.
Network insert_trivial_shortcut(const Network& net, std::uint64_t seed);

// A pair where the first network has a reticulated cherry {a,b} whose
// reticulation's other parent q is a sibling of p_a, and the second has b
// below a tree vertex with a reticulated sibling v1 guarded by a shortcut,
// hung at the same place of a shared random base on x1..x(n-2).
struct TemplatePairSpec {
  std::size_t base_leaves = 2;
  std::size_t base_reticulations = 0;
  // v2 is a reticulation guarded by a second shortcut.
  bool second_shortcut = false;
  // a hangs below v1 (otherwise below v2).
  bool a_below_v1 = true;
  // Hang the second template at an independently drawn base arc.
  bool independent_placement = false;
  std::uint64_t seed = 0;
};

// Returns nullopt if the chosen base arc gives an invalid, non-normal or
// non-tree-child result; callers resample with another seed.
std::optional<std::pair<Network, Network>> tree_parent_template_pair(
    const TemplatePairSpec& spec);

// Swaps the labels of two leaves.
Network swap_labels(const Network& net, std::string_view x, std::string_view y);

}  // namespace dispset
