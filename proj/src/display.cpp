#include "dispset/display.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "dispset/newick.hpp"
#include "work_graph.hpp"

namespace dispset {

namespace {

struct Subtree {
  std::string newick;
  std::string smallest;
};

// Canonical Newick of the tree left after keeping, for every reticulation,
// only the arc from `chosen[r]`. Vertices whose subtree holds no leaf vanish;
// vertices left with one child are passed through.
class SwitchedWriter {
 public:
  SwitchedWriter(const Network& net, const std::vector<VertexId>& chosen)
      : net_(net), chosen_(chosen) {}

  std::optional<Subtree> write(VertexId v) {
    if (net_.is_leaf(v)) {
      ++leaves_seen_;
      return Subtree{quote_label(net_.label(v)), net_.label(v)};
    }
    std::vector<Subtree> parts;
    for (VertexId c : net_.children(v)) {
      if (net_.in_degree(c) >= 2 && chosen_[c] != v) continue;
      if (auto sub = write(c)) parts.push_back(std::move(*sub));
    }
    if (parts.empty()) return std::nullopt;
    if (parts.size() == 1) return std::move(parts.front());
    std::sort(parts.begin(), parts.end(),
              [](const Subtree& x, const Subtree& y) { return x.smallest < y.smallest; });
    Subtree out;
    out.smallest = parts.front().smallest;
    out.newick = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out.newick += ',';
      out.newick += parts[i].newick;
    }
    out.newick += ')';
    return out;
  }

  std::size_t leaves_seen() const { return leaves_seen_; }

 private:
  const Network& net_;
  const std::vector<VertexId>& chosen_;
  std::size_t leaves_seen_ = 0;
};

void require_same_leaves(const Network& x, const Network& y) {
  if (x.leaf_set() != y.leaf_set())
    throw Error(ErrorCode::LeafSetMismatch,
                "leaf sets differ: " + x.leaf_set().to_string() + " vs " +
                    y.leaf_set().to_string());
}

}  // namespace

CanonicalTree canonical_tree(const Network& tree) {
  if (tree.reticulation_count() != 0)
    throw std::invalid_argument("canonical_tree expects a tree");
  if (tree.root() == kNoVertex) return {";"};
  std::vector<VertexId> none(tree.vertex_count(), kNoVertex);
  SwitchedWriter writer(tree, none);
  auto sub = writer.write(tree.root());
  return {sub ? sub->newick + ";" : ";"};
}

std::optional<Network> apply_switching(const Network& net, const Switching& switching) {
  detail::WorkGraph g(net);
  std::vector<VertexId> work;
  for (VertexId r = 0; r < net.vertex_count(); ++r) {
    if (net.in_degree(r) < 2) continue;
    auto it = switching.chosen_parent.find(r);
    auto pars = net.parents(r);
    if (it == switching.chosen_parent.end() ||
        std::find(pars.begin(), pars.end(), it->second) == pars.end())
      throw Error(ErrorCode::IncompleteSwitching,
                  "no valid parent chosen for reticulation " + std::to_string(r));
    bool kept = false;
    for (VertexId p : pars) {
      if (p == it->second && !kept) {
        kept = true;
        continue;
      }
      g.remove_arc(p, r);
      work.push_back(p);
    }
    work.push_back(r);
  }
  g.normalize(std::move(work), true);
  Network tree = g.to_network();
  if (tree.leaf_set() != net.leaf_set() || !validate(tree).ok) return std::nullopt;
  return tree;
}

DisplaySet enumerate_display_set(const Network& net, const EnumerationOptions& options,
                                 EnumerationStats* stats) {
  std::vector<VertexId> rets;
  for (VertexId v = 0; v < net.vertex_count(); ++v)
    if (net.in_degree(v) >= 2) rets.push_back(v);
  if (rets.size() > options.max_reticulations || rets.size() >= 63)
    throw Error(ErrorCode::TooManyReticulations,
                "network has " + std::to_string(rets.size()) + " reticulations, bound is " +
                    std::to_string(options.max_reticulations));
  for (VertexId r : rets)
    if (net.in_degree(r) != 2)
      throw std::invalid_argument("enumeration needs binary reticulations");

  const std::uint64_t total = std::uint64_t{1} << rets.size();
  const std::size_t leaf_count = net.leaf_count();

  auto run = [&](std::uint64_t begin, std::uint64_t end, DisplaySet& out,
                 EnumerationStats& local) {
    std::vector<VertexId> chosen(net.vertex_count(), kNoVertex);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      for (std::size_t i = 0; i < rets.size(); ++i)
        chosen[rets[i]] = net.parents(rets[i])[(mask >> i) & 1U];
      SwitchedWriter writer(net, chosen);
      auto sub = net.root() == kNoVertex ? std::nullopt : writer.write(net.root());
      ++local.switchings;
      if (!sub || writer.leaves_seen() != leaf_count) {
        ++local.incomplete;
        continue;
      }
      out.insert({sub->newick + ";"});
    }
  };

  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads, 1, total));
  std::vector<DisplaySet> parts(threads);
  std::vector<EnumerationStats> part_stats(threads);
  if (threads == 1) {
    run(0, total, parts[0], part_stats[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, t * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back(run, begin, end, std::ref(parts[t]), std::ref(part_stats[t]));
    }
    for (auto& th : pool) th.join();
  }

  DisplaySet result;
  EnumerationStats sum;
  for (unsigned t = 0; t < threads; ++t) {
    result.merge(parts[t]);
    sum.switchings += part_stats[t].switchings;
    sum.incomplete += part_stats[t].incomplete;
  }
  if (stats) *stats = sum;
  return result;
}

bool displays(const Network& net, const Network& tree, const EnumerationOptions& options) {
  require_same_leaves(net, tree);
  return enumerate_display_set(net, options).contains(canonical_tree(tree));
}

bool display_sets_equal_bruteforce(const Network& first, const Network& second,
                                   const EnumerationOptions& options) {
  require_same_leaves(first, second);
  return enumerate_display_set(first, options) == enumerate_display_set(second, options);
}

}  // namespace dispset
