#include "dispset/network.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dispset/analysis.hpp"
#include "work_graph.hpp"

namespace dispset {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownLeaf: return "UnknownLeaf";
    case ErrorCode::WouldEmptyNetwork: return "WouldEmptyNetwork";
    case ErrorCode::NoSuchArc: return "NoSuchArc";
    case ErrorCode::NotReticulationArc: return "NotReticulationArc";
    case ErrorCode::NotTreeChild: return "NotTreeChild";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::LeafSetMismatch: return "LeafSetMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::HybridArityError: return "HybridArityError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::TooManyReticulations: return "TooManyReticulations";
    case ErrorCode::IncompleteSwitching: return "IncompleteSwitching";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::NoEligibleArc: return "NoEligibleArc";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

std::string to_string(const Arc& arc) {
  return "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
}

std::string_view to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Root: return "root";
    case VertexKind::Tree: return "tree";
    case VertexKind::Reticulation: return "reticulation";
    case VertexKind::Leaf: return "leaf";
    case VertexKind::Other: return "other";
  }
  return "other";
}

// ---------------------------------------------------------------------------
// Network

Network Network::from_arcs(std::size_t vertex_count, std::vector<Arc> arcs,
                           const std::vector<std::pair<VertexId, std::string>>& labels) {
  for (const Arc& a : arcs)
    if (a.tail >= vertex_count || a.head >= vertex_count)
      throw std::invalid_argument("arc " + to_string(a) + " refers to a missing vertex");
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::string> names(vertex_count);
  for (const auto& [v, name] : labels) {
    if (v >= vertex_count) throw std::invalid_argument("label on a missing vertex");
    names[v] = name;
  }
  std::vector<VertexId> origin(vertex_count);
  std::iota(origin.begin(), origin.end(), VertexId{0});
  return assemble(std::move(arcs), std::move(names), std::move(origin), {});
}

Network Network::single_leaf(std::string label) {
  return from_arcs(1, {}, {{0, std::move(label)}});
}

Network Network::assemble(std::vector<Arc> arcs, std::vector<std::string> labels,
                          std::vector<VertexId> origin, std::vector<VertexId> leaves_in_order) {
  Network net;
  const std::size_t n = labels.size();
  net.arcs_ = std::move(arcs);
  net.labels_ = std::move(labels);
  net.origin_ = std::move(origin);

  net.child_offset_.assign(n + 1, 0);
  net.parent_offset_.assign(n + 1, 0);
  for (const Arc& a : net.arcs_) {
    ++net.child_offset_[a.tail + 1];
    ++net.parent_offset_[a.head + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    net.child_offset_[i + 1] += net.child_offset_[i];
    net.parent_offset_[i + 1] += net.parent_offset_[i];
  }
  // Arcs are sorted by tail, so heads come out grouped and sorted; parents
  // are filled in tail order, which keeps them sorted too.
  net.child_list_.resize(net.arcs_.size());
  net.parent_list_.resize(net.arcs_.size());
  std::vector<std::uint32_t> fill(net.parent_offset_.begin(), net.parent_offset_.end() - 1);
  for (std::size_t i = 0; i < net.arcs_.size(); ++i) {
    const Arc& a = net.arcs_[i];
    net.child_list_[i] = a.head;
    net.parent_list_[fill[a.head]++] = a.tail;
  }

  for (VertexId v = 0; v < n; ++v) {
    if (net.parent_offset_[v + 1] == net.parent_offset_[v]) {
      net.root_ = v;
      break;
    }
  }

  if (leaves_in_order.empty()) {
    for (VertexId v = 0; v < n; ++v)
      if (!net.labels_[v].empty()) leaves_in_order.push_back(v);
    std::stable_sort(leaves_in_order.begin(), leaves_in_order.end(),
                     [&](VertexId x, VertexId y) { return net.labels_[x] < net.labels_[y]; });
  }
  net.leaves_ = std::move(leaves_in_order);
  net.leaf_rank_.assign(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < net.leaves_.size(); ++i)
    net.leaf_rank_[net.leaves_[i]] = static_cast<std::uint32_t>(i);
  return net;
}

std::span<const VertexId> Network::children(VertexId v) const {
  if (v >= vertex_count()) throw std::out_of_range("no vertex " + std::to_string(v));
  return {child_list_.data() + child_offset_[v], child_offset_[v + 1] - child_offset_[v]};
}

std::span<const VertexId> Network::parents(VertexId v) const {
  if (v >= vertex_count()) throw std::out_of_range("no vertex " + std::to_string(v));
  return {parent_list_.data() + parent_offset_[v], parent_offset_[v + 1] - parent_offset_[v]};
}

bool Network::has_arc(Arc arc) const {
  if (arc.tail >= vertex_count() || arc.head >= vertex_count()) return false;
  auto kids = children(arc.tail);
  return std::find(kids.begin(), kids.end(), arc.head) != kids.end();
}

VertexKind Network::kind(VertexId v) const {
  const std::size_t in = in_degree(v);
  const std::size_t out = out_degree(v);
  if (out == 0) return VertexKind::Leaf;
  if (in == 0) return VertexKind::Root;
  if (in == 1 && out == 2) return VertexKind::Tree;
  if (in == 2 && out == 1) return VertexKind::Reticulation;
  return VertexKind::Other;
}

std::optional<VertexId> Network::leaf(std::string_view label) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), label,
                             [&](VertexId v, std::string_view l) { return labels_[v] < l; });
  if (it != leaves_.end() && labels_[*it] == label) return *it;
  return std::nullopt;
}

LeafSet Network::leaf_set() const {
  std::vector<std::string> out;
  out.reserve(leaves_.size());
  for (VertexId v : leaves_) out.push_back(labels_[v]);
  return LeafSet(std::move(out));
}

std::size_t Network::reticulation_count() const {
  std::size_t count = 0;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (kind(v) == VertexKind::Reticulation) ++count;
  return count;
}

std::vector<VertexId> Network::reticulations() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (kind(v) == VertexKind::Reticulation) out.push_back(v);
  return out;
}

bool operator==(const Network& lhs, const Network& rhs) {
  return lhs.arcs_ == rhs.arcs_ && lhs.labels_ == rhs.labels_;
}

// ---------------------------------------------------------------------------
// Validation

std::string Violation::to_string() const {
  std::string s = "rule=" + rule;
  if (vertex) s += " vertex=" + std::to_string(*vertex);
  if (arc) s += " arc=" + dispset::to_string(*arc);
  return s;
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string s = "network violates " + std::to_string(report.violations.size()) + " rule(s)";
  for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i)
    s += "; " + report.violations[i].to_string();
  return s;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(ErrorCode::ValidationError, summarize(report)), report_(std::move(report)) {}

ValidationReport validate(const Network& net) {
  ValidationReport report;
  auto flag = [&](std::string rule, std::optional<VertexId> v, std::optional<Arc> a) {
    report.violations.push_back({std::move(rule), v, a});
  };
  const std::size_t n = net.vertex_count();

  if (n == 0) {
    flag("empty", std::nullopt, std::nullopt);
    report.ok = false;
    return report;
  }

  const auto arcs = net.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].tail == arcs[i].head) flag("self-loop", arcs[i].tail, arcs[i]);
    if (i > 0 && arcs[i] == arcs[i - 1] && (i < 2 || arcs[i - 1] != arcs[i - 2]))
      flag("parallel-arcs", std::nullopt, arcs[i]);
  }

  // Kahn's algorithm; leftovers lie on or below a cycle.
  std::vector<std::size_t> pending(n);
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    pending[v] = net.in_degree(v);
    if (pending[v] == 0) ready.push_back(v);
  }
  std::size_t processed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++processed;
    for (VertexId c : net.children(v))
      if (--pending[c] == 0) ready.push_back(c);
  }
  if (processed != n) {
    for (VertexId v = 0; v < n; ++v)
      if (pending[v] != 0) {
        flag("cycle", v, std::nullopt);
        break;
      }
  }

  std::size_t roots = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t in = net.in_degree(v);
    const std::size_t out = net.out_degree(v);
    const bool labelled = net.has_label(v);
    if (in == 0) {
      ++roots;
      if (roots > 1) flag("root-count", v, std::nullopt);
    }
    if (n == 1) {
      if (!labelled) flag("unlabeled-leaf", v, std::nullopt);
      continue;
    }
    if (out == 0) {
      if (!labelled) flag("unlabeled-leaf", v, std::nullopt);
      if (in != 1) flag("leaf-degree", v, std::nullopt);
      continue;
    }
    if (labelled) flag("labeled-internal", v, std::nullopt);
    if (in == 0) {
      if (out != 2) flag("root-degree", v, std::nullopt);
    } else if (!((in == 1 && out == 2) || (in == 2 && out == 1))) {
      flag("vertex-degree", v, std::nullopt);
    }
  }
  if (roots == 0) flag("root-count", std::nullopt, std::nullopt);

  const auto leaves = net.leaves();
  for (std::size_t i = 1; i < leaves.size(); ++i)
    if (net.label(leaves[i]) == net.label(leaves[i - 1]))
      flag("duplicate-label", leaves[i], std::nullopt);

  report.ok = report.violations.empty();
  return report;
}

void require_valid(const Network& net) {
  auto report = validate(net);
  if (!report.ok) throw ValidationError(std::move(report));
}

// ---------------------------------------------------------------------------
// Deletions

Network delete_leaf(const Network& net, std::string_view label) {
  auto leaf = net.leaf(label);
  if (!leaf || !net.is_leaf(*leaf))
    throw Error(ErrorCode::UnknownLeaf, "no leaf labelled '" + std::string(label) + "'");
  if (net.leaf_count() <= 1)
    throw Error(ErrorCode::WouldEmptyNetwork, "cannot delete the only leaf");
  detail::WorkGraph g(net);
  std::vector<VertexId> work(g.parents(*leaf).begin(), g.parents(*leaf).end());
  g.remove_vertex(*leaf);
  g.normalize(std::move(work), false);
  return g.to_network();
}

Network delete_arc(const Network& net, Arc arc) {
  return delete_arcs(net, std::span<const Arc>(&arc, 1));
}

Network delete_arcs(const Network& net, std::span<const Arc> arcs) {
  for (const Arc& a : arcs) {
    if (!net.has_arc(a)) throw Error(ErrorCode::NoSuchArc, "no arc " + to_string(a));
    if (!net.is_reticulation(a.head))
      throw Error(ErrorCode::NotReticulationArc,
                  "arc " + to_string(a) + " does not enter a reticulation");
  }
  detail::WorkGraph g(net);
  std::vector<VertexId> work;
  for (const Arc& a : arcs) {
    g.remove_arc(a.tail, a.head);
    work.push_back(a.tail);
    work.push_back(a.head);
  }
  g.normalize(std::move(work), false);
  return g.to_network();
}

Network remove_trivial_shortcuts(const Network& net, std::vector<Arc>* removed) {
  if (!is_tree_child(net))
    throw Error(ErrorCode::NotTreeChild, "trivial-shortcut removal needs a tree-child network");
  Network current = net;
  for (;;) {
    std::optional<Arc> found;
    for (const Arc& a : current.arcs()) {
      if (current.is_reticulation(a.head) && is_trivial_shortcut(current, a)) {
        found = a;
        break;
      }
    }
    if (!found) return current;
    if (removed) removed->push_back(current.origin(*found));
    current = delete_arc(current, *found);
  }
}

}  // namespace dispset
