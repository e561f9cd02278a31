#include "work_graph.hpp"

#include <algorithm>

namespace dispset::detail {

namespace {

void erase_one(std::vector<VertexId>& list, VertexId v) {
  auto it = std::find(list.begin(), list.end(), v);
  if (it != list.end()) list.erase(it);
}

}  // namespace

WorkGraph::WorkGraph(const Network& net)
    : source_(net),
      children_(net.vertex_count()),
      parents_(net.vertex_count()),
      alive_(net.vertex_count(), 1) {
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto kids = net.children(v);
    children_[v].assign(kids.begin(), kids.end());
    auto pars = net.parents(v);
    parents_[v].assign(pars.begin(), pars.end());
  }
}

void WorkGraph::add_arc(VertexId tail, VertexId head) {
  children_[tail].push_back(head);
  parents_[head].push_back(tail);
}

void WorkGraph::remove_arc(VertexId tail, VertexId head) {
  erase_one(children_[tail], head);
  erase_one(parents_[head], tail);
}

void WorkGraph::remove_vertex(VertexId v) {
  for (VertexId c : children_[v]) erase_one(parents_[c], v);
  for (VertexId p : parents_[v]) erase_one(children_[p], v);
  children_[v].clear();
  parents_[v].clear();
  alive_[v] = 0;
}

void WorkGraph::normalize(std::vector<VertexId> work, bool prune_dead) {
  while (!work.empty()) {
    const VertexId v = work.back();
    work.pop_back();
    if (!alive_[v] || source_.has_label(v)) continue;
    const std::size_t in = parents_[v].size();
    const std::size_t out = children_[v].size();
    if (out == 0 && prune_dead) {
      std::vector<VertexId> pars = parents_[v];
      remove_vertex(v);
      work.insert(work.end(), pars.begin(), pars.end());
    } else if (in == 1 && out == 1) {
      const VertexId p = parents_[v][0];
      const VertexId c = children_[v][0];
      remove_vertex(v);
      add_arc(p, c);
    } else if (in == 0 && out == 1) {
      const VertexId c = children_[v][0];
      remove_vertex(v);
      work.push_back(c);
    }
  }
}

Network WorkGraph::to_network() const {
  const std::size_t n = alive_.size();
  std::vector<VertexId> remap(n, kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (alive_[v]) remap[v] = next++;

  std::vector<Arc> arcs;
  std::vector<std::string> labels(next);
  std::vector<VertexId> origin(next);
  std::vector<VertexId> kids;
  for (VertexId v = 0; v < n; ++v) {
    if (!alive_[v]) continue;
    const VertexId nv = remap[v];
    labels[nv] = source_.label(v);
    origin[nv] = source_.origin(v);
    kids.clear();
    for (VertexId c : children_[v]) kids.push_back(remap[c]);
    std::sort(kids.begin(), kids.end());
    for (VertexId c : kids) arcs.push_back({nv, c});
  }

  std::vector<VertexId> leaves;
  leaves.reserve(source_.leaf_count());
  for (VertexId v : source_.leaves())
    if (alive_[v]) leaves.push_back(remap[v]);
  return Network::assemble(std::move(arcs), std::move(labels), std::move(origin),
                           std::move(leaves));
}

}  // namespace dispset::detail
