#include "dispset/leaf_set.hpp"

#include <algorithm>
#include <iterator>

namespace dispset {

LeafSet::LeafSet(std::initializer_list<std::string> labels)
    : LeafSet(std::vector<std::string>(labels)) {}

LeafSet::LeafSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

LeafSet LeafSet::from_sorted(std::vector<std::string> labels) {
  LeafSet set;
  set.labels_ = std::move(labels);
  return set;
}

bool LeafSet::contains(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  return it != labels_.end() && *it == label;
}

bool LeafSet::subset_of(const LeafSet& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(),
                       labels_.end());
}

LeafSet LeafSet::without(std::string_view label) const {
  std::vector<std::string> out;
  out.reserve(labels_.size());
  for (const auto& l : labels_)
    if (l != label) out.push_back(l);
  return from_sorted(std::move(out));
}

LeafSet LeafSet::without(const LeafSet& other) const {
  std::vector<std::string> out;
  std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(),
                      other.labels_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

LeafSet LeafSet::united(const LeafSet& other) const {
  std::vector<std::string> out;
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::string LeafSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ',';
    s += labels_[i];
  }
  s += '}';
  return s;
}

}  // namespace dispset
