#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dispset {

// Sorted, duplicate-free set of leaf labels. Used for cluster and
// visibility sets; iteration order is lexicographic.
class LeafSet {
 public:
  using const_iterator = std::vector<std::string>::const_iterator;

  LeafSet() = default;
  LeafSet(std::initializer_list<std::string> labels);
  explicit LeafSet(std::vector<std::string> labels);

  // Caller guarantees `labels` is strictly increasing.
  static LeafSet from_sorted(std::vector<std::string> labels);

  bool contains(std::string_view label) const;
  bool subset_of(const LeafSet& other) const;
  LeafSet without(std::string_view label) const;
  LeafSet without(const LeafSet& other) const;
  LeafSet united(const LeafSet& other) const;

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& front() const { return labels_.front(); }
  const_iterator begin() const noexcept { return labels_.begin(); }
  const_iterator end() const noexcept { return labels_.end(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // "{a,b,c}"
  std::string to_string() const;

  friend bool operator==(const LeafSet&, const LeafSet&) = default;
  friend auto operator<=>(const LeafSet&, const LeafSet&) = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace dispset
