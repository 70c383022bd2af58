#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "superdet/group.hpp"

namespace superdet {

/// Partition of the group elements. The part containing the identity is
/// part 0; the remaining parts are ordered by (size, smallest member). Each
/// part's representative is its smallest element.
class GPartition {
 public:
  /// Throws NotAPartition unless the parts are nonempty, disjoint and cover
  /// 0..order-1.
  static GPartition from_parts(std::size_t order, std::vector<std::vector<Element>> parts);
  static GPartition fine(const ConjClasses& classes);
  static GPartition maximal(std::size_t order);
  /// Each block lists conjugacy class indices; their union forms one part.
  static GPartition from_class_blocks(const ConjClasses& classes,
                                      const std::vector<std::vector<std::size_t>>& blocks);

  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t group_order() const noexcept { return kappa_.size(); }
  const std::vector<std::vector<Element>>& parts() const noexcept { return parts_; }
  const std::vector<Element>& part(std::size_t k) const { return parts_[k]; }
  std::size_t part_size(std::size_t k) const { return parts_[k].size(); }
  Element rep(std::size_t k) const { return parts_[k].front(); }
  /// Index of the part containing g.
  std::size_t kappa(Element g) const { return kappa_[g]; }
  const std::vector<std::size_t>& kappa() const noexcept { return kappa_; }

  bool operator==(const GPartition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<std::vector<Element>> parts_;
  std::vector<std::size_t> kappa_;
};

/// True iff every part is a union of conjugacy classes and the identity is
/// alone in its part.
bool is_invariant_partition(const FiniteGroup& group, const GPartition& partition);
bool is_invariant_partition(const ConjClasses& classes, const GPartition& partition);

/// Restricted growth strings of length n: a[0] = 0, a[i] <= 1 + max(a[0..i)).
/// Each string encodes one set partition of {0..n-1}.
class RestrictedGrowthStrings {
 public:
  explicit RestrictedGrowthStrings(std::size_t n);

  const std::vector<std::size_t>& current() const noexcept { return a_; }
  std::size_t blocks() const noexcept { return n_ == 0 ? 0 : max_.back() + 1; }
  /// Advances to the next string; false after the last one.
  bool next();

 private:
  std::size_t n_;
  std::vector<std::size_t> a_;
  std::vector<std::size_t> max_;  // max_[i] = max(a[0..i])
};

/// Calls `visit` for every partition that keeps {1} alone and groups the
/// non-identity conjugacy classes arbitrarily, in restricted-growth order.
void for_each_invariant_partition(const ConjClasses& classes,
                                  const std::function<void(const GPartition&)>& visit);

std::size_t bell_number(std::size_t n);

}  // namespace superdet
