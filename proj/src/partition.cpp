#include "superdet/partition.hpp"

#include <algorithm>

#include "superdet/error.hpp"

namespace superdet {

GPartition GPartition::from_parts(std::size_t order, std::vector<std::vector<Element>> parts) {
  if (order == 0) throw Error(ErrorCode::NotAPartition, "group order is zero");
  std::vector<std::size_t> owner(order, parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].empty())
      throw Error(ErrorCode::NotAPartition, "part " + std::to_string(k) + " is empty");
    for (Element g : parts[k]) {
      if (g >= order)
        throw Error(ErrorCode::NotAPartition, "element " + std::to_string(g) + " out of range");
      if (owner[g] != parts.size())
        throw Error(ErrorCode::NotAPartition,
                    "element " + std::to_string(g) + " appears in more than one part");
      owner[g] = k;
    }
  }
  for (std::size_t g = 0; g < order; ++g)
    if (owner[g] == parts.size())
      throw Error(ErrorCode::NotAPartition, "element " + std::to_string(g) + " is missing");

  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if ((a.front() == 0) != (b.front() == 0)) return a.front() == 0;
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });

  GPartition out;
  out.kappa_.assign(order, 0);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (Element g : parts[k]) out.kappa_[g] = k;
  out.parts_ = std::move(parts);
  return out;
}

GPartition GPartition::fine(const ConjClasses& classes) {
  return from_parts(classes.class_of.size(), classes.classes);
}

GPartition GPartition::maximal(std::size_t order) {
  std::vector<std::vector<Element>> parts{{0}};
  if (order > 1) {
    parts.emplace_back();
    for (Element g = 1; g < order; ++g) parts.back().push_back(g);
  }
  return from_parts(order, std::move(parts));
}

GPartition GPartition::from_class_blocks(const ConjClasses& classes,
                                         const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::vector<Element>> parts;
  parts.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::vector<Element> part;
    for (std::size_t c : block) {
      if (c >= classes.count())
        throw Error(ErrorCode::NotAPartition, "class index " + std::to_string(c) + " out of range");
      part.insert(part.end(), classes.classes[c].begin(), classes.classes[c].end());
    }
    parts.push_back(std::move(part));
  }
  return from_parts(classes.class_of.size(), std::move(parts));
}

bool is_invariant_partition(const ConjClasses& classes, const GPartition& partition) {
  if (partition.group_order() != classes.class_of.size())
    throw Error(ErrorCode::NotAPartition, "partition covers " +
                                              std::to_string(partition.group_order()) +
                                              " elements, group has " +
                                              std::to_string(classes.class_of.size()));
  if (partition.part_size(partition.kappa(0)) != 1) return false;
  for (const auto& cls : classes.classes) {
    std::size_t k = partition.kappa(cls.front());
    for (Element g : cls)
      if (partition.kappa(g) != k) return false;
  }
  return true;
}

bool is_invariant_partition(const FiniteGroup& group, const GPartition& partition) {
  return is_invariant_partition(conjugacy_classes(group), partition);
}

RestrictedGrowthStrings::RestrictedGrowthStrings(std::size_t n) : n_(n), a_(n, 0), max_(n, 0) {}

bool RestrictedGrowthStrings::next() {
  // Rightmost position that can still be incremented.
  for (std::size_t i = n_; i-- > 1;) {
    if (a_[i] <= max_[i - 1]) {
      ++a_[i];
      max_[i] = std::max(max_[i - 1], a_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        a_[j] = 0;
        max_[j] = max_[i];
      }
      return true;
    }
  }
  return false;
}

void for_each_invariant_partition(const ConjClasses& classes,
                                  const std::function<void(const GPartition&)>& visit) {
  const std::size_t order = classes.class_of.size();
  const std::size_t m = classes.count() - 1;  // non-identity classes are 1..count-1
  if (m == 0) {
    visit(GPartition::from_parts(order, {{0}}));
    return;
  }
  RestrictedGrowthStrings rgs(m);
  do {
    std::vector<std::vector<Element>> parts(rgs.blocks() + 1);
    parts[0] = {0};
    const auto& a = rgs.current();
    for (std::size_t c = 0; c < m; ++c) {
      const auto& cls = classes.classes[c + 1];
      parts[a[c] + 1].insert(parts[a[c] + 1].end(), cls.begin(), cls.end());
    }
    visit(GPartition::from_parts(order, std::move(parts)));
  } while (rgs.next());
}

std::size_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> next{row.back()};
    for (std::size_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace superdet
