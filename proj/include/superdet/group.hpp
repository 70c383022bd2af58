#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace superdet {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 5040;
inline constexpr std::size_t kFullAssociativityCheckMax = 64;

/// Finite group stored as a Cayley table. The identity is always element 0.
/// Immutable after construction.
class FiniteGroup {
 public:
  /// Validates a multiplication table (Latin square, identity, associativity)
  /// and relabels so that the identity becomes index 0. Elements are swapped
  /// with 0 only when the identity sits elsewhere; all other indices keep
  /// their position.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                                       std::vector<std::string> labels = {});

  /// Closure of the generators under composition. Element order is the BFS
  /// discovery order from the identity, multiplying on the right by each
  /// generator in turn. The product p*q applies p first, then q.
  static FiniteGroup from_permutations(std::span<const std::string> generators,
                                       std::size_t degree,
                                       std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  /// a * b^{-1}
  Element div(Element a, Element b) const noexcept { return mul(a, inverse_[b]); }
  Element conjugate(Element g, Element h) const noexcept { return mul(mul(inverse_[h], g), h); }

  bool is_abelian() const;
  std::vector<std::vector<Element>> cayley_table() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  FiniteGroup& set_name(std::string name) {
    name_ = std::move(name);
    return *this;
  }

 private:
  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

struct ConjClasses {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return classes.size(); }
};

/// Classes are sorted by (size, smallest member); each class is sorted.
ConjClasses conjugacy_classes(const FiniteGroup& group);

/// Parses one permutation in cycle notation, e.g. "(0 1 2)(3 4)" or "()".
/// Returns the image array.
std::vector<Element> parse_cycles(const std::string& text, std::size_t degree);

namespace groups {

FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n acting on the n-gon.
FiniteGroup dihedral(std::size_t n);
FiniteGroup quaternion();
/// Dicyclic group of order 4m: <a, b | a^{2m}, b^2 = a^m, b a b^{-1} = a^{-1}>.
FiniteGroup dicyclic(std::size_t m);
FiniteGroup symmetric(std::size_t degree);
FiniteGroup alternating4();
/// Direct product of cyclic groups, built on disjoint point sets.
FiniteGroup abelian(std::span<const std::size_t> orders);

}  // namespace groups

}  // namespace superdet
