#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "superdet/group.hpp"
#include "superdet/poly.hpp"

namespace superdet {

inline constexpr double kCharacterTol = 1e-8;
inline constexpr double kDegreeRoundTol = 1e-6;

/// Structure constants of the class algebra: C_j * C_k = sum_i a(i, j, k) C_i.
class ClassAlgebra {
 public:
  ClassAlgebra(std::size_t nclasses, std::vector<std::int64_t> constants,
               std::vector<std::size_t> sizes);

  std::size_t nclasses() const noexcept { return n_; }
  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * n_ + j) * n_ + k];
  }
  /// (M_k)_{ij} = a(j, k, i), the transpose of multiplication by C_k in the
  /// class-sum basis. Its right eigenvectors are the central character
  /// vectors (omega(C_j))_j with eigenvalue omega(C_k).
  Eigen::MatrixXd multiplication_matrix(std::size_t k) const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> a_;
  std::vector<std::size_t> sizes_;
};

ClassAlgebra class_structure_constants(const FiniteGroup& group, const ConjClasses& classes);

struct CharacterTable {
  std::size_t group_order = 0;
  ConjClasses classes;
  /// values[i][j] = chi_i on class j.
  std::vector<std::vector<Complex>> values;
  std::vector<int> degrees;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return values.size(); }
  const std::vector<std::size_t>& sizes() const noexcept { return classes.sizes; }
  /// Character value at a group element.
  Complex at(std::size_t psi, Element g) const { return values[psi][classes.class_of[g]]; }
};

/// Rows sorted by ascending degree, then descending value tuple (so the
/// trivial character is row 0). Verifies degree sum and both orthogonality
/// relations before returning.
CharacterTable character_table(const FiniteGroup& group, std::uint64_t seed = 0);
CharacterTable character_table(const FiniteGroup& group, const ConjClasses& classes,
                               std::uint64_t seed = 0);

/// Largest violation of row orthogonality, column orthogonality and the
/// degree-square sum. Used by character_table and by tests.
double orthogonality_residual(const CharacterTable& table);

/// Central character omega_psi evaluated on the sum of `part`, which must be
/// a union of conjugacy classes (PartNotInvariant otherwise).
Complex omega(const CharacterTable& table, std::size_t psi, std::span<const Element> part);

}  // namespace superdet
