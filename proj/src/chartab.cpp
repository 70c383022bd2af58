#include "superdet/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "superdet/error.hpp"
#include "superdet/spectral.hpp"

namespace superdet {

ClassAlgebra::ClassAlgebra(std::size_t nclasses, std::vector<std::int64_t> constants,
                           std::vector<std::size_t> sizes)
    : n_(nclasses), a_(std::move(constants)), sizes_(std::move(sizes)) {
  if (a_.size() != n_ * n_ * n_ || sizes_.size() != n_)
    throw Error(ErrorCode::LengthMismatch, "class algebra dimensions");
}

Eigen::MatrixXd ClassAlgebra::multiplication_matrix(std::size_t k) const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>((*this)(j, k, i));
  return m;
}

ClassAlgebra class_structure_constants(const FiniteGroup& group, const ConjClasses& classes) {
  const std::size_t nc = classes.count();
  std::vector<std::int64_t> a(nc * nc * nc, 0);
  // Coefficient of C_i in C_j C_k counts pairs (x, y) with x in C_j,
  // y in C_k and xy equal to the representative of C_i.
  for (std::size_t i = 0; i < nc; ++i) {
    Element r = classes.classes[i].front();
    for (Element x = 0; x < group.order(); ++x) {
      Element y = group.mul(group.inv(x), r);
      ++a[(i * nc + classes.class_of[x]) * nc + classes.class_of[y]];
    }
  }
  return ClassAlgebra(nc, std::move(a), classes.sizes);
}

double orthogonality_residual(const CharacterTable& t) {
  const std::size_t n = t.size();
  const double order = static_cast<double>(t.group_order);
  double worst = 0.0;
  long degree_squares = 0;
  for (int d : t.degrees) degree_squares += static_cast<long>(d) * d;
  worst = std::max(worst, std::abs(static_cast<double>(degree_squares) - order) / order);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        s += static_cast<double>(t.sizes()[j]) * t.values[i][j] * std::conj(t.values[i2][j]);
      s /= order;
      worst = std::max(worst, std::abs(s - (i == i2 ? 1.0 : 0.0)));
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += t.values[i][j] * std::conj(t.values[i][j2]);
      double target_j = order / static_cast<double>(t.sizes()[j]);
      double target_j2 = order / static_cast<double>(t.sizes()[j2]);
      double expected = j == j2 ? target_j : 0.0;
      worst = std::max(worst, std::abs(s - expected) / std::sqrt(target_j * target_j2));
    }
  return worst;
}

CharacterTable character_table(const FiniteGroup& group, std::uint64_t seed) {
  return character_table(group, conjugacy_classes(group), seed);
}

CharacterTable character_table(const FiniteGroup& group, const ConjClasses& classes,
                               std::uint64_t seed) {
  const ClassAlgebra algebra = class_structure_constants(group, classes);
  const std::size_t nc = classes.count();
  std::vector<Eigen::MatrixXd> ops;
  ops.reserve(nc);
  for (std::size_t k = 0; k < nc; ++k) ops.push_back(algebra.multiplication_matrix(k));

  JointSpectrumOptions options;
  options.seed = seed;
  options.require_simple = true;
  const auto spectrum = joint_spectrum(ops, options);
  if (spectrum.size() != nc)
    throw Error(ErrorCode::EigensplitFailed, "expected " + std::to_string(nc) +
                                                 " central characters, found " +
                                                 std::to_string(spectrum.size()));

  const double order = static_cast<double>(group.order());
  CharacterTable table;
  table.group_order = group.order();
  table.classes = classes;
  table.seed = seed;
  for (const auto& je : spectrum) {
    const auto& w = je.values;  // w[j] = omega(C_j)
    double norm = 0.0;
    for (std::size_t j = 0; j < nc; ++j) norm += std::norm(w[j]) / static_cast<double>(classes.sizes[j]);
    double d = std::sqrt(order / norm);
    double rounded = std::round(d);
    if (rounded < 1.0 || std::abs(d - rounded) > kDegreeRoundTol)
      throw Error(ErrorCode::OrthogonalityViolation,
                  "character degree " + std::to_string(d) + " is not near an integer");
    std::vector<Complex> row(nc);
    for (std::size_t j = 0; j < nc; ++j) row[j] = rounded * w[j] / static_cast<double>(classes.sizes[j]);
    row[0] = rounded;
    table.values.push_back(std::move(row));
    table.degrees.push_back(static_cast<int>(rounded));
  }

  std::vector<std::size_t> order_idx(nc);
  std::iota(order_idx.begin(), order_idx.end(), std::size_t{0});
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    return rounded_lex_greater(table.values[a], table.values[b]);
  });
  CharacterTable sorted = table;
  for (std::size_t r = 0; r < nc; ++r) {
    sorted.values[r] = table.values[order_idx[r]];
    sorted.degrees[r] = table.degrees[order_idx[r]];
  }

  double residual = orthogonality_residual(sorted);
  if (residual > kCharacterTol)
    throw Error(ErrorCode::OrthogonalityViolation,
                "orthogonality residual " + std::to_string(residual) + " exceeds tolerance");
  return sorted;
}

Complex omega(const CharacterTable& table, std::size_t psi, std::span<const Element> part) {
  if (psi >= table.size()) throw Error(ErrorCode::InvalidInput, "character index out of range");
  const auto& cls = table.classes;
  std::vector<std::size_t> hits(cls.count(), 0);
  for (Element g : part) {
    if (g >= cls.class_of.size()) throw Error(ErrorCode::InvalidInput, "element out of range");
    ++hits[cls.class_of[g]];
  }
  Complex sum = 0.0;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    if (hits[c] == 0) continue;
    if (hits[c] != cls.sizes[c])
      throw Error(ErrorCode::PartNotInvariant,
                  "part meets class " + std::to_string(c) + " without containing it");
    sum += static_cast<double>(cls.sizes[c]) * table.values[psi][c];
  }
  return sum / static_cast<double>(table.degrees[psi]);
}

}  // namespace superdet
