#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "superdet/poly.hpp"

namespace superdet {

inline constexpr int kEigensplitAttempts = 8;

/// One joint eigenvalue of a commuting family: values[k] is the eigenvalue of
/// the k-th operator on the joint eigenspace, `multiplicity` its dimension.
struct JointEigenvalue {
  std::vector<Complex> values;
  std::size_t multiplicity = 0;
};

struct JointSpectrumOptions {
  std::uint64_t seed = 0;
  int max_attempts = kEigensplitAttempts;
  /// Every joint eigenspace must be one-dimensional.
  bool require_simple = false;
};

/// Simultaneous diagonalization of a commuting family of diagonalizable real
/// matrices. A random real combination is eigen-decomposed; clustered
/// eigenvalues are resolved through the null space of (B - lambda I) and each
/// basis vector is checked to be a joint eigenvector of every operator. Any
/// failure triggers a new combination; EigensplitFailed after max_attempts.
std::vector<JointEigenvalue> joint_spectrum(std::span<const Eigen::MatrixXd> ops,
                                            const JointSpectrumOptions& options);

/// Orders complex vectors lexicographically by (real, imag) on a 1e-6 grid,
/// largest first.
bool rounded_lex_greater(std::span<const Complex> a, std::span<const Complex> b);

/// Max absolute coordinate difference.
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace superdet
