#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "superdet/chartab.hpp"
#include "superdet/group.hpp"
#include "superdet/partition.hpp"
#include "superdet/poly.hpp"
#include "superdet/sct.hpp"

namespace superdet {

inline constexpr std::size_t kRegularDetSymbolicCap = 6;
inline constexpr double kQuadraticTol = 1e-7;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Right regular representation of the part-sum algebra: A_k has entries
/// (A_k)_{ij} = a_{ijk} where K_j K_k = sum_i a_{ijk} K_i.
struct RegularRep {
  std::vector<IntMatrix> matrices;
  std::vector<std::size_t> part_sizes;

  std::size_t size() const noexcept { return matrices.size(); }
};

/// NotClosed when the partition does not span a subalgebra.
RegularRep regular_rep(const FiniteGroup& group, const GPartition& partition);

/// Checks commutation, A_0 = I and sum_i a_{ijk} |K_i| = |K_j| |K_k|.
bool rep_invariants_hold(const RegularRep& rep);

/// Multiplication by each part sum on the centre Z(CG), written in the
/// conjugacy-class basis. Defined for every G-invariant partition, closed or
/// not; the joint eigenvalue vectors are (omega_psi(K))_K over all psi.
std::vector<Eigen::MatrixXd> center_operators(const ClassAlgebra& algebra,
                                              const ConjClasses& classes,
                                              const GPartition& partition);

/// Joint eigenvalue vectors r^(s) of the A_k, each satisfying
/// r_j r_k = sum_i a_{ijk} r_i (checked to 1e-7). Sorted largest first.
std::vector<std::vector<Complex>> eigen_solutions(const RegularRep& rep, std::uint64_t seed = 0);

/// Largest residual of the quadratic relation over all (j, k).
double quadratic_residual(const RegularRep& rep, const std::vector<Complex>& r);

struct RegularDetReport {
  bool passed = false;
  bool symbolic = false;
  double max_error = 0.0;
  std::size_t trials = 0;
  std::vector<Complex> witness;
};

/// det(sum_k A_k x_k) against prod_chi (sum_k chi(g_k)|K_k|/chi(1) x_k).
/// Symbolic coefficient comparison (tolerance 1e-8) up to 6 parts,
/// randomized identity testing (20 trials, 1e-6) beyond.
RegularDetReport verify_regular_determinant(const RegularRep& rep, const SuperTheory& theory,
                                            std::uint64_t seed = 0, std::size_t trials = 20);

/// Throws IdentityFails with the witness when the report did not pass.
void require_regular_determinant(const RegularDetReport& report);

}  // namespace superdet
