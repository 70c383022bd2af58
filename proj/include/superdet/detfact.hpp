#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superdet/group.hpp"
#include "superdet/partition.hpp"
#include "superdet/poly.hpp"
#include "superdet/sct.hpp"

namespace superdet {

inline constexpr double kVerifyTol = 1e-6;
inline constexpr double kFactorDistinctTol = 1e-6;
inline constexpr double kMonicTol = 1e-9;
inline constexpr double kMultiplicityTol = 1e-4;
inline constexpr double kMatchRadius = 1e-5;
inline constexpr double kResampleBelow = 1e-3;

struct LinearFactor {
  std::vector<Complex> xi;  // coefficient per part variable; xi[0] == 1
  int multiplicity = 0;
};

/// prod_j (sum_k xi^j_k x_k)^{m_j}
struct LinearFactorization {
  std::size_t nvars = 0;
  std::vector<LinearFactor> factors;
  std::vector<std::string> labels;

  int total_degree() const;
  /// Monic, pairwise distinct and degree-consistent with `order`.
  bool invariants_hold(std::size_t order) const;
};

/// Entry (g, h) is the part index of g h^{-1}.
VarMatrix collapsed_matrix(const FiniteGroup& group, const GPartition& partition);
/// The full group matrix: one variable per element.
VarMatrix group_matrix(const FiniteGroup& group);
/// Labels of the part representatives.
std::vector<std::string> part_labels(const FiniteGroup& group, const GPartition& partition);

/// One factor per basic character with xi_k = chi(g_k) |K_k| / chi(1) and
/// multiplicity chi(1). DegenerateFactors if two factors coincide.
LinearFactorization predicted_factorization(const SuperTheory& theory,
                                            std::vector<std::string> labels = {});

/// Expanded product with floating coefficients.
ComplexPoly expand(const LinearFactorization& factorization);

struct VerifyOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  double tolerance = kVerifyTol;
  std::size_t symbolic_cap = kDefaultSymbolicCap;
};

struct VerificationReport {
  bool passed = false;
  double max_rel_error = 0.0;
  std::size_t trials = 0;
  bool symbolic_checked = false;
  bool symbolic_match = false;
  std::vector<Complex> witness;
};

/// Randomized identity test of det(M) against the factor product at Gaussian
/// integer points with coordinates in [-5, 5] (points where some factor is
/// smaller than 1e-3 are resampled). When dim <= symbolic_cap the exact
/// determinant is also compared with the expanded product rounded to
/// integer coefficients.
VerificationReport verify_factorization(const VarMatrix& matrix,
                                        const LinearFactorization& factorization,
                                        const VerifyOptions& options = {});

/// Throws IdentityFails naming the witness point.
void require_verified(const VerificationReport& report);

/// Rounds the expanded product to an integer polynomial; nullopt when some
/// coefficient is not within 1e-6 of a rational integer.
std::optional<SparsePoly> round_to_integer_poly(const ComplexPoly& p);

/// Spectral route from a G-invariant partition to the linear factors of the
/// collapsed determinant. The part-sum operators on the centre are
/// simultaneously diagonalized; their distinct joint eigenvalue vectors are
/// the factors. Returns nullopt when the number of distinct factors differs
/// from the number of parts (the partition is then not a supercharacter
/// theory). Multiplicities are |G| / sum_k |xi_k|^2 / |K_k|.
std::optional<LinearFactorization> spectral_factorization(const FiniteGroup& group,
                                                          const GPartition& partition,
                                                          const VerifyOptions& options = {});

/// chi_j(g_k) = m_j xi^j_k / |K_k|. DegreeMismatch unless chi_j(1) = m_j and
/// <chi_j, chi_j> = m_j.
struct ClassFunctionTable {
  std::vector<std::vector<Complex>> values;  // [j][k]
  std::vector<int> degrees;
};

ClassFunctionTable recover_characters(const LinearFactorization& factorization,
                                      const GPartition& partition);

/// Pairs each factor of `a` with a factor of `b` of equal multiplicity whose
/// coefficients lie within `radius`. Returns perm with a[i] ~ b[perm[i]].
std::optional<std::vector<std::size_t>> match_factors(const LinearFactorization& a,
                                                      const LinearFactorization& b,
                                                      double radius = kMatchRadius);

}  // namespace superdet
