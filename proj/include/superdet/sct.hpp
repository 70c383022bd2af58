#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "superdet/chartab.hpp"
#include "superdet/group.hpp"
#include "superdet/partition.hpp"

namespace superdet {

inline constexpr double kOmegaTol = 1e-7;
inline constexpr double kOmegaConsistencyTol = 1e-7;
inline constexpr double kColumnTol = 1e-6;
inline constexpr double kFormulaTol = 1e-6;
inline constexpr std::size_t kDefaultClassCap = 12;

/// Integer structure constants of a family of part sums:
/// K_j * K_k = sum_i a(i, j, k) K_i.
class StructureConstants {
 public:
  StructureConstants(std::size_t n, std::vector<std::int64_t> a) : n_(n), a_(std::move(a)) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return a_[(i * n_ + j) * n_ + k];
  }
  bool operator==(const StructureConstants& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

/// Exact convolution of the part indicator vectors. Returns nullopt as soon
/// as some product K*L is not constant on a part.
std::optional<StructureConstants> part_structure_constants(const FiniteGroup& group,
                                                           const GPartition& partition);

/// Central Schur ring test: the partition must be G-invariant with {1} alone,
/// and every product of part sums must be constant on every part.
bool check_schur_closure(const FiniteGroup& group, const GPartition& partition);
bool check_schur_closure(const FiniteGroup& group, const ConjClasses& classes,
                         const GPartition& partition);

/// Irreducible characters grouped by equal omega-vectors over the parts.
struct OmegaGrouping {
  std::vector<std::vector<std::size_t>> groups;  // ordered by smallest member
  /// Smallest max-coordinate distance between vectors in different groups.
  double min_separation = 0.0;
  /// Largest max-coordinate distance inside one group.
  double max_spread = 0.0;
  /// Some distance lies within a factor of 10 of the grouping tolerance.
  bool marginal = false;
};

OmegaGrouping omega_grouping(const CharacterTable& table, const GPartition& partition,
                             double tol = kOmegaTol);

/// Blocks of irreducible characters when the number of omega-classes equals
/// the number of parts, nullopt otherwise. Throws PartNotInvariant when a
/// part is not a union of conjugacy classes.
std::optional<std::vector<std::vector<std::size_t>>> check_via_omega(const CharacterTable& table,
                                                                     const GPartition& partition);

struct SuperTheory {
  std::size_t group_order = 0;
  GPartition partition;
  /// blocks[j] lists irreducible character indices; blocks[0] holds the
  /// trivial character.
  std::vector<std::vector<std::size_t>> blocks;
  /// basic_chars[j][k] = chi_j at the representative of part k.
  std::vector<std::vector<Complex>> basic_chars;
  std::vector<int> degrees;
  /// max over blocks j, parts K, psi in X_j of
  /// |omega_psi(K) - |K| chi_j(g_K) / chi_j(1)|
  double omega_residual = 0.0;

  std::size_t size() const noexcept { return blocks.size(); }
  Complex value(std::size_t j, Element g) const { return basic_chars[j][partition.kappa(g)]; }
};

/// Builds the basic characters sum_{psi in X} psi(1) psi and cross-checks
/// omega_psi(K) = |K| chi(g_K) / chi(1) for every psi in the block.
SuperTheory build_theory(const CharacterTable& table, const GPartition& partition,
                         std::vector<std::vector<std::size_t>> blocks);
/// Same, deriving the blocks with check_via_omega (BlocksInconsistent when
/// the partition is rejected).
SuperTheory build_theory(const CharacterTable& table, const GPartition& partition);

/// Computed by exact convolution and by the character formula; FormulaMismatch
/// when they differ after rounding or the rounding residual reaches 1e-6.
StructureConstants superclass_structure_constants(const FiniteGroup& group,
                                                  const SuperTheory& theory);

/// Character-formula value of a(C, K, L) before rounding.
Complex structure_constant_formula(const SuperTheory& theory, std::size_t c, std::size_t k,
                                   std::size_t l);

/// sum_chi chi(g) conj(chi(h)) / chi(1).
Complex column_orthogonality(const SuperTheory& theory, Element g, Element h);
/// Distance of column_orthogonality from |G| / |cl(g)| (same part) or 0.
double column_orthogonality_residual(const SuperTheory& theory, Element g, Element h);

struct Enumeration {
  std::vector<SuperTheory> theories;  // sorted by number of parts
  std::size_t candidates = 0;
  /// Candidates whose omega grouping was marginal.
  std::size_t marginal = 0;
};

/// Tests every G-invariant partition with {1} alone by exact closure and by
/// the omega criterion. The two verdicts must agree (CheckerDisagreement
/// otherwise). CapExceeded above `class_cap` conjugacy classes.
Enumeration enumerate_theories(const FiniteGroup& group, const CharacterTable& table,
                               std::size_t class_cap = kDefaultClassCap);

}  // namespace superdet
