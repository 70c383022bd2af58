#include "superdet/sct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "superdet/error.hpp"
#include "superdet/spectral.hpp"

namespace superdet {

namespace {

// Conjugacy classes making up each part; PartNotInvariant if a part splits
// a class.
std::vector<std::vector<std::size_t>> classes_per_part(const ConjClasses& classes,
                                                       const GPartition& partition) {
  if (partition.group_order() != classes.class_of.size())
    throw Error(ErrorCode::NotAPartition, "partition and group have different orders");
  std::vector<std::vector<std::size_t>> out(partition.size());
  for (std::size_t c = 0; c < classes.count(); ++c) {
    std::size_t k = partition.kappa(classes.classes[c].front());
    for (Element g : classes.classes[c])
      if (partition.kappa(g) != k)
        throw Error(ErrorCode::PartNotInvariant,
                    "conjugacy class " + std::to_string(c) + " is split across parts");
    out[k].push_back(c);
  }
  return out;
}

std::string describe(const GPartition& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    os << (k ? ", " : "") << "[";
    for (std::size_t i = 0; i < p.part(k).size(); ++i) os << (i ? "," : "") << p.part(k)[i];
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

std::optional<StructureConstants> part_structure_constants(const FiniteGroup& group,
                                                           const GPartition& partition) {
  const std::size_t n = group.order();
  const std::size_t ell = partition.size();
  if (partition.group_order() != n)
    throw Error(ErrorCode::NotAPartition, "partition and group have different orders");
  std::vector<std::int64_t> a(ell * ell * ell, 0);
  std::vector<std::int64_t> conv(n);
  for (std::size_t j = 0; j < ell; ++j)
    for (std::size_t k = 0; k < ell; ++k) {
      std::fill(conv.begin(), conv.end(), 0);
      for (Element x : partition.part(j))
        for (Element y : partition.part(k)) ++conv[group.mul(x, y)];
      for (std::size_t i = 0; i < ell; ++i) {
        const auto& part = partition.part(i);
        std::int64_t v = conv[part.front()];
        for (Element g : part)
          if (conv[g] != v) return std::nullopt;
        a[(i * ell + j) * ell + k] = v;
      }
    }
  return StructureConstants(ell, std::move(a));
}

bool check_schur_closure(const FiniteGroup& group, const ConjClasses& classes,
                         const GPartition& partition) {
  if (!is_invariant_partition(classes, partition)) return false;
  return part_structure_constants(group, partition).has_value();
}

bool check_schur_closure(const FiniteGroup& group, const GPartition& partition) {
  return check_schur_closure(group, conjugacy_classes(group), partition);
}

OmegaGrouping omega_grouping(const CharacterTable& table, const GPartition& partition,
                             double tol) {
  const auto per_part = classes_per_part(table.classes, partition);
  const std::size_t nchar = table.size();
  const std::size_t ell = partition.size();

  std::vector<std::vector<Complex>> vec(nchar, std::vector<Complex>(ell));
  for (std::size_t psi = 0; psi < nchar; ++psi)
    for (std::size_t k = 0; k < ell; ++k) {
      Complex s = 0.0;
      for (std::size_t c : per_part[k])
        s += static_cast<double>(table.classes.sizes[c]) * table.values[psi][c];
      vec[psi][k] = s / static_cast<double>(table.degrees[psi]);
    }

  OmegaGrouping out;
  for (std::size_t psi = 0; psi < nchar; ++psi) {
    bool placed = false;
    for (auto& g : out.groups) {
      if (max_abs_diff(vec[psi], vec[g.front()]) <= tol) {
        g.push_back(psi);
        placed = true;
        break;
      }
    }
    if (!placed) out.groups.push_back({psi});
  }

  out.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < out.groups.size(); ++a) {
    for (std::size_t x : out.groups[a])
      out.max_spread = std::max(out.max_spread, max_abs_diff(vec[x], vec[out.groups[a].front()]));
    for (std::size_t b = a + 1; b < out.groups.size(); ++b)
      out.min_separation = std::min(
          out.min_separation, max_abs_diff(vec[out.groups[a].front()], vec[out.groups[b].front()]));
  }
  out.marginal = out.min_separation < 10 * tol || out.max_spread > tol / 10;
  return out;
}

std::optional<std::vector<std::vector<std::size_t>>> check_via_omega(const CharacterTable& table,
                                                                     const GPartition& partition) {
  auto grouping = omega_grouping(table, partition);
  if (grouping.groups.size() != partition.size()) return std::nullopt;
  return std::move(grouping.groups);
}

SuperTheory build_theory(const CharacterTable& table, const GPartition& partition) {
  auto blocks = check_via_omega(table, partition);
  if (!blocks)
    throw Error(ErrorCode::BlocksInconsistent,
                "partition " + describe(partition) + " is not a supercharacter theory");
  return build_theory(table, partition, std::move(*blocks));
}

SuperTheory build_theory(const CharacterTable& table, const GPartition& partition,
                         std::vector<std::vector<std::size_t>> blocks) {
  const auto per_part = classes_per_part(table.classes, partition);
  const std::size_t nchar = table.size();
  const std::size_t ell = partition.size();
  if (blocks.size() != ell)
    throw Error(ErrorCode::BlocksInconsistent, std::to_string(blocks.size()) + " blocks for " +
                                                   std::to_string(ell) + " parts");
  std::vector<int> seen(nchar, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::BlocksInconsistent, "empty block");
    std::sort(b.begin(), b.end());
    for (std::size_t psi : b) {
      if (psi >= nchar || seen[psi]++)
        throw Error(ErrorCode::BlocksInconsistent, "blocks do not partition the characters");
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(nchar))
    throw Error(ErrorCode::BlocksInconsistent, "blocks do not cover every character");
  std::sort(blocks.begin(), blocks.end());
  if (blocks.front() != std::vector<std::size_t>{0})
    throw Error(ErrorCode::BlocksInconsistent, "trivial character is not alone in its block");

  SuperTheory t;
  t.group_order = table.group_order;
  t.partition = partition;
  t.blocks = std::move(blocks);
  t.basic_chars.assign(ell, std::vector<Complex>(ell));
  t.degrees.assign(ell, 0);

  for (std::size_t j = 0; j < ell; ++j) {
    for (std::size_t psi : t.blocks[j]) t.degrees[j] += table.degrees[psi] * table.degrees[psi];
    for (std::size_t k = 0; k < ell; ++k) {
      // Value on every class of the part; must be constant across the part.
      Complex first = 0.0;
      for (std::size_t idx = 0; idx < per_part[k].size(); ++idx) {
        Complex v = 0.0;
        for (std::size_t psi : t.blocks[j])
          v += static_cast<double>(table.degrees[psi]) * table.values[psi][per_part[k][idx]];
        if (idx == 0)
          first = v;
        else if (std::abs(v - first) > kOmegaConsistencyTol)
          throw Error(ErrorCode::BlocksInconsistent,
                      "basic character " + std::to_string(j) + " is not constant on part " +
                          std::to_string(k));
      }
      t.basic_chars[j][k] = first;
    }
  }

  for (std::size_t j = 0; j < ell; ++j) {
    const double m = t.degrees[j];
    for (std::size_t k = 0; k < ell; ++k) {
      const double size = static_cast<double>(partition.part_size(k));
      const Complex predicted = size * t.basic_chars[j][k] / m;
      for (std::size_t psi : t.blocks[j]) {
        Complex w = 0.0;
        for (std::size_t c : per_part[k])
          w += static_cast<double>(table.classes.sizes[c]) * table.values[psi][c];
        w /= static_cast<double>(table.degrees[psi]);
        t.omega_residual = std::max(t.omega_residual, std::abs(w - predicted));
      }
    }
  }
  if (t.omega_residual > kOmegaConsistencyTol)
    throw Error(ErrorCode::BlocksInconsistent,
                "omega values disagree with basic characters (residual " +
                    std::to_string(t.omega_residual) + ")");
  return t;
}

Complex structure_constant_formula(const SuperTheory& t, std::size_t c, std::size_t k,
                                   std::size_t l) {
  Complex s = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double m = t.degrees[j];
    s += t.basic_chars[j][k] * t.basic_chars[j][l] * std::conj(t.basic_chars[j][c]) / (m * m);
  }
  const double sizes = static_cast<double>(t.partition.part_size(k) * t.partition.part_size(l));
  return sizes / static_cast<double>(t.group_order) * s;
}

StructureConstants superclass_structure_constants(const FiniteGroup& group,
                                                  const SuperTheory& theory) {
  auto exact = part_structure_constants(group, theory.partition);
  if (!exact)
    throw Error(ErrorCode::FormulaMismatch, "partition " + describe(theory.partition) +
                                                " is not closed under multiplication");
  const std::size_t ell = theory.size();
  for (std::size_t c = 0; c < ell; ++c)
    for (std::size_t k = 0; k < ell; ++k)
      for (std::size_t l = 0; l < ell; ++l) {
        Complex f = structure_constant_formula(theory, c, k, l);
        double rounded = std::round(f.real());
        double residual = std::abs(f - rounded);
        if (residual >= kFormulaTol || static_cast<std::int64_t>(rounded) != (*exact)(c, k, l)) {
          std::ostringstream msg;
          msg << "a(" << c << "," << k << "," << l << "): formula " << f.real() << "+"
              << f.imag() << "i, convolution " << (*exact)(c, k, l);
          throw Error(ErrorCode::FormulaMismatch, msg.str());
        }
      }
  return *exact;
}

Complex column_orthogonality(const SuperTheory& t, Element g, Element h) {
  Complex s = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j)
    s += t.value(j, g) * std::conj(t.value(j, h)) / static_cast<double>(t.degrees[j]);
  return s;
}

double column_orthogonality_residual(const SuperTheory& t, Element g, Element h) {
  const std::size_t kg = t.partition.kappa(g);
  const double expected = kg == t.partition.kappa(h)
                              ? static_cast<double>(t.group_order) /
                                    static_cast<double>(t.partition.part_size(kg))
                              : 0.0;
  return std::abs(column_orthogonality(t, g, h) - expected);
}

Enumeration enumerate_theories(const FiniteGroup& group, const CharacterTable& table,
                               std::size_t class_cap) {
  const auto& classes = table.classes;
  if (classes.count() > class_cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(classes.count()) +
                                            " conjugacy classes exceed the enumeration cap " +
                                            std::to_string(class_cap));
  Enumeration out;
  for_each_invariant_partition(classes, [&](const GPartition& p) {
    ++out.candidates;
    const bool schur = check_schur_closure(group, classes, p);
    auto grouping = omega_grouping(table, p);
    bool omega = grouping.groups.size() == p.size();
    if (grouping.marginal) ++out.marginal;
    if (schur != omega && grouping.marginal) {
      // Within 10x of the tolerance the exact verdict decides; the grouping
      // is redone at the looser tolerance to recover blocks.
      grouping = omega_grouping(table, p, 10 * kOmegaTol);
      omega = grouping.groups.size() == p.size();
    }
    if (schur != omega)
      throw Error(ErrorCode::CheckerDisagreement,
                  "partition " + describe(p) + ": closure says " + (schur ? "yes" : "no") +
                      ", omega criterion says " + (omega ? "yes" : "no"));
    if (schur) out.theories.push_back(build_theory(table, p, std::move(grouping.groups)));
  });
  std::stable_sort(out.theories.begin(), out.theories.end(),
                   [](const SuperTheory& a, const SuperTheory& b) { return a.size() < b.size(); });
  return out;
}

}  // namespace superdet
