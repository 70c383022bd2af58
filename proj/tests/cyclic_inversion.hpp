#pragma once

// Inversion-orbit partition of C_n ({1}, {a^k, a^-k}) and its closed-form
// factorization in terms of 2cos(2 pi j k / n).

#include <cmath>
#include <numbers>
#include <vector>

#include "superdet/detfact.hpp"

namespace cyclic_inversion {

/// Element i of groups::cyclic(n) / the fixture C_n is a^i.
inline superdet::GPartition partition(std::size_t n) {
  std::vector<std::vector<superdet::Element>> parts = {{0}};
  for (std::size_t k = 1; 2 * k < n; ++k)
    parts.push_back({static_cast<superdet::Element>(k), static_cast<superdet::Element>(n - k)});
  if (n % 2 == 0) parts.push_back({static_cast<superdet::Element>(n / 2)});
  return superdet::GPartition::from_parts(n, std::move(parts));
}

/// Factors ordered as written: Delta (or the two factors of Lambda) first,
/// then j = 1, 2, ... Coefficients are indexed like `partition(n)`.
inline superdet::LinearFactorization expected(std::size_t n) {
  const auto p = partition(n);
  const double pi = std::numbers::pi;
  auto slot = [&](std::size_t k) { return p.kappa(static_cast<superdet::Element>(k)); };
  superdet::LinearFactorization f;
  f.nvars = p.size();
  const std::size_t half = n / 2;
  const std::size_t pairs = n % 2 ? (n - 1) / 2 : half - 1;

  auto base = [&] { return std::vector<superdet::Complex>(p.size(), 0.0); };
  {
    auto xi = base();
    xi[0] = 1.0;
    for (std::size_t k = 1; k <= pairs; ++k) xi[slot(k)] = 2.0;
    if (n % 2 == 0) xi[slot(half)] = 1.0;
    f.factors.push_back({xi, 1});
  }
  if (n % 2 == 0) {
    auto xi = base();
    xi[0] = 1.0;
    for (std::size_t k = 1; k <= pairs; ++k) xi[slot(k)] = k % 2 ? -2.0 : 2.0;
    xi[slot(half)] = half % 2 ? -1.0 : 1.0;
    f.factors.push_back({xi, 1});
  }
  for (std::size_t j = 1; j <= pairs; ++j) {
    auto xi = base();
    xi[0] = 1.0;
    for (std::size_t k = 1; k <= pairs; ++k)
      xi[slot(k)] = 2 * std::cos(2 * pi * static_cast<double>(j * k) / static_cast<double>(n));
    if (n % 2 == 0) xi[slot(half)] = j % 2 ? -1.0 : 1.0;
    f.factors.push_back({xi, 2});
  }
  return f;
}

}  // namespace cyclic_inversion
